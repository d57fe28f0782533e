#include "gysin/linalg.hpp"

#include <algorithm>

namespace gysin {

void SparseMatrix::check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw Error("matrix index out of range");
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.row_[i][i] = Rational(1);
    return m;
}

void SparseMatrix::set(int r, int c, const Rational& v) {
    check(r, c);
    if (v.is_zero())
        row_[r].erase(c);
    else
        row_[r][c] = v;
}

void SparseMatrix::add(int r, int c, const Rational& v) {
    check(r, c);
    auto it = row_[r].find(c);
    if (it == row_[r].end()) {
        if (!v.is_zero()) row_[r][c] = v;
        return;
    }
    it->second += v;
    if (it->second.is_zero()) row_[r].erase(it);
}

Rational SparseMatrix::get(int r, int c) const {
    check(r, c);
    auto it = row_[r].find(c);
    return it == row_[r].end() ? Rational(0) : it->second;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : row_) n += r.size();
    return n;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    SparseMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [k, v] : row_[i])
            for (const auto& [j, w] : o.row_[k]) out.add(i, j, v * w);
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
    SparseMatrix out = *this;
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : o.row_[i]) out.add(i, j, v);
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    return *this + o.scaled(Rational(-1));
}

SparseMatrix SparseMatrix::scaled(const Rational& s) const {
    SparseMatrix out(rows_, cols_);
    if (s.is_zero()) return out;
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : row_[i]) out.row_[i][j] = v * s;
    return out;
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw Error("matrix apply shape mismatch");
    std::vector<Rational> out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : row_[i]) out[i] += v * x[j];
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : row_[i]) out.row_[j][i] = v;
    return out;
}

SparseMatrix SparseMatrix::select_columns(const std::vector<int>& which) const {
    SparseMatrix out(rows_, static_cast<int>(which.size()));
    for (int i = 0; i < rows_; ++i)
        for (int c = 0; c < static_cast<int>(which.size()); ++c) {
            auto it = row_[i].find(which[c]);
            if (it != row_[i].end()) out.row_[i][c] = it->second;
        }
    return out;
}

std::vector<Rational> SparseMatrix::column(int c) const {
    std::vector<Rational> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = get(i, c);
    return out;
}

void SparseMatrix::set_column(int c, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != rows_) throw Error("set_column shape mismatch");
    for (int i = 0; i < rows_; ++i) set(i, c, v[i]);
}

SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows()) throw Error("hstack shape mismatch");
    SparseMatrix out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (const auto& [j, v] : a.row(i)) out.set(i, j, v);
        for (const auto& [j, v] : b.row(i)) out.set(i, a.cols() + j, v);
    }
    return out;
}

SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.cols()) throw Error("vstack shape mismatch");
    SparseMatrix out(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (const auto& [j, v] : a.row(i)) out.set(i, j, v);
    for (int i = 0; i < b.rows(); ++i)
        for (const auto& [j, v] : b.row(i)) out.set(a.rows() + i, j, v);
    return out;
}

RrefResult rref(const SparseMatrix& m) {
    RrefResult res;
    res.mat = m;
    auto& a = res.mat;
    int cur = 0;
    for (int col = 0; col < m.cols() && cur < m.rows(); ++col) {
        int piv = -1;
        for (int r = cur; r < m.rows(); ++r)
            if (!a.get(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != cur) {
            // swap rows piv and cur
            for (int c = 0; c < m.cols(); ++c) {
                Rational t = a.get(cur, c);
                a.set(cur, c, a.get(piv, c));
                a.set(piv, c, t);
            }
        }
        Rational inv = a.get(cur, col).inverse();
        std::vector<std::pair<int, Rational>> pivot_row(a.row(cur).begin(), a.row(cur).end());
        for (auto& [c, v] : pivot_row) {
            v = v * inv;
            a.set(cur, c, v);
        }
        for (int r = 0; r < m.rows(); ++r) {
            if (r == cur) continue;
            Rational f = a.get(r, col);
            if (f.is_zero()) continue;
            for (const auto& [c, v] : pivot_row) a.add(r, c, -(f * v));
        }
        res.pivots.push_back(col);
        ++cur;
    }
    return res;
}

int rank(const SparseMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

SubspaceBasis kernel(const SparseMatrix& m) {
    RrefResult r = rref(m);
    std::vector<int> free_cols;
    {
        std::size_t pi = 0;
        for (int c = 0; c < m.cols(); ++c) {
            if (pi < r.pivots.size() && r.pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    SubspaceBasis out;
    out.ambient_dim = m.cols();
    out.basis = SparseMatrix(m.cols(), static_cast<int>(free_cols.size()));
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        int fc = free_cols[k];
        out.basis.set(fc, k, Rational(1));
        for (int pi = 0; pi < static_cast<int>(r.pivots.size()); ++pi)
            out.basis.set(r.pivots[pi], k, -r.mat.get(pi, fc));
    }
    return out;
}

SubspaceBasis image(const SparseMatrix& m) {
    RrefResult r = rref(m);
    SubspaceBasis out;
    out.ambient_dim = m.rows();
    out.basis = m.select_columns(r.pivots);
    return out;
}

bool contains(const SubspaceBasis& space, const SparseMatrix& vecs) {
    if (space.ambient_dim != vecs.rows()) throw Error("containment shape mismatch");
    if (vecs.cols() == 0) return true;
    int r0 = rank(space.basis);
    return rank(hstack(space.basis, vecs)) == r0;
}

QuotientResult quotient_complement(const SubspaceBasis& sub, const SubspaceBasis& total) {
    if (sub.ambient_dim != total.ambient_dim) throw Error("quotient shape mismatch");
    if (!contains(total, sub.basis)) throw Error("not a subspace");
    QuotientResult out;
    out.dim = total.dim() - sub.dim();
    // Greedily extend sub by columns of total, lowest index first.
    SparseMatrix acc = sub.basis;
    std::vector<int> chosen;
    int r = rank(acc);
    for (int c = 0; c < total.dim() && static_cast<int>(chosen.size()) < out.dim; ++c) {
        SparseMatrix cand = hstack(acc, total.basis.select_columns({c}));
        int r2 = rank(cand);
        if (r2 > r) {
            acc = cand;
            r = r2;
            chosen.push_back(c);
        }
    }
    out.complement.ambient_dim = total.ambient_dim;
    out.complement.basis = total.basis.select_columns(chosen);
    return out;
}

std::optional<std::vector<Rational>> solve(const SparseMatrix& m, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw Error("solve shape mismatch");
    SparseMatrix rhs(m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) rhs.set(i, 0, b[i]);
    RrefResult r = rref(hstack(m, rhs));
    for (int c : r.pivots)
        if (c == m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols());
    for (int pi = 0; pi < static_cast<int>(r.pivots.size()); ++pi)
        x[r.pivots[pi]] = r.mat.get(pi, m.cols());
    return x;
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim != b.ambient_dim) throw Error("intersect shape mismatch");
    // ker [A | -B]: the A-part of each kernel vector parametrizes A x = B y.
    SubspaceBasis k = kernel(hstack(a.basis, b.basis.scaled(Rational(-1))));
    SparseMatrix xs(a.dim(), k.dim());
    for (int c = 0; c < k.dim(); ++c)
        for (int r = 0; r < a.dim(); ++r) xs.set(r, c, k.basis.get(r, c));
    SubspaceBasis out = image(a.basis * xs);
    out.ambient_dim = a.ambient_dim;
    return out;
}

SubspaceBasis span_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim != b.ambient_dim) throw Error("span_sum shape mismatch");
    SubspaceBasis out = image(hstack(a.basis, b.basis));
    out.ambient_dim = a.ambient_dim;
    return out;
}

}  // namespace gysin
