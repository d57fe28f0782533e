#include "gysin/dcomplex.hpp"

#include <set>

namespace gysin {

int DoubleComplex::dim(Degree d) const {
    auto it = components.find(d);
    return it == components.end() ? 0 : it->second;
}

SparseMatrix DoubleComplex::block1(Degree d) const {
    auto it = d1.find(d);
    if (it != d1.end()) return it->second;
    return SparseMatrix(dim({d.p + 1, d.q}), dim(d));
}

SparseMatrix DoubleComplex::block2(Degree d) const {
    auto it = d2.find(d);
    if (it != d2.end()) return it->second;
    return SparseMatrix(dim({d.p, d.q + 1}), dim(d));
}

void DoubleComplex::set_d1(Degree d, SparseMatrix m) {
    if (m.rows() != dim({d.p + 1, d.q}) || m.cols() != dim(d))
        throw Error("d1 block shape mismatch at (" + std::to_string(d.p) + "," +
                    std::to_string(d.q) + ")");
    if (m.nnz() == 0) return;
    d1[d] = std::move(m);
}

void DoubleComplex::set_d2(Degree d, SparseMatrix m) {
    if (m.rows() != dim({d.p, d.q + 1}) || m.cols() != dim(d))
        throw Error("d2 block shape mismatch at (" + std::to_string(d.p) + "," +
                    std::to_string(d.q) + ")");
    if (m.nnz() == 0) return;
    d2[d] = std::move(m);
}

static std::string at(Degree d) {
    return "(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
}

CheckReport DoubleComplex::validate() const {
    CheckReport rep;
    SparseMatrix zero;
    for (const auto& [d, n] : components) {
        Degree up{d.p, d.q + 1}, right{d.p + 1, d.q};
        if (!((block1(right) * block1(d)).nnz() == 0)) rep.fail("d1.d1 != 0 at " + at(d));
        if (!((block2(up) * block2(d)).nnz() == 0)) rep.fail("d2.d2 != 0 at " + at(d));
        SparseMatrix anti = block2(right) * block1(d) + block1(up) * block2(d);
        if (anti.nnz() != 0) rep.fail("d1 d2 + d2 d1 != 0 at " + at(d));
    }
    for (const auto& [d, m] : d1)
        if (m.rows() != dim({d.p + 1, d.q}) || m.cols() != dim(d))
            rep.fail("stray d1 block at " + at(d));
    for (const auto& [d, m] : d2)
        if (m.rows() != dim({d.p, d.q + 1}) || m.cols() != dim(d))
            rep.fail("stray d2 block at " + at(d));
    return rep;
}

DoubleComplex direct_sum(const DoubleComplex& a, const DoubleComplex& b) {
    DoubleComplex out;
    std::set<Degree> degs;
    for (const auto& [d, n] : a.components) degs.insert(d);
    for (const auto& [d, n] : b.components) degs.insert(d);
    for (Degree d : degs) {
        int n = a.dim(d) + b.dim(d);
        if (n) out.components[d] = n;
    }
    auto put = [&](Degree d, const SparseMatrix& ma, const SparseMatrix& mb, bool is_d1) {
        SparseMatrix m(ma.rows() + mb.rows(), ma.cols() + mb.cols());
        for (int i = 0; i < ma.rows(); ++i)
            for (const auto& [j, v] : ma.row(i)) m.set(i, j, v);
        for (int i = 0; i < mb.rows(); ++i)
            for (const auto& [j, v] : mb.row(i)) m.set(ma.rows() + i, ma.cols() + j, v);
        if (is_d1)
            out.set_d1(d, std::move(m));
        else
            out.set_d2(d, std::move(m));
    };
    for (Degree d : degs) {
        put(d, a.block1(d), b.block1(d), true);
        put(d, a.block2(d), b.block2(d), false);
    }
    return out;
}

SparseMatrix DCMorphism::block(Degree d) const {
    auto it = blocks.find(d);
    if (it != blocks.end()) return it->second;
    return SparseMatrix(target.dim(d), source.dim(d));
}

CheckReport DCMorphism::validate() const {
    CheckReport rep = source.validate();
    rep.merge(target.validate());
    std::set<Degree> degs;
    for (const auto& [d, n] : source.components) degs.insert(d);
    for (const auto& [d, n] : target.components) degs.insert(d);
    for (Degree d : degs) {
        Degree right{d.p + 1, d.q}, up{d.p, d.q + 1};
        if (!(block(right) * source.block1(d) == target.block1(d) * block(d)))
            rep.fail("morphism does not commute with d1 at " + at(d));
        if (!(block(up) * source.block2(d) == target.block2(d) * block(d)))
            rep.fail("morphism does not commute with d2 at " + at(d));
    }
    return rep;
}

DimsTable row_cohomology(const DoubleComplex& k) {
    DimsTable out;
    for (const auto& [d, n] : k.components) {
        int v = kernel(k.block1(d)).dim() - rank(k.block1({d.p - 1, d.q}));
        if (v) out[d] = v;
    }
    return out;
}

DimsTable column_cohomology(const DoubleComplex& k) {
    DimsTable out;
    for (const auto& [d, n] : k.components) {
        int v = kernel(k.block2(d)).dim() - rank(k.block2({d.p, d.q - 1}));
        if (v) out[d] = v;
    }
    return out;
}

DimsTable bott_chern(const DoubleComplex& k) {
    DimsTable out;
    for (const auto& [d, n] : k.components) {
        SubspaceBasis ker2 = kernel(vstack(k.block1(d), k.block2(d)));
        int box = rank(k.block1({d.p - 1, d.q}) * k.block2({d.p - 1, d.q - 1}));
        int v = ker2.dim() - box;
        if (v) out[d] = v;
    }
    return out;
}

DimsTable aeppli(const DoubleComplex& k) {
    DimsTable out;
    for (const auto& [d, n] : k.components) {
        SubspaceBasis kbox = kernel(k.block1({d.p, d.q + 1}) * k.block2(d));
        int im = rank(hstack(k.block1({d.p - 1, d.q}), k.block2({d.p, d.q - 1})));
        int v = kbox.dim() - im;
        if (v) out[d] = v;
    }
    return out;
}

std::map<int, int> total_cohomology(const DoubleComplex& k) {
    // offsets of each (p,q) inside the degree-(p+q) slice
    std::map<int, int> tot_dim;
    std::map<Degree, int> offset;
    for (const auto& [d, n] : k.components) {
        offset[d] = tot_dim[d.p + d.q];
        tot_dim[d.p + d.q] += n;
    }
    std::map<int, SparseMatrix> diff;
    for (const auto& [nn, sz] : tot_dim) {
        int target = tot_dim.count(nn + 1) ? tot_dim.at(nn + 1) : 0;
        diff[nn] = SparseMatrix(target, sz);
    }
    for (const auto& [d, n] : k.components) {
        int nn = d.p + d.q;
        if (!tot_dim.count(nn + 1)) continue;
        SparseMatrix& m = diff[nn];
        SparseMatrix b1 = k.block1(d);
        Degree right{d.p + 1, d.q};
        if (b1.rows())
            for (int i = 0; i < b1.rows(); ++i)
                for (const auto& [j, v] : b1.row(i)) m.set(offset[right] + i, offset[d] + j, v);
        SparseMatrix b2 = k.block2(d);
        Degree up{d.p, d.q + 1};
        Rational sgn(d.p % 2 ? -1 : 1);
        if (b2.rows())
            for (int i = 0; i < b2.rows(); ++i)
                for (const auto& [j, v] : b2.row(i)) m.set(offset[up] + i, offset[d] + j, v * sgn);
    }
    std::map<int, int> out;
    for (const auto& [nn, sz] : tot_dim) {
        int ker = diff.count(nn) ? kernel(diff.at(nn)).dim() : sz;
        int im = diff.count(nn - 1) ? rank(diff.at(nn - 1)) : 0;
        if (ker - im) out[nn] = ker - im;
    }
    return out;
}

DoubleComplex truncate_columns(const DoubleComplex& k, int s, int t) {
    DoubleComplex out;
    if (s > t) return out;
    for (const auto& [d, n] : k.components)
        if (s <= d.p && d.p <= t) out.components[d] = n;
    for (const auto& [d, m] : k.d1)
        if (s <= d.p && d.p + 1 <= t) out.set_d1(d, m);
    for (const auto& [d, m] : k.d2)
        if (s <= d.p && d.p <= t) out.set_d2(d, m);
    return out;
}

namespace {

// Induced map on sub/im quotients: dimensions must agree and the matrix of f
// on chosen complements must be invertible. Assumes im is contained in sub
// and f(sub_s) is contained in sub_t.
bool induced_iso(const SubspaceBasis& sub_s, const SubspaceBasis& im_s, const SubspaceBasis& sub_t,
                 const SubspaceBasis& im_t, const SparseMatrix& f) {
    int ds = sub_s.dim() - im_s.dim();
    int dt = sub_t.dim() - im_t.dim();
    if (ds != dt) return false;
    if (ds == 0) return true;
    SubspaceBasis comp_s = quotient_complement(im_s, sub_s).complement;
    SubspaceBasis comp_t = quotient_complement(im_t, sub_t).complement;
    SparseMatrix big = hstack(comp_t.basis, im_t.basis);
    SparseMatrix m(dt, ds);
    for (int c = 0; c < ds; ++c) {
        std::vector<Rational> v = (f * comp_s.basis.select_columns({c})).column(0);
        auto x = solve(big, v);
        if (!x) return false;
        for (int r2 = 0; r2 < dt; ++r2) m.set(r2, c, (*x)[r2]);
    }
    return rank(m) == ds;
}

std::set<Degree> all_degrees(const DCMorphism& f) {
    std::set<Degree> degs;
    for (const auto& [d, n] : f.source.components) degs.insert(d);
    for (const auto& [d, n] : f.target.components) degs.insert(d);
    return degs;
}

}  // namespace

bool is_E1_isomorphism(const DCMorphism& f) {
    for (Degree d : all_degrees(f)) {
        Degree left{d.p - 1, d.q}, below{d.p, d.q - 1};
        if (!induced_iso(kernel(f.source.block1(d)), image(f.source.block1(left)),
                         kernel(f.target.block1(d)), image(f.target.block1(left)), f.block(d)))
            return false;
        if (!induced_iso(kernel(f.source.block2(d)), image(f.source.block2(below)),
                         kernel(f.target.block2(d)), image(f.target.block2(below)), f.block(d)))
            return false;
    }
    return true;
}

CheckReport stelzig_check(const DCMorphism& f) {
    CheckReport rep;
    if (!is_E1_isomorphism(f)) {
        rep.fail("not an E1-isomorphism");
        return rep;
    }
    DimsTable bc_s = bott_chern(f.source), bc_t = bott_chern(f.target);
    DimsTable a_s = aeppli(f.source), a_t = aeppli(f.target);
    if (!(bc_s == bc_t)) rep.fail("Bott-Chern dimensions differ");
    if (!(a_s == a_t)) rep.fail("Aeppli dimensions differ");
    for (Degree d : all_degrees(f)) {
        Degree left{d.p - 1, d.q}, below{d.p, d.q - 1}, bl{d.p - 1, d.q - 1}, up{d.p, d.q + 1};
        {
            SubspaceBasis sub_s = kernel(vstack(f.source.block1(d), f.source.block2(d)));
            SubspaceBasis im_s = image(f.source.block1(left) * f.source.block2(bl));
            SubspaceBasis sub_t = kernel(vstack(f.target.block1(d), f.target.block2(d)));
            SubspaceBasis im_t = image(f.target.block1(left) * f.target.block2(bl));
            if (!induced_iso(sub_s, im_s, sub_t, im_t, f.block(d)))
                rep.fail("induced Bott-Chern map not an isomorphism at " + at(d));
        }
        {
            SubspaceBasis sub_s = kernel(f.source.block1(up) * f.source.block2(d));
            SubspaceBasis im_s = image(hstack(f.source.block1(left), f.source.block2(below)));
            SubspaceBasis sub_t = kernel(f.target.block1(up) * f.target.block2(d));
            SubspaceBasis im_t = image(hstack(f.target.block1(left), f.target.block2(below)));
            if (!induced_iso(sub_s, im_s, sub_t, im_t, f.block(d)))
                rep.fail("induced Aeppli map not an isomorphism at " + at(d));
        }
    }
    return rep;
}

}  // namespace gysin
