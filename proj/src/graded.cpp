#include "gysin/graded.hpp"

#include <algorithm>
#include <sstream>

namespace gysin {

/* ------------------------------ VectorSpace ------------------------------ */

int VectorSpace::add(const std::string& label, Degree deg) {
    if (!mode_.valid(deg)) throw Error("invalid degree " + mode_.show(deg) + " for label '" + label + "'");
    if (by_label_.count(label)) throw Error("duplicate basis label '" + label + "'");
    int idx = static_cast<int>(basis_.size());
    basis_.push_back({label, deg});
    by_degree_[deg].push_back(idx);
    by_label_[label] = idx;
    return idx;
}

int VectorSpace::dim(Degree d) const {
    auto it = by_degree_.find(d);
    return it == by_degree_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<int>& VectorSpace::component(Degree d) const {
    static const std::vector<int> empty;
    auto it = by_degree_.find(d);
    return it == by_degree_.end() ? empty : it->second;
}

std::optional<int> VectorSpace::find(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

int VectorSpace::index_of(const std::string& label) const {
    auto i = find(label);
    if (!i) throw Error("no basis element labeled '" + label + "'");
    return *i;
}

std::map<Degree, int> VectorSpace::dims() const {
    std::map<Degree, int> out;
    for (const auto& [d, v] : by_degree_) out[d] = static_cast<int>(v.size());
    return out;
}

std::map<int, int> VectorSpace::dims_total() const {
    std::map<int, int> out;
    for (const auto& [d, v] : by_degree_) out[mode_.total(d)] += static_cast<int>(v.size());
    return out;
}

bool operator==(const VectorSpace& a, const VectorSpace& b) {
    if (!(a.mode_ == b.mode_) || a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
        if (a.basis_[i].label != b.basis_[i].label || a.basis_[i].deg != b.basis_[i].deg) return false;
    return true;
}

VSpacePtr make_space(GradingMode mode, const std::vector<BasisElem>& basis) {
    auto s = std::make_shared<VectorSpace>(mode);
    for (const auto& e : basis) s->add(e.label, e.deg);
    return s;
}

/* -------------------------------- Element -------------------------------- */

Element Element::basis(VSpacePtr s, int i) {
    Element e(std::move(s));
    e.add(i, Rational(1));
    return e;
}

Element Element::unit_like(VSpacePtr s, const std::string& label) {
    int i = s->index_of(label);
    return basis(std::move(s), i);
}

Rational Element::coeff(int i) const {
    auto it = c_.find(i);
    return it == c_.end() ? Rational(0) : it->second;
}

Element& Element::add(int i, const Rational& v) {
    if (!space_) throw Error("element without space");
    if (i < 0 || i >= space_->dim()) throw Error("element index out of range");
    if (v.is_zero()) return *this;
    auto it = c_.find(i);
    if (it == c_.end()) {
        c_[i] = v;
    } else {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
    return *this;
}

Element& Element::operator+=(const Element& o) {
    if (!space_) *this = Element(o.space_);
    if (o.space_ && !(*space_ == *o.space_)) throw Error("element sum across spaces");
    for (const auto& [i, v] : o.c_) add(i, v);
    return *this;
}

Element& Element::operator-=(const Element& o) { return *this += o.scaled(Rational(-1)); }

Element Element::scaled(const Rational& s) const {
    Element out(space_);
    if (s.is_zero()) return out;
    for (const auto& [i, v] : c_) out.c_[i] = v * s;
    return out;
}

bool operator==(const Element& a, const Element& b) {
    if (a.space_ && b.space_ && !(*a.space_ == *b.space_)) return false;
    return a.c_ == b.c_;
}

std::optional<Degree> Element::degree() const {
    std::optional<Degree> d;
    for (const auto& [i, v] : c_) {
        Degree di = space_->elem(i).deg;
        if (d && !(*d == di)) return std::nullopt;
        d = di;
    }
    return d;
}

Element Element::component(Degree d) const {
    Element out(space_);
    for (const auto& [i, v] : c_)
        if (space_->elem(i).deg == d) out.c_[i] = v;
    return out;
}

std::string Element::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, v] : c_) {
        if (!first) os << " + ";
        first = false;
        if (!(v == Rational(1))) os << v.str() << "*";
        os << space_->elem(i).label;
    }
    return os.str();
}

/* ------------------------------- LinearMap ------------------------------- */

LinearMap::LinearMap(VSpacePtr src, VSpacePtr dst, Degree shift)
    : src_(std::move(src)), dst_(std::move(dst)), shift_(shift), m_(dst_->dim(), src_->dim()) {}

LinearMap LinearMap::identity(const VSpacePtr& s) {
    LinearMap f(s, s, Degree{0, 0});
    f.m_ = SparseMatrix::identity(s->dim());
    return f;
}

LinearMap LinearMap::zero(VSpacePtr src, VSpacePtr dst, Degree shift) {
    return LinearMap(std::move(src), std::move(dst), shift);
}

void LinearMap::set(int dst_i, int src_j, const Rational& v) {
    if (v.is_zero()) {
        m_.set(dst_i, src_j, v);
        return;
    }
    Degree want = src_->elem(src_j).deg + shift_;
    if (!(dst_->elem(dst_i).deg == want))
        throw Error("map entry violates grading: " + src_->elem(src_j).label + " -> " +
                    dst_->elem(dst_i).label);
    m_.set(dst_i, src_j, v);
}

void LinearMap::set_column(int src_j, const Element& img) {
    if (img.space() && !(*img.space() == *dst_)) throw Error("set_column target mismatch");
    for (int i = 0; i < dst_->dim(); ++i) m_.set(i, src_j, Rational(0));
    for (const auto& [i, v] : img.coords()) set(i, src_j, v);
}

Element LinearMap::apply(const Element& x) const {
    if (x.space() && !(*x.space() == *src_)) throw Error("map applied to foreign element");
    Element out(dst_);
    if (x.is_zero()) return out;
    for (int i = 0; i < m_.rows(); ++i) {
        Rational acc(0);
        for (const auto& [j, w] : m_.row(i)) {
            Rational v = x.coeff(j);
            if (!v.is_zero()) acc += w * v;
        }
        if (!acc.is_zero()) out.add(i, acc);
    }
    return out;
}

Element LinearMap::apply_basis(int j) const {
    Element out(dst_);
    for (int i = 0; i < dst_->dim(); ++i) {
        Rational w = m_.get(i, j);
        if (!w.is_zero()) out.add(i, w);
    }
    return out;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
    if (!(*src_ == *o.src_) || !(*dst_ == *o.dst_) || !(shift_ == o.shift_))
        throw Error("map sum mismatch");
    LinearMap out = *this;
    out.m_ = m_ + o.m_;
    return out;
}

LinearMap LinearMap::operator-(const LinearMap& o) const { return *this + o.scaled(Rational(-1)); }

LinearMap LinearMap::scaled(const Rational& s) const {
    LinearMap out = *this;
    out.m_ = m_.scaled(s);
    return out;
}

bool LinearMap::is_identity() const {
    return *src_ == *dst_ && shift_ == Degree{0, 0} && m_ == SparseMatrix::identity(src_->dim());
}

bool LinearMap::is_zero() const { return m_.nnz() == 0; }

bool operator==(const LinearMap& a, const LinearMap& b) {
    return *a.src_ == *b.src_ && *a.dst_ == *b.dst_ && a.shift_ == b.shift_ && a.m_ == b.m_;
}

SparseMatrix LinearMap::block(Degree d) const {
    const auto& sc = src_->component(d);
    const auto& dc = dst_->component(d + shift_);
    SparseMatrix out(static_cast<int>(dc.size()), static_cast<int>(sc.size()));
    for (int c = 0; c < static_cast<int>(sc.size()); ++c)
        for (int r = 0; r < static_cast<int>(dc.size()); ++r)
            out.set(r, c, m_.get(dc[r], sc[c]));
    return out;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    if (!(*f.source() == *g.target())) throw Error("space mismatch in composition");
    LinearMap out(g.source(), f.target(), f.shift() + g.shift());
    SparseMatrix prod = f.matrix() * g.matrix();
    for (int j = 0; j < prod.cols(); ++j)
        for (int i = 0; i < prod.rows(); ++i) {
            Rational v = prod.get(i, j);
            if (!v.is_zero()) out.set(i, j, v);
        }
    return out;
}

std::string CheckReport::summary() const {
    if (ok) return "ok";
    std::ostringstream os;
    os << violations.size() << " violation(s):";
    for (const auto& v : violations) os << "\n  " << v;
    return os.str();
}

/* ---------------------------------- Ring --------------------------------- */

Ring::Ring(VSpacePtr space, int unit_index) : space_(std::move(space)), unit_(unit_index) {
    if (!(space_->elem(unit_).deg == Degree{0, 0})) throw Error("ring unit not in degree 0");
}

void Ring::set_product(int i, int j, const Element& value) {
    if (value.is_zero()) {
        prod_.erase({i, j});
        return;
    }
    Degree want = space_->elem(i).deg + space_->elem(j).deg;
    for (const auto& [k, v] : value.coords())
        if (!(space_->elem(k).deg == want))
            throw Error("product violates degree additivity: " + space_->elem(i).label + " * " +
                        space_->elem(j).label);
    prod_[{i, j}] = value;
}

Element Ring::cup_basis(int i, int j) const {
    auto it = prod_.find({i, j});
    return it == prod_.end() ? Element(space_) : it->second;
}

Element Ring::cup(const Element& a, const Element& b) const {
    Element out(space_);
    for (const auto& [i, v] : a.coords())
        for (const auto& [j, w] : b.coords()) out += cup_basis(i, j).scaled(v * w);
    return out;
}

Element Ring::power(const Element& a, int n) const {
    Element out = unit();
    for (int k = 0; k < n; ++k) out = cup(out, a);
    return out;
}

LinearMap Ring::cup_by(const Element& a, Degree deg) const {
    auto d = a.degree();
    if (d && !(*d == deg)) throw Error("cup_by: element degree disagrees with declared degree");
    LinearMap f(space_, space_, deg);
    for (int j = 0; j < space_->dim(); ++j) {
        Element img(space_);
        for (const auto& [i, v] : a.coords()) img += cup_basis(i, j).scaled(v);
        f.set_column(j, img);
    }
    return f;
}

CheckReport Ring::check_axioms() const {
    CheckReport rep;
    const int n = space_->dim();
    auto label = [&](int i) { return space_->elem(i).label; };
    for (int i = 0; i < n; ++i) {
        if (!(cup_basis(unit_, i) == Element::basis(space_, i)))
            rep.fail("unit law fails on 1 * " + label(i));
        if (!(cup_basis(i, unit_) == Element::basis(space_, i)))
            rep.fail("unit law fails on " + label(i) + " * 1");
    }
    const GradingMode mode = space_->mode();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // degree additivity is enforced on insertion; recheck the sign rule
            int s = mode.parity(space_->elem(i).deg) * mode.parity(space_->elem(j).deg);
            Element rhs = cup_basis(j, i);
            if (s % 2) rhs = rhs.scaled(Rational(-1));
            if (!(cup_basis(i, j) == rhs))
                rep.fail("graded commutativity fails on " + label(i) + " * " + label(j));
        }
    for (int i = 0; i < n && rep.violations.size() < 32; ++i)
        for (int j = 0; j < n; ++j) {
            Element ij = cup_basis(i, j);
            for (int k = 0; k < n; ++k) {
                Element lhs = cup(ij, Element::basis(space_, k));
                Element rhs = cup(Element::basis(space_, i), cup_basis(j, k));
                if (!(lhs == rhs)) {
                    rep.fail("associativity fails on (" + label(i) + " * " + label(j) + ") * " +
                             label(k));
                    break;
                }
            }
        }
    return rep;
}

/* --------------------------------- Module -------------------------------- */

Module::Module(VSpacePtr ring_space, VSpacePtr space)
    : ring_space_(std::move(ring_space)), space_(std::move(space)) {}

Module Module::regular(const Ring& r) {
    Module m(r.space(), r.space());
    const int n = r.space()->dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Element p = r.cup_basis(i, j);
            if (!p.is_zero()) m.set_action(i, j, p);
        }
    return m;
}

void Module::set_action(int ring_i, int mod_j, const Element& value) {
    if (value.is_zero()) {
        act_.erase({ring_i, mod_j});
        return;
    }
    Degree want = ring_space_->elem(ring_i).deg + space_->elem(mod_j).deg;
    for (const auto& [k, v] : value.coords())
        if (!(space_->elem(k).deg == want))
            throw Error("action violates degree additivity: " + ring_space_->elem(ring_i).label +
                        " . " + space_->elem(mod_j).label);
    act_[{ring_i, mod_j}] = value;
}

Element Module::act_basis(int ring_i, int mod_j) const {
    auto it = act_.find({ring_i, mod_j});
    return it == act_.end() ? Element(space_) : it->second;
}

Element Module::act(const Element& r, const Element& m) const {
    Element out(space_);
    for (const auto& [i, v] : r.coords())
        for (const auto& [j, w] : m.coords()) out += act_basis(i, j).scaled(v * w);
    return out;
}

LinearMap Module::act_by(const Element& r, Degree deg) const {
    auto d = r.degree();
    if (d && !(*d == deg)) throw Error("act_by: element degree disagrees with declared degree");
    LinearMap f(space_, space_, deg);
    for (int j = 0; j < space_->dim(); ++j) {
        Element img(space_);
        for (const auto& [i, v] : r.coords()) img += act_basis(i, j).scaled(v);
        f.set_column(j, img);
    }
    return f;
}

CheckReport Module::check_axioms(const Ring& r) const {
    CheckReport rep;
    const int n = space_->dim();
    const int m = ring_space_->dim();
    for (int j = 0; j < n; ++j)
        if (!(act_basis(r.unit_index(), j) == Element::basis(space_, j)))
            rep.fail("unit does not act as identity on " + space_->elem(j).label);
    for (int i = 0; i < m && rep.violations.size() < 32; ++i)
        for (int j = 0; j < m; ++j) {
            Element ij = r.cup_basis(i, j);
            for (int k = 0; k < n; ++k) {
                Element lhs = act(ij, Element::basis(space_, k));
                Element rhs = act(Element::basis(ring_space_, i), act_basis(j, k));
                if (!(lhs == rhs)) {
                    rep.fail("action associativity fails on (" + ring_space_->elem(i).label +
                             " * " + ring_space_->elem(j).label + ") . " + space_->elem(k).label);
                    break;
                }
            }
        }
    return rep;
}

/* ------------------------------ map checkers ----------------------------- */

CheckReport check_ring_map(const Ring& src, const Ring& dst, const LinearMap& f) {
    CheckReport rep;
    if (!(f.shift() == Degree{0, 0})) {
        rep.fail("ring map has nonzero shift");
        return rep;
    }
    if (!(f.apply(src.unit()) == dst.unit())) rep.fail("ring map does not preserve the unit");
    const int n = src.space()->dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Element lhs = f.apply(src.cup_basis(i, j));
            Element rhs = dst.cup(f.apply_basis(i), f.apply_basis(j));
            if (!(lhs == rhs))
                rep.fail("not multiplicative on " + src.space()->elem(i).label + " * " +
                         src.space()->elem(j).label);
        }
    return rep;
}

CheckReport check_projection_formula(const Module& up, const Module& down, const Ring& down_ring,
                                     const LinearMap& pull, const LinearMap& push) {
    CheckReport rep;
    const GradingMode mode = down_ring.space()->mode();
    for (int a = 0; a < up.space()->dim(); ++a) {
        Element ea = Element::basis(up.space(), a);
        int pa = mode.parity(up.space()->elem(a).deg);
        for (int b = 0; b < down_ring.space()->dim(); ++b) {
            Element fb = pull.apply_basis(b);
            int pb = mode.parity(down_ring.space()->elem(b).deg);
            Rational sign((pa * pb) % 2 ? -1 : 1);
            // a cup f(b) written through the left action, with the Koszul swap
            Element lhs = push.apply(up.act(fb, ea).scaled(sign));
            Element rhs = down.act(Element::basis(down_ring.space(), b), push.apply(ea)).scaled(sign);
            if (!(lhs == rhs))
                rep.fail("projection formula fails on (" + up.space()->elem(a).label + ", " +
                         down_ring.space()->elem(b).label + ")");
        }
    }
    return rep;
}

/* ------------------------------- direct sum ------------------------------ */

DirectSum direct_sum_with_shifts(const std::vector<VSpacePtr>& spaces,
                                 const std::vector<Degree>& offsets,
                                 const std::vector<std::string>& prefixes) {
    if (spaces.empty() || spaces.size() != offsets.size() || spaces.size() != prefixes.size())
        throw Error("direct sum argument mismatch");
    GradingMode mode = spaces[0]->mode();
    for (const auto& s : spaces)
        if (!(s->mode() == mode)) throw Error("direct sum mode mismatch");

    struct Item {
        Degree deg;
        int summand;
        int index;
        std::string label;
    };
    std::vector<Item> items;
    for (int s = 0; s < static_cast<int>(spaces.size()); ++s)
        for (int i = 0; i < spaces[s]->dim(); ++i) {
            const auto& e = spaces[s]->elem(i);
            items.push_back({e.deg + offsets[s], s, i, prefixes[s] + e.label});
        }
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (!(a.deg == b.deg)) return a.deg < b.deg;
        if (a.summand != b.summand) return a.summand < b.summand;
        return a.index < b.index;
    });

    auto sum = std::make_shared<VectorSpace>(mode);
    std::vector<std::vector<int>> where(spaces.size());
    for (std::size_t s = 0; s < spaces.size(); ++s) where[s].resize(spaces[s]->dim());
    for (const auto& it : items) where[it.summand][it.index] = sum->add(it.label, it.deg);

    DirectSum out;
    out.space = sum;
    for (int s = 0; s < static_cast<int>(spaces.size()); ++s) {
        LinearMap in(spaces[s], sum, offsets[s]);
        LinearMap pr(sum, spaces[s], Degree{0, 0} - offsets[s]);
        for (int i = 0; i < spaces[s]->dim(); ++i) {
            in.set(where[s][i], i, Rational(1));
            pr.set(i, where[s][i], Rational(1));
        }
        out.incl.push_back(std::move(in));
        out.proj.push_back(std::move(pr));
    }
    return out;
}

}  // namespace gysin
