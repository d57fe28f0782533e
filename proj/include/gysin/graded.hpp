#pragma once

// Bigraded vector spaces with labeled bases, graded linear maps, and
// graded-commutative rings / modules given by structure constants.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gysin/grading.hpp"
#include "gysin/linalg.hpp"

namespace gysin {

struct BasisElem {
    std::string label;
    Degree deg;
};

class VectorSpace;
using VSpacePtr = std::shared_ptr<const VectorSpace>;

class VectorSpace {
public:
    explicit VectorSpace(GradingMode mode) : mode_(mode) {}

    // Basis elements must be appended in non-decreasing degree order per call
    // site convention; indices are stable after construction.
    int add(const std::string& label, Degree deg);

    GradingMode mode() const { return mode_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int dim(Degree d) const;
    const BasisElem& elem(int i) const { return basis_.at(i); }
    const std::vector<int>& component(Degree d) const;
    const std::map<Degree, std::vector<int>>& components() const { return by_degree_; }
    std::optional<int> find(const std::string& label) const;
    int index_of(const std::string& label) const;

    std::map<Degree, int> dims() const;
    std::map<int, int> dims_total() const;  // by total degree

    friend bool operator==(const VectorSpace& a, const VectorSpace& b);

private:
    GradingMode mode_;
    std::vector<BasisElem> basis_;
    std::map<Degree, std::vector<int>> by_degree_;
    std::map<std::string, int> by_label_;
};

VSpacePtr make_space(GradingMode mode, const std::vector<BasisElem>& basis);

// Sparse vector in a VectorSpace; may be inhomogeneous.
class Element {
public:
    Element() = default;
    explicit Element(VSpacePtr s) : space_(std::move(s)) {}
    static Element basis(VSpacePtr s, int i);
    static Element unit_like(VSpacePtr s, const std::string& label);

    const VSpacePtr& space() const { return space_; }
    const std::map<int, Rational>& coords() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const;

    Element& add(int i, const Rational& v);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element scaled(const Rational& s) const;
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend bool operator==(const Element& a, const Element& b);

    // Degree when homogeneous (zero counts as any degree -> nullopt).
    std::optional<Degree> degree() const;
    Element component(Degree d) const;

    std::string str() const;

private:
    VSpacePtr space_;
    std::map<int, Rational> c_;
};

// Degree-shifting linear map between graded spaces, stored as one sparse
// matrix whose entries respect deg(target) = deg(source) + shift.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(VSpacePtr src, VSpacePtr dst, Degree shift);
    static LinearMap identity(const VSpacePtr& s);
    static LinearMap zero(VSpacePtr src, VSpacePtr dst, Degree shift);

    const VSpacePtr& source() const { return src_; }
    const VSpacePtr& target() const { return dst_; }
    Degree shift() const { return shift_; }
    const SparseMatrix& matrix() const { return m_; }

    void set(int dst_i, int src_j, const Rational& v);
    void set_column(int src_j, const Element& img);
    Element apply(const Element& x) const;
    Element apply_basis(int j) const;

    LinearMap operator+(const LinearMap& o) const;
    LinearMap operator-(const LinearMap& o) const;
    LinearMap scaled(const Rational& s) const;
    bool is_identity() const;
    bool is_zero() const;
    friend bool operator==(const LinearMap& a, const LinearMap& b);

    // Restriction of the map to the block leaving source component d.
    SparseMatrix block(Degree d) const;

private:
    VSpacePtr src_, dst_;
    Degree shift_{};
    SparseMatrix m_;
};

// f after g.
LinearMap compose(const LinearMap& f, const LinearMap& g);

struct CheckReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(const std::string& what) {
        ok = false;
        if (violations.size() < 32) violations.push_back(what);
    }
    void merge(const CheckReport& o) {
        if (!o.ok) ok = false;
        for (const auto& v : o.violations)
            if (violations.size() < 32) violations.push_back(v);
    }
    std::string summary() const;
};

// Graded-commutative ring via structure constants on a labeled basis.
class Ring {
public:
    Ring() = default;
    Ring(VSpacePtr space, int unit_index);

    const VSpacePtr& space() const { return space_; }
    int unit_index() const { return unit_; }
    Element unit() const { return Element::basis(space_, unit_); }

    void set_product(int i, int j, const Element& value);
    Element cup_basis(int i, int j) const;
    Element cup(const Element& a, const Element& b) const;
    Element power(const Element& a, int n) const;

    // Left multiplication by a homogeneous element, as a graded map.
    LinearMap cup_by(const Element& a, Degree deg) const;

    CheckReport check_axioms() const;

private:
    VSpacePtr space_;
    int unit_ = 0;
    std::map<std::pair<int, int>, Element> prod_;
};

// Graded module over a Ring, by action constants.
class Module {
public:
    Module() = default;
    Module(VSpacePtr ring_space, VSpacePtr space);
    static Module regular(const Ring& r);  // the ring acting on itself

    const VSpacePtr& ring_space() const { return ring_space_; }
    const VSpacePtr& space() const { return space_; }

    void set_action(int ring_i, int mod_j, const Element& value);
    Element act_basis(int ring_i, int mod_j) const;
    Element act(const Element& r, const Element& m) const;
    LinearMap act_by(const Element& r, Degree deg) const;

    CheckReport check_axioms(const Ring& r) const;

private:
    VSpacePtr ring_space_, space_;
    std::map<std::pair<int, int>, Element> act_;
};

// Is f a unital ring homomorphism (on all basis pairs)?
CheckReport check_ring_map(const Ring& src, const Ring& dst, const LinearMap& f);

// Projection formula p(a cup f(b)) = p(a) cup b for a pullback/pushforward
// pair. `a` runs over basis of the module `up` on the source side of p,
// `b` over the ring downstairs.
CheckReport check_projection_formula(const Module& up, const Module& down, const Ring& down_ring,
                                     const LinearMap& pull, const LinearMap& push);

struct DirectSum {
    VSpacePtr space;
    std::vector<LinearMap> incl;  // summand -> sum, shift = offset_i
    std::vector<LinearMap> proj;  // sum -> summand, shift = -offset_i
};

// Component of summand i at degree d appears in the sum at degree d + offset_i.
// Labels are namespaced with the given prefixes.
DirectSum direct_sum_with_shifts(const std::vector<VSpacePtr>& spaces,
                                 const std::vector<Degree>& offsets,
                                 const std::vector<std::string>& prefixes);

}  // namespace gysin
