#pragma once

// Space models: a graded-commutative ring (closed supports) plus one module
// per support flavor, and the product / projective bundle constructors with
// their structure maps.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gysin/polys.hpp"

namespace gysin {

inline constexpr const char* kClosed = "closed";
inline constexpr const char* kCompact = "compact";

// Meet of support families: closed is neutral, compact absorbs.
std::string flavor_meet(const std::string& a, const std::string& b);

// Label of a tensor basis element in a product model.
std::string product_label(const std::string& a, const std::string& b);

struct SpaceModel {
    std::string name;
    GradingMode mode;
    Ring ring;
    std::map<std::string, Module> flavors;  // always contains kClosed (the ring on itself)
    std::optional<Degree> fundamental_degree;
    bool compact_equals_closed = false;

    const Module& flavor(const std::string& f) const;
    bool has_flavor(const std::string& f) const { return flavors.count(f) > 0; }
    std::vector<std::string> flavor_names() const;

    // Cup of a flavored pair, landing in the meet flavor. Only the products
    // the support calculus provides are modeled: closed against anything via
    // the module action, compact against compact when the result degree is
    // forced (absent component, or compact coinciding with closed).
    std::pair<std::string, Element> cup_flavored(const std::string& fa, const Element& a,
                                                 const std::string& fb, const Element& b) const;

    CheckReport check_all_axioms() const;
};

SpaceModel point(GradingMode mode);
SpaceModel projective_space(int n, GradingMode mode);
SpaceModel affine_space(int n, GradingMode mode);
SpaceModel curve(int genus);  // de Rham mode

SpaceModel product(const SpaceModel& x, const SpaceModel& y);

// Duplicates the closed flavor under the name "twist": a rank-one trivial
// local system. Constructions must treat it exactly like closed.
void add_trivial_twist(SpaceModel& m, const std::string& name = "twist");

struct BundleMaps {
    int r = 1;
    Degree unit_shift;                     // blowup_shift of the mode
    Element h;                             // tautological class in the total ring
    LinearMap ring_pull;                   // base ring space -> total ring space
    LinearMap ring_push;                   // total ring space -> base ring space
    std::map<std::string, LinearMap> pull;  // base flavor -> total flavor
    std::map<std::string, LinearMap> push;  // total flavor -> base flavor, shift -(r-1)*unit_shift
    std::vector<Element> segre;             // pushforward of h^{r-1+k}, k = 1..r-1, in base ring
    // h^t = sum_m h^m * pullback(hpow[t][m]), coefficients in the base ring;
    // rows t = 0..2r-2.
    std::vector<std::vector<Element>> hpow;

    // pushforward of (h^j cup .) on a flavor, the ingredient of assemble_g
    LinearMap push_after_h(int j, const std::string& flavor, const SpaceModel& total) const;
};

struct Bundle {
    SpaceModel total;
    BundleMaps maps;
};

// P(N) for a rank-r bundle N on `base` with Chern classes chern = c_1..c_r.
// The total ring is the free base module on 1, h, .., h^{r-1}; h is the class
// of O(-1), so the pushforward of h^{r-1} is (-1)^{r-1} and the relation is
// sum_{i=0}^{r} (-1)^i c_i h^{r-i} = 0 (from c(O(-1)) cup c(Q) = c(N) pulled back).
Bundle projective_bundle(const SpaceModel& base, const std::vector<Element>& chern, int r);

struct MuTau {
    DirectSum dsum;           // base flavor summands, offsets i * unit_shift
    LinearMap mu;             // dsum -> total flavor
    LinearMap tau;            // total flavor -> dsum
    std::vector<LinearMap> G; // G^0 .. G^{-(r-1)}
};

MuTau mu_tau_pair(const SpaceModel& base, const Bundle& bundle, const std::string& flavor);

}  // namespace gysin
