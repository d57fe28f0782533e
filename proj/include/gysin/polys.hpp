#pragma once

// The integer polynomial family P_0..P_{r-1} behind the correction operators
// G^{-i} of the projective bundle and blow-up inverses, together with its two
// defining identities (weighted homogeneity and the Kronecker sums).

#include <map>
#include <vector>

#include "gysin/graded.hpp"

namespace gysin {

// Multivariate integer polynomial in T_1..T_{nvars}. Exponent vectors are
// dense of length nvars; coefficients are arbitrary-precision integers.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(int nvars) : nvars_(nvars) {}
    static IntPoly constant(int nvars, const Int& c);
    static IntPoly variable(int nvars, int k);  // T_k, 1-based

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    IntPoly& add_term(const std::vector<int>& expo, const Int& c);
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly scaled(const Int& c) const;
    friend bool operator==(const IntPoly& a, const IntPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int nvars_ = 0;
    std::map<std::vector<int>, Int> terms_;
};

struct GysinFamily {
    int r = 0;
    std::vector<IntPoly> polys;  // P_0 .. P_{r-1}, each in T_1..T_{r-1}
};

// P_{r-1} = (-1)^{r-1}; P_i = (-1)^r sum_{k=1}^{r-1-i} T_k P_{k+i} for i < r-1.
GysinFamily compute_family(int r);

// Every monomial of P_i has weighted degree sum k*d_k = r-1-i.
CheckReport weighted_degree_check(const GysinFamily& fam);

// With T_0 = (-1)^{r-1}: H_k = sum_{i=r-1}^{r-1+k} T_{i-(r-1)} P_{i-k} equals
// 1 for k = 0 and vanishes for 1 <= k <= r-1, identically in T_1..T_{r-1}.
CheckReport kronecker_check(const GysinFamily& fam);

// Substitute ring elements for the variables (values[k-1] stands for T_k).
// All values must be homogeneous of even parity.
Element eval_poly(const IntPoly& p, const std::vector<Element>& values, const Ring& ring);

// The correction operators G^0..G^{-(r-1)}.
//
//   G^{-i} = sum_{j=0}^{r-1-i} P_{i+j}(segre) cup push_h[j]
//
// where segre[k-1] is the pushforward of h^{r-1+k} in the base ring and
// push_h[j] is the map "pushforward of (h^j cup .)" from the bundle flavor to
// the base flavor. The result G^{-i} has shift -i * blowup_shift.
std::vector<LinearMap> assemble_g(const GysinFamily& fam, const std::vector<Element>& segre,
                                  const std::vector<LinearMap>& push_h, const Ring& base_ring,
                                  const Module& base_flavor);

}  // namespace gysin
