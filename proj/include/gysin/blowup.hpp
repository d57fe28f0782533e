#pragma once

// Blow-up constructor: given restriction / Gysin data for a center Y in X,
// builds the cohomology of the blow-up with its full ring structure, the
// structure maps pi^*, pi_*, i_E^*, i_{E*}, and the mutually inverse
// decomposition maps psi / phi, per support flavor.

#include <map>
#include <string>
#include <vector>

#include "gysin/spaces.hpp"

namespace gysin {

struct FlavorBlocks {
    LinearMap restriction;  // ambient flavor -> center flavor, shift 0
    LinearMap gysin;        // center flavor -> ambient flavor, shift r * blowup_shift
};

struct BlowupDatum {
    SpaceModel ambient;
    SpaceModel center;
    int r = 2;                           // complex codimension
    std::vector<Element> normal_chern;   // c_1..c_r of the normal bundle, in the center ring
    std::map<std::string, FlavorBlocks> blocks;  // per flavor; must contain "closed"
};

// Ring-map, projection-formula and self-intersection closure checks on the
// datum; blow_up refuses data that fail any of them.
CheckReport validate_datum(const BlowupDatum& datum);

struct BlowupResult {
    BlowupDatum datum;
    SpaceModel total;
    Bundle exceptional;  // P(N) over the center, with its bundle maps

    // per flavor
    std::map<std::string, LinearMap> pi_pull;   // ambient -> total
    std::map<std::string, LinearMap> pi_push;   // total -> ambient
    std::map<std::string, LinearMap> iE_pull;   // total -> exceptional
    std::map<std::string, LinearMap> iE_push;   // exceptional -> total, shift blowup_shift
    std::map<std::string, DirectSum> dsum;      // ambient + (r-1) shifted center copies
    std::map<std::string, LinearMap> psi;       // dsum -> total
    std::map<std::string, LinearMap> phi;       // total -> dsum
    std::map<std::string, std::vector<LinearMap>> G;  // correction operators over the center

    // c_{r-1} of the tautological quotient bundle, in the exceptional ring
    Element quotient_chern_top;
};

BlowupResult blow_up(const BlowupDatum& datum);

// phi . psi = id and psi . phi = id, every flavor, exact.
CheckReport verify_inverse_pair(const BlowupResult& res);

// dim H(total) + dim H(center) = dim H(ambient) + dim H(exceptional),
// degreewise, every flavor.
CheckReport dimension_identity_check(const BlowupResult& res);

// i_E^* i_{E*} = h cup . on every flavor of the exceptional divisor.
CheckReport self_intersection_check(const BlowupResult& res);

// pi^* i_{Y*} = i_{E*} (c_{r-1}(Q) cup pi_E^* .) on every flavor.
CheckReport excess_intersection_check(const BlowupResult& res);

// pi_* i_{E*} = i_{Y*} pi_{E*} on every flavor.
CheckReport push_compat_check(const BlowupResult& res);

// The whole battery: ring/module axioms on the total space, i_E^* and pi^*
// ring maps, projection formulas for both pairs, the checks above, the
// inverse pair, and the dimension identity.
CheckReport verify_blowup(const BlowupResult& res);

struct TruncatedCheck {
    bool ok = true;
    std::map<int, int> total_dims;     // k -> dim of the truncated hypercohomology upstairs
    std::map<int, int> expected_dims;  // from ambient + shifted center windows
};

// Hypercohomology dimensions of the column window [s,t] of the formal Hodge
// double complex, against the blow-up decomposition. Dolbeault mode only;
// s > t yields zero complexes. Uses the closed flavor.
TruncatedCheck truncated_hypercohomology_dims(const BlowupResult& res, int s, int t);

}  // namespace gysin
