#pragma once

#include <compare>
#include <string>

#include "gysin/rational.hpp"

namespace gysin {

// Degree of a cohomology class. Dolbeault mode uses both components (p,q);
// de Rham mode keeps the single degree in p with q pinned to 0.
struct Degree {
    int p = 0;
    int q = 0;

    friend Degree operator+(Degree a, Degree b) { return {a.p + b.p, a.q + b.q}; }
    friend Degree operator-(Degree a, Degree b) { return {a.p - b.p, a.q - b.q}; }
    friend Degree operator*(int k, Degree d) { return {k * d.p, k * d.q}; }
    auto operator<=>(const Degree&) const = default;
};

enum class GradingKind { dolbeault, derham };

struct GradingMode {
    GradingKind kind = GradingKind::dolbeault;

    // Degree jump of one blow-up/bundle level: (1,1) resp. 2.
    Degree blowup_shift() const {
        return kind == GradingKind::dolbeault ? Degree{1, 1} : Degree{2, 0};
    }
    int parity(Degree d) const {
        int t = total(d);
        return ((t % 2) + 2) % 2;
    }
    int total(Degree d) const { return kind == GradingKind::dolbeault ? d.p + d.q : d.p; }
    bool valid(Degree d) const {
        if (kind == GradingKind::derham) return d.q == 0 && d.p >= 0;
        return d.p >= 0 && d.q >= 0;
    }
    std::string show(Degree d) const {
        if (kind == GradingKind::derham) return std::to_string(d.p);
        return "(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
    }
    friend bool operator==(const GradingMode& a, const GradingMode& b) { return a.kind == b.kind; }
};

inline GradingMode dolbeault() { return {GradingKind::dolbeault}; }
inline GradingMode derham() { return {GradingKind::derham}; }

}  // namespace gysin
