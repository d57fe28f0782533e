#include "gysin/polys.hpp"

#include <sstream>

namespace gysin {

IntPoly IntPoly::constant(int nvars, const Int& c) {
    IntPoly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

IntPoly IntPoly::variable(int nvars, int k) {
    if (k < 1 || k > nvars) throw Error("variable index out of range");
    IntPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e[k - 1] = 1;
    p.add_term(e, 1);
    return p;
}

IntPoly& IntPoly::add_term(const std::vector<int>& expo, const Int& c) {
    if (static_cast<int>(expo.size()) != nvars_) throw Error("exponent arity mismatch");
    if (c == 0) return *this;
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        terms_[expo] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    if (nvars_ != o.nvars_) throw Error("polynomial arity mismatch");
    IntPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + o.scaled(-1); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (nvars_ != o.nvars_) throw Error("polynomial arity mismatch");
    IntPoly out(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

IntPoly IntPoly::scaled(const Int& c) const {
    IntPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
    return out;
}

std::string IntPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool has_var = false;
        for (int i = 0; i < nvars_; ++i) has_var = has_var || e[i] > 0;
        if (has_var && c == -1)
            os << "-";
        else if (!has_var || c != 1)
            os << c.get_str();
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "T" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

GysinFamily compute_family(int r) {
    if (r < 1) throw Error("codimension must be >= 1");
    GysinFamily fam;
    fam.r = r;
    const int n = r - 1;
    fam.polys.assign(r, IntPoly(n));
    fam.polys[r - 1] = IntPoly::constant(n, (r - 1) % 2 ? -1 : 1);
    for (int i = r - 2; i >= 0; --i) {
        IntPoly acc(n);
        for (int k = 1; k <= r - 1 - i; ++k)
            acc = acc + IntPoly::variable(n, k) * fam.polys[k + i];
        fam.polys[i] = acc.scaled(r % 2 ? -1 : 1);
    }
    return fam;
}

CheckReport weighted_degree_check(const GysinFamily& fam) {
    CheckReport rep;
    for (int i = 0; i < fam.r; ++i)
        for (const auto& [e, c] : fam.polys[i].terms()) {
            long w = 0;
            for (std::size_t k = 0; k < e.size(); ++k) w += static_cast<long>(k + 1) * e[k];
            if (w != fam.r - 1 - i)
                rep.fail("P_" + std::to_string(i) + " has a monomial of weighted degree " +
                         std::to_string(w) + ", expected " + std::to_string(fam.r - 1 - i));
        }
    return rep;
}

CheckReport kronecker_check(const GysinFamily& fam) {
    CheckReport rep;
    const int r = fam.r;
    const int n = r - 1;
    IntPoly t0 = IntPoly::constant(n, (r - 1) % 2 ? -1 : 1);
    for (int k = 0; k <= r - 1; ++k) {
        IntPoly h(n);
        for (int i = r - 1; i <= r - 1 + k; ++i) {
            IntPoly t = (i == r - 1) ? t0 : IntPoly::variable(n, i - (r - 1));
            h = h + t * fam.polys[i - k];
        }
        IntPoly expect = (k == 0) ? IntPoly::constant(n, 1) : IntPoly(n);
        if (!(h == expect))
            rep.fail("H_" + std::to_string(k) + " = " + h.str() + " for r = " + std::to_string(r));
    }
    return rep;
}

Element eval_poly(const IntPoly& p, const std::vector<Element>& values, const Ring& ring) {
    if (static_cast<int>(values.size()) != p.nvars()) throw Error("eval_poly arity mismatch");
    Element out(ring.space());
    for (const auto& [e, c] : p.terms()) {
        Element term = ring.unit();
        for (int k = 0; k < p.nvars(); ++k)
            for (int d = 0; d < e[k]; ++d) term = ring.cup(term, values[k]);
        out += term.scaled(Rational(c));
    }
    return out;
}

std::vector<LinearMap> assemble_g(const GysinFamily& fam, const std::vector<Element>& segre,
                                  const std::vector<LinearMap>& push_h, const Ring& base_ring,
                                  const Module& base_flavor) {
    const int r = fam.r;
    if (static_cast<int>(segre.size()) != r - 1) throw Error("assemble_g: expected r-1 segre values");
    if (static_cast<int>(push_h.size()) != r) throw Error("assemble_g: expected r pushforwards");
    const Degree shift = base_ring.space()->mode().blowup_shift();
    for (int k = 1; k <= r - 1; ++k) {
        auto d = segre[k - 1].degree();
        if (d && !(*d == k * shift))
            throw Error("segre value " + std::to_string(k) + " has wrong degree");
    }
    std::vector<LinearMap> out;
    for (int i = 0; i < r; ++i) {
        LinearMap g = LinearMap::zero(push_h[0].source(), base_flavor.space(),
                                      Degree{0, 0} - (i * shift));
        for (int j = 0; j <= r - 1 - i; ++j) {
            Element coeff = eval_poly(fam.polys[i + j], segre, base_ring);
            // P_{i+j}(segre) is homogeneous of degree (r-1-i-j) * shift by the
            // weighted degree lemma; that makes the total shift -i * shift.
            LinearMap mult = base_flavor.act_by(coeff, (r - 1 - i - j) * shift);
            g = g + compose(mult, push_h[j]);
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace gysin
