#include "gysin/embeddings.hpp"

namespace gysin {

int complex_dimension(const SpaceModel& m) {
    if (!m.fundamental_degree) throw Error("space '" + m.name + "' has no fundamental degree");
    Degree f = *m.fundamental_degree;
    if (m.mode.kind == GradingKind::dolbeault) {
        if (f.p != f.q) throw Error("fundamental degree of '" + m.name + "' is off-diagonal");
        return f.p;
    }
    if (f.p % 2) throw Error("fundamental degree of '" + m.name + "' is odd");
    return f.p / 2;
}

namespace {

// The degree-0 line of a flavor space, when present. Our connected models
// have at most one degree-0 basis element per flavor.
std::optional<int> degree_zero_index(const VectorSpace& sp) {
    const auto& comp = sp.component(Degree{0, 0});
    if (comp.empty()) return std::nullopt;
    if (comp.size() > 1) throw Error("ambiguous degree-0 component");
    return comp[0];
}

std::optional<int> top_index(const VectorSpace& sp, Degree fund) {
    const auto& comp = sp.component(fund);
    if (comp.empty()) return std::nullopt;
    if (comp.size() > 1) throw Error("fundamental component is not a line");
    return comp[0];
}

}  // namespace

BlowupDatum point_center(const SpaceModel& ambient) {
    BlowupDatum d;
    d.ambient = ambient;
    d.center = point(ambient.mode);
    for (const auto& fname : ambient.flavor_names()) add_trivial_twist(d.center, fname);
    d.r = complex_dimension(ambient);
    const Degree fund = *ambient.fundamental_degree;
    for (int i = 0; i < d.r; ++i) d.normal_chern.push_back(Element(d.center.ring.space()));

    for (const auto& fname : ambient.flavor_names()) {
        if (!d.center.has_flavor(fname)) continue;
        const Module& xf = ambient.flavor(fname);
        const Module& yf = d.center.flavor(fname);
        FlavorBlocks b{LinearMap(xf.space(), yf.space(), Degree{0, 0}),
                       LinearMap(yf.space(), xf.space(), d.r * ambient.mode.blowup_shift())};
        if (auto z = degree_zero_index(*xf.space()))
            b.restriction.set(0, *z, Rational(1));
        if (auto tpi = top_index(*xf.space(), fund)) b.gysin.set(*tpi, 0, Rational(1));
        d.blocks[fname] = std::move(b);
    }
    return d;
}

BlowupDatum linear_center(int n, int k, GradingMode mode) {
    SpaceModel pk = projective_space(k, mode);
    std::vector<Element> chern;
    for (int i = 1; i <= n - k; ++i) {
        // c_i(O(1)^{n-k}) = binomial(n-k, i) H^i, truncated at the dimension
        Int c = 1;
        for (int j = 0; j < i; ++j) c = c * (n - k - j) / (j + 1);
        Element hi(pk.ring.space());
        if (i <= k) hi = Element::basis(pk.ring.space(), i);
        chern.push_back(hi.scaled(Rational(c)));
    }
    return linear_center(n, k, mode, chern);
}

BlowupDatum linear_center(int n, int k, GradingMode mode, const std::vector<Element>& chern) {
    if (!(0 <= k && k < n)) throw Error("linear_center needs 0 <= k < n");
    BlowupDatum d;
    d.ambient = projective_space(n, mode);
    d.center = projective_space(k, mode);
    d.r = n - k;
    d.normal_chern = chern;

    const auto xs = d.ambient.ring.space();
    const auto ys = d.center.ring.space();
    LinearMap res(xs, ys, Degree{0, 0});
    for (int j = 0; j <= k; ++j) res.set(j, j, Rational(1));
    LinearMap gys(ys, xs, d.r * mode.blowup_shift());
    for (int j = 0; j <= k; ++j) gys.set(j + d.r, j, Rational(1));

    for (const auto& fname : d.ambient.flavor_names()) {
        if (!d.center.has_flavor(fname)) continue;
        // all flavors of P^n coincide with the closed one
        FlavorBlocks b{res, gys};
        d.blocks[fname] = std::move(b);
    }
    return d;
}

BlowupDatum factor_center(const SpaceModel& a, const SpaceModel& b) {
    BlowupDatum d;
    d.ambient = product(a, b);
    d.center = a;
    d.r = complex_dimension(b);
    if (d.r < 1) throw Error("factor_center needs a positive-dimensional second factor");
    for (int i = 0; i < d.r; ++i) d.normal_chern.push_back(Element(d.center.ring.space()));

    for (const auto& fname : d.ambient.flavor_names()) {
        if (!d.center.has_flavor(fname) || !b.has_flavor(fname)) continue;
        const Module& xf = d.ambient.flavor(fname);
        const Module& af = a.flavor(fname);
        const Module& bf = b.flavor(fname);
        FlavorBlocks blk{LinearMap(xf.space(), af.space(), Degree{0, 0}),
                         LinearMap(af.space(), xf.space(), d.r * a.mode.blowup_shift())};
        auto bz = degree_zero_index(*bf.space());
        auto btop = top_index(*bf.space(), *b.fundamental_degree);
        for (int i = 0; i < af.space()->dim(); ++i) {
            const std::string& la = af.space()->elem(i).label;
            if (bz) {
                int src = xf.space()->index_of(product_label(la, bf.space()->elem(*bz).label));
                blk.restriction.set(i, src, Rational(1));
            }
            if (btop) {
                int dst = xf.space()->index_of(product_label(la, bf.space()->elem(*btop).label));
                blk.gysin.set(dst, i, Rational(1));
            }
        }
        d.blocks[fname] = std::move(blk);
    }
    return d;
}

}  // namespace gysin
