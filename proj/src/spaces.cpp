#include "gysin/spaces.hpp"

#include <algorithm>

namespace gysin {

std::string flavor_meet(const std::string& a, const std::string& b) {
    if (a == kClosed) return b;
    if (b == kClosed) return a;
    if (a == b) return a;
    throw Error("no meet for flavors '" + a + "' and '" + b + "'");
}

const Module& SpaceModel::flavor(const std::string& f) const {
    auto it = flavors.find(f);
    if (it == flavors.end()) throw Error("space '" + name + "' has no flavor '" + f + "'");
    return it->second;
}

std::vector<std::string> SpaceModel::flavor_names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : flavors) out.push_back(k);
    return out;
}

std::pair<std::string, Element> SpaceModel::cup_flavored(const std::string& fa, const Element& a,
                                                         const std::string& fb,
                                                         const Element& b) const {
    std::string meet = flavor_meet(fa, fb);
    const GradingMode m = mode;
    if (fa == kClosed) return {meet, flavor(fb).act(a, b)};
    if (fb == kClosed) {
        // a cup b = (-1)^{|a||b|} b cup a through the left action
        Element out(flavor(fa).space());
        for (const auto& [i, v] : a.coords()) {
            int pa = m.parity(flavor(fa).space()->elem(i).deg);
            for (const auto& [j, w] : b.coords()) {
                int pb = m.parity(ring.space()->elem(j).deg);
                Rational s = (pa * pb) % 2 ? Rational(-1) : Rational(1);
                out += flavor(fa).act_basis(j, i).scaled(v * w * s);
            }
        }
        return {meet, out};
    }
    if (fa == kCompact && fb == kCompact) {
        if (compact_equals_closed) return {meet, flavor(kCompact).act(a, b)};
        // Only the degree-forced case is modeled.
        const auto sp = flavor(kCompact).space();
        for (const auto& [i, v] : a.coords())
            for (const auto& [j, w] : b.coords())
                if (sp->dim(sp->elem(i).deg + sp->elem(j).deg) > 0)
                    throw Error("compact cup compact is not modeled on '" + name + "'");
        return {meet, Element(sp)};
    }
    throw Error("cup of flavors '" + fa + "' and '" + fb + "' is not modeled");
}

CheckReport SpaceModel::check_all_axioms() const {
    CheckReport rep = ring.check_axioms();
    for (const auto& [f, mod] : flavors) {
        CheckReport mr = mod.check_axioms(ring);
        for (auto& v : mr.violations) v = "[" + f + "] " + v;
        rep.merge(mr);
    }
    return rep;
}

/* ------------------------------ basic models ----------------------------- */

static SpaceModel with_regular_flavors(std::string name, GradingMode mode, Ring ring,
                                       std::optional<Degree> fund) {
    SpaceModel m;
    m.name = std::move(name);
    m.mode = mode;
    m.ring = std::move(ring);
    m.flavors[kClosed] = Module::regular(m.ring);
    m.flavors[kCompact] = Module::regular(m.ring);
    m.fundamental_degree = fund;
    m.compact_equals_closed = true;
    return m;
}

SpaceModel point(GradingMode mode) {
    auto sp = make_space(mode, {{"1", Degree{0, 0}}});
    Ring r(sp, 0);
    r.set_product(0, 0, Element::basis(sp, 0));
    return with_regular_flavors("pt", mode, std::move(r), Degree{0, 0});
}

SpaceModel projective_space(int n, GradingMode mode) {
    if (n < 0) throw Error("projective_space: n must be >= 0");
    const Degree su = mode.blowup_shift();
    std::vector<BasisElem> basis;
    for (int k = 0; k <= n; ++k) {
        std::string label = k == 0 ? "1" : (k == 1 ? "H" : "H^" + std::to_string(k));
        basis.push_back({label, k * su});
    }
    auto sp = make_space(mode, basis);
    Ring r(sp, 0);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i + j <= n) r.set_product(i, j, Element::basis(sp, i + j));
    return with_regular_flavors("P" + std::to_string(n), mode, std::move(r), n * su);
}

SpaceModel affine_space(int n, GradingMode mode) {
    if (n < 1) throw Error("affine_space: n must be >= 1");
    const Degree top = n * mode.blowup_shift();
    auto sp = make_space(mode, {{"1", Degree{0, 0}}});
    Ring r(sp, 0);
    r.set_product(0, 0, Element::basis(sp, 0));

    SpaceModel m;
    m.name = "A" + std::to_string(n);
    m.mode = mode;
    m.ring = std::move(r);
    m.flavors[kClosed] = Module::regular(m.ring);
    auto csp = make_space(mode, {{"c", top}});
    Module compact(m.ring.space(), csp);
    compact.set_action(0, 0, Element::basis(csp, 0));
    m.flavors[kCompact] = std::move(compact);
    m.fundamental_degree = top;
    m.compact_equals_closed = false;
    return m;
}

SpaceModel curve(int genus) {
    if (genus < 0) throw Error("curve: genus must be >= 0");
    GradingMode mode = derham();
    std::vector<BasisElem> basis;
    basis.push_back({"1", Degree{0, 0}});
    for (int i = 1; i <= genus; ++i) basis.push_back({"a" + std::to_string(i), Degree{1, 0}});
    for (int i = 1; i <= genus; ++i) basis.push_back({"b" + std::to_string(i), Degree{1, 0}});
    basis.push_back({"w", Degree{2, 0}});
    auto sp = make_space(mode, basis);
    const int top = sp->dim() - 1;
    Ring r(sp, 0);
    for (int i = 0; i < sp->dim(); ++i) {
        r.set_product(0, i, Element::basis(sp, i));
        if (i != 0) r.set_product(i, 0, Element::basis(sp, i));
    }
    for (int i = 1; i <= genus; ++i) {
        int a = i, b = genus + i;
        r.set_product(a, b, Element::basis(sp, top));
        r.set_product(b, a, Element::basis(sp, top).scaled(Rational(-1)));
    }
    return with_regular_flavors("curve" + std::to_string(genus), mode, std::move(r), Degree{2, 0});
}

void add_trivial_twist(SpaceModel& m, const std::string& name) {
    m.flavors[name] = Module::regular(m.ring);
}

/* -------------------------------- product -------------------------------- */

std::string product_label(const std::string& a, const std::string& b) {
    return "(" + a + ")x(" + b + ")";
}

namespace {

// Tensor of two graded spaces; out_index[i][j] gives the global index of
// (i-th left basis elem) x (j-th right basis elem).
VSpacePtr tensor_space(const VectorSpace& x, const VectorSpace& y,
                       std::vector<std::vector<int>>& out_index) {
    struct Item {
        Degree deg;
        int i, j;
    };
    std::vector<Item> items;
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < y.dim(); ++j) items.push_back({x.elem(i).deg + y.elem(j).deg, i, j});
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (!(a.deg == b.deg)) return a.deg < b.deg;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    auto sp = std::make_shared<VectorSpace>(x.mode());
    out_index.assign(x.dim(), std::vector<int>(y.dim(), -1));
    for (const auto& it : items)
        out_index[it.i][it.j] =
            sp->add(product_label(x.elem(it.i).label, y.elem(it.j).label), it.deg);
    return sp;
}

}  // namespace

SpaceModel product(const SpaceModel& x, const SpaceModel& y) {
    if (!(x.mode == y.mode)) throw Error("product: grading mode mismatch");
    const GradingMode mode = x.mode;

    std::vector<std::vector<int>> rix;
    VSpacePtr rsp = tensor_space(*x.ring.space(), *y.ring.space(), rix);
    Ring r(rsp, rix[x.ring.unit_index()][y.ring.unit_index()]);
    const auto& xs = *x.ring.space();
    const auto& ys = *y.ring.space();
    for (int i1 = 0; i1 < xs.dim(); ++i1)
        for (int j1 = 0; j1 < ys.dim(); ++j1)
            for (int i2 = 0; i2 < xs.dim(); ++i2)
                for (int j2 = 0; j2 < ys.dim(); ++j2) {
                    // (a x b)(c x d) = (-1)^{|b||c|} (ac) x (bd)
                    Element ac = x.ring.cup_basis(i1, i2);
                    if (ac.is_zero()) continue;
                    Element bd = y.ring.cup_basis(j1, j2);
                    if (bd.is_zero()) continue;
                    int s = mode.parity(ys.elem(j1).deg) * mode.parity(xs.elem(i2).deg);
                    Element val(rsp);
                    for (const auto& [a, va] : ac.coords())
                        for (const auto& [b, vb] : bd.coords()) val.add(rix[a][b], va * vb);
                    if (s % 2) val = val.scaled(Rational(-1));
                    r.set_product(rix[i1][j1], rix[i2][j2], val);
                }

    SpaceModel m;
    m.name = x.name + " x " + y.name;
    m.mode = mode;
    m.ring = std::move(r);
    m.flavors[kClosed] = Module::regular(m.ring);
    m.compact_equals_closed = x.compact_equals_closed && y.compact_equals_closed;
    if (x.fundamental_degree && y.fundamental_degree)
        m.fundamental_degree = *x.fundamental_degree + *y.fundamental_degree;

    // Non-closed flavors tensor componentwise. The compact flavor follows the
    // support calculus c_X x c_Y = c_{X x Y}; its Kunneth validity needs the
    // second factor's plain cohomology, hence the guard.
    for (const auto& fname : x.flavor_names()) {
        if (fname == kClosed || !y.has_flavor(fname)) continue;
        if (fname == kCompact && !(y.compact_equals_closed || (x.has_flavor(kCompact) && y.has_flavor(kCompact))))
            continue;
        const Module& xf = x.flavor(fname);
        const Module& yf = y.flavor(fname);
        std::vector<std::vector<int>> fix;
        VSpacePtr fsp = tensor_space(*xf.space(), *yf.space(), fix);
        Module mod(rsp, fsp);
        const auto& xfs = *xf.space();
        const auto& yfs = *yf.space();
        for (int i1 = 0; i1 < xs.dim(); ++i1)
            for (int j1 = 0; j1 < ys.dim(); ++j1)
                for (int i2 = 0; i2 < xfs.dim(); ++i2)
                    for (int j2 = 0; j2 < yfs.dim(); ++j2) {
                        Element ag = xf.act_basis(i1, i2);
                        if (ag.is_zero()) continue;
                        Element bh = yf.act_basis(j1, j2);
                        if (bh.is_zero()) continue;
                        int s = mode.parity(ys.elem(j1).deg) * mode.parity(xfs.elem(i2).deg);
                        Element val(fsp);
                        for (const auto& [a, va] : ag.coords())
                            for (const auto& [b, vb] : bh.coords()) val.add(fix[a][b], va * vb);
                        if (s % 2) val = val.scaled(Rational(-1));
                        mod.set_action(rix[i1][j1], fix[i2][j2], val);
                    }
        m.flavors[fname] = std::move(mod);
    }
    return m;
}

/* --------------------------- projective bundles --------------------------- */

namespace {

std::string h_label(int i, const std::string& base) {
    if (i == 0) return base;
    std::string h = i == 1 ? "h" : "h^" + std::to_string(i);
    return base == "1" ? h : h + "*(" + base + ")";
}

// Index map for the free module on 1, h, .., h^{r-1} over `fiberless`.
VSpacePtr ladder_space(const VectorSpace& base, int r, Degree su,
                       std::vector<std::vector<int>>& out_index) {
    struct Item {
        Degree deg;
        int level, idx;
    };
    std::vector<Item> items;
    for (int l = 0; l < r; ++l)
        for (int i = 0; i < base.dim(); ++i) items.push_back({base.elem(i).deg + l * su, l, i});
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (!(a.deg == b.deg)) return a.deg < b.deg;
        if (a.level != b.level) return a.level < b.level;
        return a.idx < b.idx;
    });
    auto sp = std::make_shared<VectorSpace>(base.mode());
    out_index.assign(r, std::vector<int>(base.dim(), -1));
    for (const auto& it : items)
        out_index[it.level][it.idx] = sp->add(h_label(it.level, base.elem(it.idx).label), it.deg);
    return sp;
}

}  // namespace

Bundle projective_bundle(const SpaceModel& base, const std::vector<Element>& chern, int r) {
    if (r < 1) throw Error("projective_bundle: rank must be >= 1");
    if (static_cast<int>(chern.size()) != r)
        throw Error("projective_bundle: expected r Chern classes");
    const GradingMode mode = base.mode;
    const Degree su = mode.blowup_shift();
    for (int i = 1; i <= r; ++i) {
        auto d = chern[i - 1].degree();
        if (d && !(*d == i * su))
            throw Error("projective_bundle: c_" + std::to_string(i) + " has wrong degree");
    }

    // Reduction table: h^t = sum_m h^m * hpow[t][m] for t = 0..2r-2, from
    // h^r = sum_{s=1}^{r} (-1)^{s+1} c_s h^{r-s}.
    std::vector<Element> rel(r, Element(base.ring.space()));
    for (int s = 1; s <= r; ++s) rel[r - s] = chern[s - 1].scaled(Rational(s % 2 ? 1 : -1));
    std::vector<std::vector<Element>> hpow;
    for (int t = 0; t <= 2 * r - 2; ++t) {
        std::vector<Element> row(r, Element(base.ring.space()));
        if (t < r) {
            row[t] = base.ring.unit();
        } else {
            const auto& prev = hpow[t - 1];
            for (int m = 0; m < r; ++m) {
                if (m >= 1) row[m] += prev[m - 1];
                row[m] += base.ring.cup(prev[r - 1], rel[m]);
            }
        }
        hpow.push_back(std::move(row));
    }

    std::vector<std::vector<int>> rix;
    VSpacePtr rsp = ladder_space(*base.ring.space(), r, su, rix);
    Ring ring(rsp, rix[0][base.ring.unit_index()]);
    const auto& bs = *base.ring.space();
    auto embed_ring = [&](int level, const Element& e) {
        Element out(rsp);
        for (const auto& [i, v] : e.coords()) out.add(rix[level][i], v);
        return out;
    };
    for (int l1 = 0; l1 < r; ++l1)
        for (int i1 = 0; i1 < bs.dim(); ++i1)
            for (int l2 = 0; l2 < r; ++l2)
                for (int i2 = 0; i2 < bs.dim(); ++i2) {
                    Element xy = base.ring.cup_basis(i1, i2);
                    if (xy.is_zero()) continue;
                    Element val(rsp);
                    for (int m = 0; m < r; ++m)
                        val += embed_ring(m, base.ring.cup(hpow[l1 + l2][m], xy));
                    ring.set_product(rix[l1][i1], rix[l2][i2], val);
                }

    Bundle out;
    out.total.name = "P(E) over " + base.name;
    out.total.mode = mode;
    out.total.ring = std::move(ring);
    out.total.compact_equals_closed = base.compact_equals_closed;
    if (base.fundamental_degree)
        out.total.fundamental_degree = *base.fundamental_degree + (r - 1) * su;

    out.maps.r = r;
    out.maps.unit_shift = su;
    if (r >= 2)
        out.maps.h = Element::basis(rsp, rix[1][base.ring.unit_index()]);
    else
        // P of a line bundle is the base itself and the relation pins h = c_1.
        out.maps.h = embed_ring(0, rel[0]);
    out.maps.segre.clear();
    Rational sgn((r - 1) % 2 ? -1 : 1);
    for (int k = 1; k <= r - 1; ++k) out.maps.segre.push_back(hpow[r - 1 + k][r - 1].scaled(sgn));
    out.maps.hpow = hpow;

    {
        LinearMap rp(base.ring.space(), rsp, Degree{0, 0});
        for (int i = 0; i < bs.dim(); ++i) rp.set(rix[0][i], i, Rational(1));
        LinearMap rq(rsp, base.ring.space(), Degree{0, 0} - (r - 1) * su);
        for (int i = 0; i < bs.dim(); ++i) rq.set(i, rix[r - 1][i], sgn);
        out.maps.ring_pull = std::move(rp);
        out.maps.ring_push = std::move(rq);
    }

    for (const auto& fname : base.flavor_names()) {
        const Module& bf = base.flavor(fname);
        std::vector<std::vector<int>> fix;
        VSpacePtr fsp = ladder_space(*bf.space(), r, su, fix);
        auto embed_f = [&](int level, const Element& e) {
            Element out_e(fsp);
            for (const auto& [i, v] : e.coords()) out_e.add(fix[level][i], v);
            return out_e;
        };
        Module mod(rsp, fsp);
        for (int l1 = 0; l1 < r; ++l1)
            for (int i1 = 0; i1 < bs.dim(); ++i1)
                for (int l2 = 0; l2 < r; ++l2)
                    for (int i2 = 0; i2 < bf.space()->dim(); ++i2) {
                        Element xg = bf.act_basis(i1, i2);
                        if (xg.is_zero()) continue;
                        Element val(fsp);
                        for (int m = 0; m < r; ++m)
                            val += embed_f(m, bf.act(hpow[l1 + l2][m], xg));
                        mod.set_action(rix[l1][i1], fix[l2][i2], val);
                    }
        out.total.flavors[fname] = std::move(mod);

        LinearMap pull(bf.space(), fsp, Degree{0, 0});
        for (int i = 0; i < bf.space()->dim(); ++i) pull.set(fix[0][i], i, Rational(1));
        LinearMap push(fsp, bf.space(), Degree{0, 0} - (r - 1) * su);
        for (int i = 0; i < bf.space()->dim(); ++i) push.set(i, fix[r - 1][i], sgn);
        out.maps.pull[fname] = std::move(pull);
        out.maps.push[fname] = std::move(push);
    }
    return out;
}

LinearMap BundleMaps::push_after_h(int j, const std::string& flavor, const SpaceModel& total) const {
    const Module& mod = total.flavor(flavor);
    Element hj = total.ring.power(h, j);
    return compose(push.at(flavor), mod.act_by(hj, j * unit_shift));
}

MuTau mu_tau_pair(const SpaceModel& base, const Bundle& bundle, const std::string& flavor) {
    const int r = bundle.maps.r;
    const Degree su = bundle.maps.unit_shift;
    const Module& bf = base.flavor(flavor);
    const Module& tf = bundle.total.flavor(flavor);

    MuTau out;
    std::vector<VSpacePtr> spaces(r, bf.space());
    std::vector<Degree> offsets;
    std::vector<std::string> prefixes;
    for (int i = 0; i < r; ++i) {
        offsets.push_back(i * su);
        prefixes.push_back("[" + std::to_string(i) + "]");
    }
    out.dsum = direct_sum_with_shifts(spaces, offsets, prefixes);

    LinearMap mu = LinearMap::zero(out.dsum.space, tf.space(), Degree{0, 0});
    for (int i = 0; i < r; ++i) {
        Element hi = bundle.total.ring.power(bundle.maps.h, i);
        LinearMap cup_hi = tf.act_by(hi, i * su);
        mu = mu + compose(compose(cup_hi, bundle.maps.pull.at(flavor)), out.dsum.proj[i]);
    }
    out.mu = std::move(mu);

    GysinFamily fam = compute_family(r);
    std::vector<LinearMap> push_h;
    for (int j = 0; j < r; ++j) push_h.push_back(bundle.maps.push_after_h(j, flavor, bundle.total));
    out.G = assemble_g(fam, bundle.maps.segre, push_h, base.ring, bf);

    LinearMap tau = LinearMap::zero(tf.space(), out.dsum.space, Degree{0, 0});
    for (int i = 0; i < r; ++i) tau = tau + compose(out.dsum.incl[i], out.G[i]);
    out.tau = std::move(tau);
    return out;
}

}  // namespace gysin
