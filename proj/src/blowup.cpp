#include "gysin/blowup.hpp"

#include <algorithm>

#include "gysin/dcomplex.hpp"

namespace gysin {

namespace {

std::string bu_label(int summand, const std::string& l) {
    if (summand == 0) return "pi*(" + l + ")";
    return "E" + std::to_string(summand) + "(" + l + ")";
}

struct TotalIndex {
    VSpacePtr space;
    std::vector<int> amb;                 // ambient index -> total index
    std::vector<std::vector<int>> cen;    // [k-1][center index] -> total index
};

TotalIndex build_total_space(const VectorSpace& amb, const VectorSpace& cen, int r, Degree su) {
    struct Item {
        Degree deg;
        int summand, idx;
    };
    std::vector<Item> items;
    for (int i = 0; i < amb.dim(); ++i) items.push_back({amb.elem(i).deg, 0, i});
    for (int k = 1; k <= r - 1; ++k)
        for (int i = 0; i < cen.dim(); ++i) items.push_back({cen.elem(i).deg + k * su, k, i});
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (!(a.deg == b.deg)) return a.deg < b.deg;
        if (a.summand != b.summand) return a.summand < b.summand;
        return a.idx < b.idx;
    });
    TotalIndex out;
    auto sp = std::make_shared<VectorSpace>(amb.mode());
    out.amb.resize(amb.dim());
    out.cen.assign(std::max(0, r - 1), std::vector<int>(cen.dim(), -1));
    for (const auto& it : items) {
        std::string base = it.summand == 0 ? amb.elem(it.idx).label : cen.elem(it.idx).label;
        int gi = sp->add(bu_label(it.summand, base), it.deg);
        if (it.summand == 0)
            out.amb[it.idx] = gi;
        else
            out.cen[it.summand - 1][it.idx] = gi;
    }
    out.space = sp;
    return out;
}

// One flavor's worth of blow-up structure.
struct FlavorBuild {
    TotalIndex ix;
    const Module* amb_mod;
    const Module* cen_mod;
    const FlavorBlocks* blocks;
    const std::vector<std::vector<Element>>* hpow;  // exceptional reduction table, center-ring coeffs
    const std::vector<Element>* chern;
    int r;
    Degree su;

    Element embed_amb(const Element& e) const {
        Element out(ix.space);
        for (const auto& [i, v] : e.coords()) out.add(ix.amb[i], v);
        return out;
    }
    Element embed_cen(int k, const Element& e) const {
        Element out(ix.space);
        for (const auto& [i, v] : e.coords()) out.add(ix.cen[k - 1][i], v);
        return out;
    }

    // The class i_{E*}(h^m cup pi_E^* g) written in the blow-up basis. For
    // m <= r-2 this is E_{m+1}(g); at m = r-1 the excess intersection formula
    // trades the top power for pi^* i_{Y*} g and lower E-classes; higher m
    // first reduces h^m in H(E).
    Element push(int m, const Element& g) const {
        if (g.is_zero()) return Element(ix.space);
        if (m >= r) {
            Element out(ix.space);
            for (int t = 0; t < r; ++t) out += push(t, cen_mod->act((*hpow)[m][t], g));
            return out;
        }
        if (m <= r - 2) return embed_cen(m + 1, g);
        Rational sgn((r - 1) % 2 ? -1 : 1);
        Element out = embed_amb(blocks->gysin.apply(g)).scaled(sgn);
        for (int i = 0; i <= r - 2; ++i) {
            Rational s = (i % 2 ? Rational(-1) : Rational(1)) * sgn;
            out -= embed_cen(i + 1, cen_mod->act((*chern)[r - 2 - i], g)).scaled(s);
        }
        return out;
    }
};

}  // namespace

CheckReport validate_datum(const BlowupDatum& d) {
    CheckReport rep;
    if (!(d.ambient.mode == d.center.mode)) {
        rep.fail("ambient and center use different grading modes");
        return rep;
    }
    if (d.r < 1) {
        rep.fail("codimension must be >= 1");
        return rep;
    }
    const Degree su = d.ambient.mode.blowup_shift();
    if (static_cast<int>(d.normal_chern.size()) != d.r)
        rep.fail("expected r normal Chern classes");
    for (int i = 1; i <= static_cast<int>(d.normal_chern.size()); ++i) {
        auto deg = d.normal_chern[i - 1].degree();
        if (deg && !(*deg == i * su)) rep.fail("c_" + std::to_string(i) + " has wrong degree");
    }
    if (!d.blocks.count(kClosed)) {
        rep.fail("datum lacks the closed flavor blocks");
        return rep;
    }
    if (!rep.ok) return rep;

    const Element cr = d.normal_chern[d.r - 1];
    for (const auto& [fname, blocks] : d.blocks) {
        if (!d.ambient.has_flavor(fname) || !d.center.has_flavor(fname)) {
            rep.fail("[" + fname + "] flavor missing on ambient or center");
            continue;
        }
        const Module& amb = d.ambient.flavor(fname);
        const Module& cen = d.center.flavor(fname);
        if (!(*blocks.restriction.source() == *amb.space()) ||
            !(*blocks.restriction.target() == *cen.space())) {
            rep.fail("[" + fname + "] restriction block has wrong spaces");
            continue;
        }
        if (!(*blocks.gysin.source() == *cen.space()) ||
            !(*blocks.gysin.target() == *amb.space())) {
            rep.fail("[" + fname + "] gysin block has wrong spaces");
            continue;
        }
        if (!(blocks.gysin.shift() == d.r * su)) rep.fail("[" + fname + "] gysin shift is not r*shift");
        if (!(blocks.restriction.shift() == Degree{0, 0}))
            rep.fail("[" + fname + "] restriction is not degree-preserving");

        if (fname == kClosed) {
            CheckReport rm = check_ring_map(d.ambient.ring, d.center.ring, blocks.restriction);
            for (auto& v : rm.violations) v = "[closed] restriction " + v;
            rep.merge(rm);
        } else {
            // restriction must be a module map over the closed restriction
            const LinearMap& res0 = d.blocks.at(kClosed).restriction;
            for (int x = 0; x < d.ambient.ring.space()->dim(); ++x)
                for (int g = 0; g < amb.space()->dim(); ++g) {
                    Element lhs = blocks.restriction.apply(amb.act_basis(x, g));
                    Element rhs = cen.act(res0.apply_basis(x), blocks.restriction.apply_basis(g));
                    if (!(lhs == rhs))
                        rep.fail("[" + fname + "] restriction not a module map on (" +
                                 d.ambient.ring.space()->elem(x).label + ", " +
                                 amb.space()->elem(g).label + ")");
                }
        }

        CheckReport pf = check_projection_formula(cen, amb, d.ambient.ring,
                                                  d.blocks.at(kClosed).restriction, blocks.gysin);
        for (auto& v : pf.violations) v = "[" + fname + "] gysin " + v;
        rep.merge(pf);

        for (int g = 0; g < cen.space()->dim(); ++g) {
            Element lhs = blocks.restriction.apply(blocks.gysin.apply_basis(g));
            Element rhs = cen.act(cr, Element::basis(cen.space(), g));
            if (!(lhs == rhs))
                rep.fail("[" + fname + "] self-intersection closure fails on " +
                         cen.space()->elem(g).label);
        }
    }
    return rep;
}

BlowupResult blow_up(const BlowupDatum& datum) {
    CheckReport val = validate_datum(datum);
    if (!val.ok) throw Error("invalid blow-up datum: " + val.summary());

    BlowupResult res;
    res.datum = datum;
    const int r = datum.r;
    const Degree su = datum.ambient.mode.blowup_shift();

    res.exceptional = projective_bundle(datum.center, datum.normal_chern, r);
    const auto& hpow = res.exceptional.maps.hpow;

    // Total ring: built through the closed flavor rules.
    const Module amb_reg = Module::regular(datum.ambient.ring);
    const Module cen_reg = Module::regular(datum.center.ring);
    TotalIndex rix = build_total_space(*datum.ambient.ring.space(), *datum.center.ring.space(), r, su);
    FlavorBuild ring_build{rix,    &amb_reg, &cen_reg, &datum.blocks.at(kClosed),
                           &hpow,  &datum.normal_chern, r, su};
    const LinearMap& res_ring = datum.blocks.at(kClosed).restriction;

    Ring total_ring(rix.space, rix.amb[datum.ambient.ring.unit_index()]);
    auto fill_products = [&](const FlavorBuild& fb, auto&& sink) {
        const VectorSpace& ams = *datum.ambient.ring.space();
        const VectorSpace& cns = *datum.center.ring.space();
        const VectorSpace& amf = *fb.amb_mod->space();
        const VectorSpace& cnf = *fb.cen_mod->space();
        // ring element pi*(x)
        for (int x = 0; x < ams.dim(); ++x) {
            Element rx = res_ring.apply_basis(x);
            for (int g = 0; g < amf.dim(); ++g)
                sink(rix.amb[x], fb.ix.amb[g], fb.embed_amb(fb.amb_mod->act_basis(x, g)));
            for (int k = 1; k <= r - 1; ++k)
                for (int g = 0; g < cnf.dim(); ++g)
                    sink(rix.amb[x], fb.ix.cen[k - 1][g],
                         fb.embed_cen(k, fb.cen_mod->act(rx, Element::basis(fb.cen_mod->space(), g))));
        }
        // ring element E_j(a)
        for (int j = 1; j <= r - 1; ++j)
            for (int a = 0; a < cns.dim(); ++a) {
                Element ea = Element::basis(datum.center.ring.space(), a);
                for (int g = 0; g < amf.dim(); ++g) {
                    Element down = fb.blocks->restriction.apply_basis(g);
                    sink(rix.cen[j - 1][a], fb.ix.amb[g],
                         fb.push(j - 1, fb.cen_mod->act(ea, down)));
                }
                for (int k = 1; k <= r - 1; ++k)
                    for (int g = 0; g < cnf.dim(); ++g)
                        sink(rix.cen[j - 1][a], fb.ix.cen[k - 1][g],
                             fb.push(j + k - 1,
                                     fb.cen_mod->act(ea, Element::basis(fb.cen_mod->space(), g))));
            }
    };
    fill_products(ring_build, [&](int i, int j, const Element& v) { total_ring.set_product(i, j, v); });

    res.total.name = "Bl_" + datum.center.name + "(" + datum.ambient.name + ")";
    res.total.mode = datum.ambient.mode;
    res.total.ring = std::move(total_ring);
    res.total.compact_equals_closed =
        datum.ambient.compact_equals_closed && datum.center.compact_equals_closed;
    res.total.fundamental_degree = datum.ambient.fundamental_degree;

    // c_{r-1}(Q) = sum (-1)^i h^i cup pi_E^* c_{r-1-i}(N) in the exceptional ring
    {
        const Ring& er = res.exceptional.total.ring;
        Element cq(er.space());
        for (int i = 0; i <= r - 1; ++i) {
            Element ci = i == r - 1 ? datum.center.ring.unit() : datum.normal_chern[r - 2 - i];
            Element up = res.exceptional.maps.ring_pull.apply(ci);
            Element term = er.cup(er.power(res.exceptional.maps.h, i), up);
            cq += i % 2 ? term.scaled(Rational(-1)) : term;
        }
        res.quotient_chern_top = cq;
    }

    for (const auto& [fname, blocks] : datum.blocks) {
        const Module& amb = datum.ambient.flavor(fname);
        const Module& cen = datum.center.flavor(fname);
        TotalIndex fix = fname == kClosed
                             ? rix
                             : build_total_space(*amb.space(), *cen.space(), r, su);
        FlavorBuild fb{fix, &amb, &cen, &blocks, &hpow, &datum.normal_chern, r, su};

        Module mod(rix.space, fix.space);
        fill_products(fb, [&](int i, int j, const Element& v) { mod.set_action(i, j, v); });
        res.total.flavors[fname] = std::move(mod);

        LinearMap pi_pull(amb.space(), fix.space, Degree{0, 0});
        for (int i = 0; i < amb.space()->dim(); ++i) pi_pull.set(fix.amb[i], i, Rational(1));
        LinearMap pi_push(fix.space, amb.space(), Degree{0, 0});
        for (int i = 0; i < amb.space()->dim(); ++i) pi_push.set(i, fix.amb[i], Rational(1));

        const Module& ef = res.exceptional.total.flavor(fname);
        const LinearMap& e_pull = res.exceptional.maps.pull.at(fname);
        LinearMap iE_pull(fix.space, ef.space(), Degree{0, 0});
        for (int i = 0; i < amb.space()->dim(); ++i)
            iE_pull.set_column(fix.amb[i], e_pull.apply(blocks.restriction.apply_basis(i)));
        for (int k = 1; k <= r - 1; ++k) {
            Element hk = res.exceptional.total.ring.power(res.exceptional.maps.h, k);
            LinearMap cup_hk = ef.act_by(hk, k * su);
            for (int i = 0; i < cen.space()->dim(); ++i)
                iE_pull.set_column(fix.cen[k - 1][i], cup_hk.apply(e_pull.apply_basis(i)));
        }

        MuTau mt = mu_tau_pair(datum.center, res.exceptional, fname);
        LinearMap iE_push = LinearMap::zero(ef.space(), fix.space, su);
        for (int i = 0; i < r; ++i) {
            LinearMap push_i(cen.space(), fix.space, (i + 1) * su);
            for (int j = 0; j < cen.space()->dim(); ++j)
                push_i.set_column(j, fb.push(i, Element::basis(cen.space(), j)));
            iE_push = iE_push + compose(push_i, mt.G[i]);
        }

        std::vector<VSpacePtr> spaces{amb.space()};
        std::vector<Degree> offsets{Degree{0, 0}};
        std::vector<std::string> prefixes{"X:"};
        for (int k = 1; k <= r - 1; ++k) {
            spaces.push_back(cen.space());
            offsets.push_back(k * su);
            prefixes.push_back("Y" + std::to_string(k) + ":");
        }
        DirectSum ds = direct_sum_with_shifts(spaces, offsets, prefixes);

        LinearMap emb0(amb.space(), fix.space, Degree{0, 0});
        for (int i = 0; i < amb.space()->dim(); ++i) emb0.set(fix.amb[i], i, Rational(1));
        LinearMap psi = compose(emb0, ds.proj[0]);
        for (int k = 1; k <= r - 1; ++k) {
            LinearMap embk(cen.space(), fix.space, k * su);
            for (int i = 0; i < cen.space()->dim(); ++i) embk.set(fix.cen[k - 1][i], i, Rational(1));
            psi = psi + compose(embk, ds.proj[k]);
        }
        LinearMap phi = compose(ds.incl[0], pi_push);
        for (int k = 1; k <= r - 1; ++k)
            phi = phi + compose(ds.incl[k], compose(mt.G[k], iE_pull));

        res.pi_pull[fname] = std::move(pi_pull);
        res.pi_push[fname] = std::move(pi_push);
        res.iE_pull[fname] = std::move(iE_pull);
        res.iE_push[fname] = std::move(iE_push);
        res.G[fname] = std::move(mt.G);
        res.dsum[fname] = std::move(ds);
        res.psi[fname] = std::move(psi);
        res.phi[fname] = std::move(phi);
    }
    return res;
}

CheckReport verify_inverse_pair(const BlowupResult& res) {
    CheckReport rep;
    for (const auto& [f, psi] : res.psi) {
        if (!compose(res.phi.at(f), psi).is_identity())
            rep.fail("[" + f + "] phi . psi is not the identity");
        if (!compose(psi, res.phi.at(f)).is_identity())
            rep.fail("[" + f + "] psi . phi is not the identity");
    }
    return rep;
}

CheckReport dimension_identity_check(const BlowupResult& res) {
    CheckReport rep;
    for (const auto& [f, blocks] : res.datum.blocks) {
        auto td = res.total.flavor(f).space()->dims();
        auto yd = res.datum.center.flavor(f).space()->dims();
        auto xd = res.datum.ambient.flavor(f).space()->dims();
        auto ed = res.exceptional.total.flavor(f).space()->dims();
        std::map<Degree, int> lhs, rhs;
        for (const auto& [d, n] : td) lhs[d] += n;
        for (const auto& [d, n] : yd) lhs[d] += n;
        for (const auto& [d, n] : xd) rhs[d] += n;
        for (const auto& [d, n] : ed) rhs[d] += n;
        if (!(lhs == rhs)) rep.fail("[" + f + "] dimension identity fails");
    }
    return rep;
}

CheckReport self_intersection_check(const BlowupResult& res) {
    CheckReport rep;
    const Degree su = res.datum.ambient.mode.blowup_shift();
    for (const auto& [f, pull] : res.iE_pull) {
        const Module& ef = res.exceptional.total.flavor(f);
        LinearMap lhs = compose(pull, res.iE_push.at(f));
        LinearMap rhs = ef.act_by(res.exceptional.maps.h, su);
        if (!(lhs == rhs)) rep.fail("[" + f + "] i_E^* i_E* differs from h cup .");
    }
    return rep;
}

CheckReport excess_intersection_check(const BlowupResult& res) {
    CheckReport rep;
    const int r = res.datum.r;
    const Degree su = res.datum.ambient.mode.blowup_shift();
    for (const auto& [f, blocks] : res.datum.blocks) {
        const Module& ef = res.exceptional.total.flavor(f);
        LinearMap cup_cq = ef.act_by(res.quotient_chern_top, (r - 1) * su);
        LinearMap lhs = compose(res.iE_push.at(f),
                                compose(cup_cq, res.exceptional.maps.pull.at(f)));
        LinearMap rhs = compose(res.pi_pull.at(f), blocks.gysin);
        if (!(lhs == rhs)) rep.fail("[" + f + "] excess intersection identity fails");
    }
    return rep;
}

CheckReport push_compat_check(const BlowupResult& res) {
    CheckReport rep;
    for (const auto& [f, blocks] : res.datum.blocks) {
        LinearMap lhs = compose(res.pi_push.at(f), res.iE_push.at(f));
        LinearMap rhs = compose(blocks.gysin, res.exceptional.maps.push.at(f));
        if (!(lhs == rhs)) rep.fail("[" + f + "] pi_* i_E* differs from i_Y* pi_E*");
    }
    return rep;
}

CheckReport verify_blowup(const BlowupResult& res) {
    CheckReport rep = res.total.check_all_axioms();
    for (const auto& [f, blocks] : res.datum.blocks) {
        if (f == kClosed) {
            // pi^* and i_E^* are ring maps; their spaces coincide with the
            // flavor spaces for the closed flavor.
            CheckReport r1 = check_ring_map(res.datum.ambient.ring, res.total.ring, res.pi_pull.at(f));
            for (auto& v : r1.violations) v = "pi^* " + v;
            rep.merge(r1);
            CheckReport r2 =
                check_ring_map(res.total.ring, res.exceptional.total.ring, res.iE_pull.at(f));
            for (auto& v : r2.violations) v = "i_E^* " + v;
            rep.merge(r2);
        }
        CheckReport p1 = check_projection_formula(res.total.flavor(f), res.datum.ambient.flavor(f),
                                                  res.datum.ambient.ring, res.pi_pull.at(kClosed),
                                                  res.pi_push.at(f));
        for (auto& v : p1.violations) v = "[" + f + "] (pi_*, pi^*) " + v;
        rep.merge(p1);
        CheckReport p2 = check_projection_formula(res.exceptional.total.flavor(f),
                                                  res.total.flavor(f), res.total.ring,
                                                  res.iE_pull.at(kClosed), res.iE_push.at(f));
        for (auto& v : p2.violations) v = "[" + f + "] (i_E*, i_E^*) " + v;
        rep.merge(p2);
    }
    rep.merge(self_intersection_check(res));
    rep.merge(excess_intersection_check(res));
    rep.merge(push_compat_check(res));
    rep.merge(verify_inverse_pair(res));
    rep.merge(dimension_identity_check(res));
    return rep;
}

TruncatedCheck truncated_hypercohomology_dims(const BlowupResult& res, int s, int t) {
    if (!(res.datum.ambient.mode == dolbeault()))
        throw Error("truncated hypercohomology requires dolbeault mode");
    const int r = res.datum.r;
    auto dots = [](const VectorSpace& sp) {
        DoubleComplex k;
        for (const auto& [d, n] : sp.dims()) k.components[d] = n;
        return k;
    };
    TruncatedCheck out;
    DoubleComplex up = truncate_columns(dots(*res.total.ring.space()), s, t);
    out.total_dims = total_cohomology(up);
    DoubleComplex amb = truncate_columns(dots(*res.datum.ambient.ring.space()), s, t);
    out.expected_dims = total_cohomology(amb);
    for (int i = 1; i <= r - 1; ++i) {
        DoubleComplex yi =
            truncate_columns(dots(*res.datum.center.ring.space()), s - i, t - i);
        for (const auto& [k, n] : total_cohomology(yi)) out.expected_dims[k + 2 * i] += n;
    }
    for (auto it = out.expected_dims.begin(); it != out.expected_dims.end();)
        it = it->second == 0 ? out.expected_dims.erase(it) : std::next(it);
    // cross-check the window sum against the Hodge table upstairs
    std::map<int, int> direct;
    for (const auto& [d, n] : res.total.ring.space()->dims())
        if (s <= d.p && d.p <= t) direct[d.p + d.q] += n;
    out.ok = out.total_dims == out.expected_dims && out.total_dims == direct;
    return out;
}

}  // namespace gysin
