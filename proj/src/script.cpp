#include "gysin/script.hpp"

#include <chrono>
#include <fstream>

#include "gysin/acceptance.hpp"
#include "gysin/embeddings.hpp"

namespace gysin {

namespace {

struct Entry {
    std::optional<SpaceModel> model;
    std::optional<Bundle> bundle;
    std::optional<BlowupResult> blowup;
    std::optional<DoubleComplex> dc;

    const SpaceModel& as_model(const std::string& name) const {
        if (model) return *model;
        if (bundle) return bundle->total;
        if (blowup) return blowup->total;
        throw Error("'" + name + "' is not a space");
    }
};

using Registry = std::map<std::string, Entry>;

GradingMode mode_from(const Json& j) {
    std::string m = j.value("mode", "dolbeault");
    if (m == "dolbeault") return dolbeault();
    if (m == "derham") return derham();
    throw Error("unknown grading mode '" + m + "'");
}

const Entry& lookup(const Registry& reg, const std::string& name) {
    auto it = reg.find(name);
    if (it == reg.end()) throw Error("undefined reference '" + name + "'");
    return it->second;
}

std::map<std::string, FlavorBlocks> blocks_from_json(const Json& spec, const SpaceModel& ambient,
                                                     const SpaceModel& center, int r) {
    const Json& res = spec.at("restriction");
    const Json& gys = spec.at("gysin");
    if (!res.is_object() || !gys.is_object())
        throw Error("restriction/gysin must map flavor names to entry lists");
    std::map<std::string, FlavorBlocks> out;
    for (auto it = res.begin(); it != res.end(); ++it) {
        const std::string& fname = it.key();
        if (!gys.contains(fname)) throw Error("flavor '" + fname + "' lacks a gysin block");
        const Module& xf = ambient.flavor(fname);
        const Module& yf = center.flavor(fname);
        FlavorBlocks b{
            map_from_entries(it.value(), xf.space(), yf.space(), Degree{0, 0}),
            map_from_entries(gys.at(fname), yf.space(), xf.space(),
                             r * ambient.mode.blowup_shift())};
        out[fname] = std::move(b);
    }
    return out;
}

void define_space(Registry& reg, const Json& spec) {
    if (!spec.contains("name")) throw Error("space definition without a name");
    std::string name = spec.at("name").get<std::string>();
    if (reg.count(name)) throw Error("duplicate name '" + name + "'");
    std::string op = spec.at("op").get<std::string>();
    Entry e;
    if (op == "point") {
        e.model = point(mode_from(spec));
    } else if (op == "projective_space") {
        e.model = projective_space(spec.at("n").get<int>(), mode_from(spec));
    } else if (op == "affine_space") {
        e.model = affine_space(spec.at("n").get<int>(), mode_from(spec));
    } else if (op == "curve") {
        e.model = curve(spec.at("genus").get<int>());
    } else if (op == "product") {
        e.model = product(lookup(reg, spec.at("left").get<std::string>()).as_model("left"),
                          lookup(reg, spec.at("right").get<std::string>()).as_model("right"));
    } else if (op == "projective_bundle") {
        const SpaceModel& base =
            lookup(reg, spec.at("base").get<std::string>()).as_model(spec.at("base"));
        int r = spec.at("r").get<int>();
        std::vector<Element> chern;
        const Json& cj = spec.value("chern", Json::array());
        for (const auto& c : cj) chern.push_back(element_from_json(c, base.ring.space()));
        while (static_cast<int>(chern.size()) < r) chern.push_back(Element(base.ring.space()));
        e.bundle = projective_bundle(base, chern, r);
    } else if (op == "blow_up_point") {
        const SpaceModel& ambient =
            lookup(reg, spec.at("ambient").get<std::string>()).as_model(spec.at("ambient"));
        e.blowup = blow_up(point_center(ambient));
    } else if (op == "blow_up") {
        const SpaceModel& ambient =
            lookup(reg, spec.at("ambient").get<std::string>()).as_model(spec.at("ambient"));
        const SpaceModel& center =
            lookup(reg, spec.at("center").get<std::string>()).as_model(spec.at("center"));
        BlowupDatum d;
        d.ambient = ambient;
        d.center = center;
        d.r = spec.at("r").get<int>();
        const Json& cj = spec.value("normal_chern", Json::array());
        for (const auto& c : cj) d.normal_chern.push_back(element_from_json(c, center.ring.space()));
        while (static_cast<int>(d.normal_chern.size()) < d.r)
            d.normal_chern.push_back(Element(center.ring.space()));
        d.blocks = blocks_from_json(spec, ambient, center, d.r);
        e.blowup = blow_up(d);
    } else if (op == "double_complex") {
        e.dc = dcomplex_from_json(spec);
    } else {
        throw Error("unknown constructor op '" + op + "'");
    }
    reg.emplace(std::move(name), std::move(e));
}

Json diamond_json(const SpaceModel& m) {
    Json out;
    out["dims"] = dims_to_json(m.mode, m.ring.space()->dims());
    if (m.mode.kind == GradingKind::dolbeault) {
        int n = 0;
        for (const auto& [d, cnt] : m.ring.space()->dims()) n = std::max({n, d.p, d.q});
        Json rows = Json::array();
        for (int k = 0; k <= 2 * n; ++k) {
            Json row = Json::array();
            for (int p = std::min(k, n); p >= std::max(0, k - n); --p)
                row.push_back(std::to_string(m.ring.space()->dim({p, k - p})));
            rows.push_back(std::move(row));
        }
        out["diamond"] = std::move(rows);
    } else {
        out["betti"] = dims_total_to_json(m.ring.space()->dims_total());
    }
    return out;
}

Json ring_json(const SpaceModel& m) {
    Json out;
    const auto sp = m.ring.space();
    Json basis = Json::array();
    for (int i = 0; i < sp->dim(); ++i)
        basis.push_back(Json::array({sp->elem(i).label, degree_key(m.mode, sp->elem(i).deg)}));
    out["basis"] = std::move(basis);
    Json prods = Json::array();
    for (int i = 0; i < sp->dim(); ++i)
        for (int j = 0; j < sp->dim(); ++j) {
            Element p = m.ring.cup_basis(i, j);
            if (p.is_zero()) continue;
            prods.push_back(
                Json::array({sp->elem(i).label, sp->elem(j).label, element_to_json(p)}));
        }
    out["products"] = std::move(prods);
    return out;
}

Json flavor_dims_json(const SpaceModel& m) {
    Json out = Json::object();
    for (const auto& fname : m.flavor_names())
        out[fname] = dims_to_json(m.mode, m.flavor(fname).space()->dims());
    return out;
}

// pass==nullopt means the query is informational
Json run_query(const Registry& reg, const Json& q, std::optional<bool>& pass) {
    std::string kind = q.at("query").get<std::string>();
    Json out;
    out["query"] = kind;
    if (kind == "poly-check") {
        int max_r = q.value("max_r", 8);
        bool ok = true;
        out["result"] = poly_check_report(max_r, ok);
        pass = ok;
        return out;
    }
    if (kind == "bc-aeppli") {
        std::string name = q.at("complex").get<std::string>();
        const Entry& e = lookup(reg, name);
        if (!e.dc) throw Error("'" + name + "' is not a double complex");
        out["target"] = name;
        out["result"] = bc_aeppli_report(*e.dc);
        return out;
    }
    std::string name = q.at("space").get<std::string>();
    out["target"] = name;
    const Entry& e = lookup(reg, name);
    if (kind == "diamond") {
        out["result"] = diamond_json(e.as_model(name));
    } else if (kind == "betti") {
        const SpaceModel& m = e.as_model(name);
        Json r;
        r["betti"] = dims_total_to_json(m.ring.space()->dims_total());
        r["flavors"] = flavor_dims_json(m);
        out["result"] = std::move(r);
    } else if (kind == "ring") {
        out["result"] = ring_json(e.as_model(name));
    } else if (kind == "verify") {
        CheckReport rep;
        if (e.blowup) {
            rep = verify_blowup(*e.blowup);
        } else if (e.bundle) {
            rep = e.bundle->total.check_all_axioms();
            for (const auto& fname : e.bundle->total.flavor_names()) {
                // the base is not retained; the inverse identities are
                // checked through the stored maps
                if (!compose(e.bundle->maps.push.at(fname), e.bundle->maps.pull.at(fname))
                         .is_identity())
                    rep.fail("[" + fname + "] pi_* pi^* != id");
            }
        } else if (e.dc) {
            rep = e.dc->validate();
        } else {
            rep = e.as_model(name).check_all_axioms();
        }
        out["result"] = report_from_check(rep);
        pass = rep.ok;
    } else if (kind == "truncated") {
        if (!e.blowup) throw Error("'" + name + "' is not a blow-up");
        bool ok = true;
        Json windows = Json::array();
        auto one = [&](int s, int t) {
            TruncatedCheck tc = truncated_hypercohomology_dims(*e.blowup, s, t);
            ok = ok && tc.ok;
            Json w;
            w["s"] = std::to_string(s);
            w["t"] = std::to_string(t);
            w["dims"] = dims_total_to_json(tc.total_dims);
            w["pass"] = tc.ok;
            windows.push_back(std::move(w));
        };
        if (q.contains("s") && q.contains("t")) {
            one(q.at("s").get<int>(), q.at("t").get<int>());
        } else {
            int dim = complex_dimension(e.blowup->datum.ambient);
            for (int s = 0; s <= dim; ++s)
                for (int t = s; t <= dim; ++t) one(s, t);
        }
        out["result"] = Json{{"windows", std::move(windows)}};
        pass = ok;
    } else {
        throw Error("unknown query '" + kind + "'");
    }
    return out;
}

}  // namespace

Json poly_check_report(int max_r, bool& all_pass) {
    Json rows = Json::array();
    for (int r = 1; r <= max_r; ++r) {
        GysinFamily fam = compute_family(r);
        CheckReport kron = kronecker_check(fam);
        CheckReport wdeg = weighted_degree_check(fam);
        all_pass = all_pass && kron.ok && wdeg.ok;
        Json row;
        row["r"] = std::to_string(r);
        row["kronecker"] = kron.ok;
        row["weighted_degree"] = wdeg.ok;
        row["P_0"] = fam.polys[0].str();
        rows.push_back(std::move(row));
    }
    return Json{{"rows", std::move(rows)}};
}

Json bc_aeppli_report(const DoubleComplex& k) {
    GradingMode mode = dolbeault();
    Json out;
    out["row"] = dims_to_json(mode, row_cohomology(k));
    out["column"] = dims_to_json(mode, column_cohomology(k));
    out["bott_chern"] = dims_to_json(mode, bott_chern(k));
    out["aeppli"] = dims_to_json(mode, aeppli(k));
    out["total"] = dims_total_to_json(total_cohomology(k));
    return out;
}

ScriptOutcome run_script(const Json& script) {
    ScriptOutcome out;
    out.report["version"] = "1";
    try {
        if (!script.is_object()) throw Error("script must be a JSON object");
        Registry reg;
        for (const auto& spec : script.value("spaces", Json::array())) define_space(reg, spec);
        Json queries = Json::array();
        int pass = 0, fail = 0;
        for (const auto& q : script.value("queries", Json::array())) {
            auto t0 = std::chrono::steady_clock::now();
            std::optional<bool> ok;
            Json res = run_query(reg, q, ok);
            auto t1 = std::chrono::steady_clock::now();
            res["elapsed_ms"] = std::to_string(
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
            if (ok) {
                res["pass"] = *ok;
                (*ok ? pass : fail)++;
            }
            queries.push_back(std::move(res));
        }
        out.report["queries"] = std::move(queries);
        out.report["pass_count"] = std::to_string(pass);
        out.report["fail_count"] = std::to_string(fail);
        out.report["all_pass"] = fail == 0;
        out.exit_code = fail == 0 ? 0 : 1;
    } catch (const std::exception& ex) {
        out.report["error"] = ex.what();
        out.exit_code = 2;
    }
    return out;
}

ScriptOutcome run_script_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        ScriptOutcome out;
        out.report["error"] = "cannot open '" + path + "'";
        out.exit_code = 2;
        return out;
    }
    Json script = Json::parse(in, nullptr, false);
    if (script.is_discarded()) {
        ScriptOutcome out;
        out.report["error"] = "JSON parse error in '" + path + "'";
        out.exit_code = 2;
        return out;
    }
    return run_script(script);
}

ScriptOutcome selftest(std::ostream* live) {
    ScriptOutcome out;
    out.report["version"] = "1";
    Json checks = Json::array();
    bool all = true;
    for (const auto& o : run_acceptance(live)) {
        all = all && o.pass;
        Json c;
        c["name"] = o.name;
        c["summary"] = o.summary;
        c["pass"] = o.pass;
        c["elapsed_ms"] = std::to_string(o.ms);
        c["violations"] = o.violations;
        checks.push_back(std::move(c));
    }
    out.report["checks"] = std::move(checks);
    out.report["all_pass"] = all;
    out.exit_code = all ? 0 : 1;
    return out;
}

}  // namespace gysin
