#include "gysin/json_io.hpp"

namespace gysin {

std::string degree_key(GradingMode mode, Degree d) { return mode.show(d); }

Json element_to_json(const Element& e) {
    Json out = Json::object();
    if (!e.space()) return out;
    for (const auto& [i, v] : e.coords()) out[e.space()->elem(i).label] = v.str();
    return out;
}

Element element_from_json(const Json& j, const VSpacePtr& space) {
    Element e(space);
    if (j.is_null()) return e;
    if (!j.is_object()) throw Error("element literal must be an object of label -> coefficient");
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto idx = space->find(it.key());
        if (!idx) throw Error("unknown basis label '" + it.key() + "'");
        e.add(*idx, Rational(it.value().get<std::string>()));
    }
    return e;
}

Json dims_to_json(GradingMode mode, const std::map<Degree, int>& dims) {
    Json out = Json::object();
    for (const auto& [d, n] : dims) out[degree_key(mode, d)] = std::to_string(n);
    return out;
}

Json dims_total_to_json(const std::map<int, int>& dims) {
    Json out = Json::object();
    for (const auto& [k, n] : dims) out[std::to_string(k)] = std::to_string(n);
    return out;
}

Json map_to_json(const LinearMap& f) {
    Json out;
    Degree s = f.shift();
    if (f.source()->mode().kind == GradingKind::derham)
        out["shift"] = std::to_string(s.p);
    else
        out["shift"] = Json::array({std::to_string(s.p), std::to_string(s.q)});
    Json entries = Json::array();
    for (int j = 0; j < f.source()->dim(); ++j) {
        Element img = f.apply_basis(j);
        for (const auto& [i, v] : img.coords())
            entries.push_back(
                Json::array({f.source()->elem(j).label, f.target()->elem(i).label, v.str()}));
    }
    out["entries"] = std::move(entries);
    return out;
}

LinearMap map_from_entries(const Json& entries, const VSpacePtr& src, const VSpacePtr& dst,
                           Degree shift) {
    LinearMap f(src, dst, shift);
    if (entries.is_null()) return f;
    if (!entries.is_array()) throw Error("map entries must be an array of [src, dst, coeff]");
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 3) throw Error("map entry must be [src, dst, coeff]");
        auto sj = src->find(e[0].get<std::string>());
        if (!sj) throw Error("unknown source label '" + e[0].get<std::string>() + "'");
        auto di = dst->find(e[1].get<std::string>());
        if (!di) throw Error("unknown target label '" + e[1].get<std::string>() + "'");
        f.set(*di, *sj, Rational(e[2].get<std::string>()));
    }
    return f;
}

Json dcomplex_to_json(const DoubleComplex& k) {
    Json out;
    Json comps = Json::array();
    for (const auto& [d, n] : k.components)
        comps.push_back(Json{{"p", d.p}, {"q", d.q}, {"dim", n}});
    out["components"] = std::move(comps);
    auto blocks = [&](const std::map<Degree, SparseMatrix>& src) {
        Json arr = Json::array();
        for (const auto& [d, m] : src) {
            Json rows = Json::array();
            for (int i = 0; i < m.rows(); ++i) {
                Json row = Json::array();
                for (int j = 0; j < m.cols(); ++j) row.push_back(m.get(i, j).str());
                rows.push_back(std::move(row));
            }
            arr.push_back(Json{{"p", d.p}, {"q", d.q}, {"matrix", std::move(rows)}});
        }
        return arr;
    };
    out["d1"] = blocks(k.d1);
    out["d2"] = blocks(k.d2);
    return out;
}

DoubleComplex dcomplex_from_json(const Json& j) {
    DoubleComplex k;
    if (!j.contains("components") || !j["components"].is_array())
        throw Error("double complex needs a 'components' array");
    for (const auto& c : j["components"]) {
        int dim = c.at("dim").get<int>();
        if (dim < 0) throw Error("negative component dimension");
        if (dim > 0) k.components[{c.at("p").get<int>(), c.at("q").get<int>()}] = dim;
    }
    auto read_blocks = [&](const char* key, bool is_d1) {
        if (!j.contains(key)) return;
        for (const auto& b : j[key]) {
            Degree d{b.at("p").get<int>(), b.at("q").get<int>()};
            const Json& rows = b.at("matrix");
            Degree td = is_d1 ? Degree{d.p + 1, d.q} : Degree{d.p, d.q + 1};
            SparseMatrix m(k.dim(td), k.dim(d));
            if (static_cast<int>(rows.size()) != m.rows())
                throw Error(std::string(key) + " block has wrong row count");
            for (int i = 0; i < m.rows(); ++i) {
                if (static_cast<int>(rows[i].size()) != m.cols())
                    throw Error(std::string(key) + " block has wrong column count");
                for (int c = 0; c < m.cols(); ++c)
                    m.set(i, c, Rational(rows[i][c].get<std::string>()));
            }
            if (is_d1)
                k.set_d1(d, std::move(m));
            else
                k.set_d2(d, std::move(m));
        }
    };
    read_blocks("d1", true);
    read_blocks("d2", false);
    CheckReport rep = k.validate();
    if (!rep.ok) throw Error("invalid double complex: " + rep.summary());
    return k;
}

Json report_from_check(const CheckReport& rep) {
    Json out;
    out["pass"] = rep.ok;
    out["violations"] = rep.violations;
    return out;
}

}  // namespace gysin
