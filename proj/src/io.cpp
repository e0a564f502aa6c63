#include "opuc/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace opuc {

using nlohmann::json;

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
    throw SchemaError("theory schema error at " + where + ": " + what);
}

}  // namespace

Theory theory_from_json(const json& doc) {
    if (!doc.is_object()) schema_fail("$", "document must be an object");
    if (!doc.contains("observables") || !doc["observables"].is_array())
        schema_fail("$.observables", "missing or not an array");
    if (!doc.contains("preparations") || !doc["preparations"].is_array())
        schema_fail("$.preparations", "missing or not an array");

    Theory t;
    for (std::size_t i = 0; i < doc["observables"].size(); ++i) {
        const auto& o = doc["observables"][i];
        const std::string where = "$.observables[" + std::to_string(i) + "]";
        if (!o.is_object() || !o.contains("name") || !o.contains("outcomes"))
            schema_fail(where, "need name and outcomes");
        if (!o["outcomes"].is_number_integer() || o["outcomes"].get<int>() < 1)
            schema_fail(where + ".outcomes", "must be a positive integer");
        ObservableFlags flags;
        if (o.contains("flags")) {
            const auto& f = o["flags"];
            flags.clean = f.value("clean", false);
            flags.sharp = f.value("sharp", false);
            flags.extremal = f.value("extremal", false);
        }
        if (t.observable_index(o["name"].get<std::string>()) >= 0)
            schema_fail(where + ".name", "duplicate observable name");
        t.add_observable(o["name"].get<std::string>(), o["outcomes"].get<int>(), flags);
    }
    for (std::size_t i = 0; i < doc["preparations"].size(); ++i) {
        const auto& p = doc["preparations"][i];
        const std::string where = "$.preparations[" + std::to_string(i) + "]";
        if (!p.is_object() || !p.contains("name") || !p.contains("stats"))
            schema_fail(where, "need name and stats");
        if (!p["stats"].is_object()) schema_fail(where + ".stats", "must map observable to probs");
        std::vector<Dist> per_obs(t.num_observables());
        std::vector<bool> seen(t.num_observables(), false);
        for (const auto& [obs_name, probs] : p["stats"].items()) {
            const int o = t.observable_index(obs_name);
            if (o < 0) schema_fail(where + ".stats." + obs_name, "unknown observable");
            if (!probs.is_array() ||
                static_cast<int>(probs.size()) != t.observables[o].outcomes)
                schema_fail(where + ".stats." + obs_name, "wrong probability vector length");
            Dist d;
            for (const auto& v : probs) {
                if (!v.is_number()) schema_fail(where + ".stats." + obs_name, "non-numeric entry");
                d.push_back(v.get<double>());
            }
            if (!is_distribution(d))
                schema_fail(where + ".stats." + obs_name,
                            "entries must be nonnegative and sum to 1");
            per_obs[o] = std::move(d);
            seen[o] = true;
        }
        for (int o = 0; o < t.num_observables(); ++o)
            if (!seen[o])
                schema_fail(where + ".stats", "missing observable " + t.observables[o].name);
        t.add_preparation(p["name"].get<std::string>(), std::move(per_obs));
    }
    if (doc.contains("decompositions")) {
        if (!doc["decompositions"].is_object())
            schema_fail("$.decompositions", "must be an object");
        for (const auto& [obs_name, decs] : doc["decompositions"].items()) {
            if (t.observable_index(obs_name) < 0)
                schema_fail("$.decompositions." + obs_name, "unknown observable");
            if (!decs.is_array()) schema_fail("$.decompositions." + obs_name, "must be an array");
            for (const auto& dec : decs) {
                Decomposition d;
                for (const auto& term : dec) {
                    if (!term.contains("weight") || !term.contains("observable"))
                        schema_fail("$.decompositions." + obs_name,
                                    "terms need weight and observable");
                    d.terms.emplace_back(term["weight"].get<double>(),
                                         term["observable"].get<std::string>());
                }
                t.decompositions[obs_name].push_back(std::move(d));
            }
        }
    }
    try {
        t.validate();
    } catch (const std::invalid_argument& e) {
        schema_fail("$", e.what());
    }
    return t;
}

Theory load_theory(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open theory file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("invalid JSON in " + path + ": " + e.what());
    }
    return theory_from_json(doc);
}

json theory_to_json(const Theory& t) {
    json doc;
    doc["observables"] = json::array();
    for (const auto& o : t.observables) {
        json j{{"name", o.name}, {"outcomes", o.outcomes}};
        if (o.flags.clean || o.flags.sharp || o.flags.extremal)
            j["flags"] = {{"clean", o.flags.clean},
                          {"sharp", o.flags.sharp},
                          {"extremal", o.flags.extremal}};
        doc["observables"].push_back(std::move(j));
    }
    doc["preparations"] = json::array();
    for (int p = 0; p < t.num_preparations(); ++p) {
        json stats = json::object();
        for (int o = 0; o < t.num_observables(); ++o)
            stats[t.observables[o].name] = t.stats[o][p];
        doc["preparations"].push_back({{"name", t.preparations[p]}, {"stats", stats}});
    }
    if (!t.decompositions.empty()) {
        json decs = json::object();
        for (const auto& [name, list] : t.decompositions) {
            json arr = json::array();
            for (const auto& dec : list) {
                json terms = json::array();
                for (const auto& [w, member] : dec.terms)
                    terms.push_back({{"weight", w}, {"observable", member}});
                arr.push_back(std::move(terms));
            }
            decs[name] = std::move(arr);
        }
        doc["decompositions"] = std::move(decs);
    }
    return doc;
}

json to_json(const MeasureReport& r) {
    json j{{"name", r.name}, {"value", r.value}};
    for (const auto& [k, v] : r.scalars) j["witnesses"][k] = v;
    for (const auto& [k, v] : r.notes) j["witnesses"][k] = v;
    if (r.permutation) j["witnesses"]["permutation"] = *r.permutation;
    return j;
}

json to_json(const RelationReport& r) {
    json j{{"relation", r.relation}, {"lhs", r.lhs},     {"rhs", r.rhs},
           {"slack", r.slack},       {"holds", r.holds}};
    for (const auto& [k, v] : r.witnesses) j["witnesses"][k] = v;
    return j;
}

json to_json(const RescalingPurReport& r) {
    return json{{"relation", "rescaling-pur"},
                {"n_z", r.nz},
                {"cr_analytic", r.cr_analytic},
                {"u_analytic", r.u_analytic},
                {"cr_geometric", r.cr_geometric},
                {"u_geometric", r.u_geometric},
                {"analytic_residual", r.analytic_residual},
                {"geometric_residual", r.geometric_residual},
                {"holds", r.holds}};
}

json to_json(const ChshResult& r) {
    const auto& a = r.assignment;
    return json{{"relation", "chsh"},
                {"value", r.value},
                {"t1", a.t1},
                {"t2", a.t2},
                {"r1", a.r1()},
                {"r2", a.r2()},
                {"r1p", a.rp1()},
                {"r2p", a.rp2()},
                {"s1", a.s1()},
                {"s2", a.s2()},
                {"s1p", a.sp1()},
                {"s2p", a.sp2()},
                {"no_signaling_residual", a.no_signaling_residual()}};
}

std::string csv_table(const std::vector<std::vector<std::pair<std::string, double>>>& rows) {
    std::vector<std::string> header;
    for (const auto& row : rows)
        for (const auto& [k, _] : row)
            if (std::find(header.begin(), header.end(), k) == header.end())
                header.push_back(k);
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << "\n";
    char buf[64];
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out << ",";
            for (const auto& [k, v] : row)
                if (k == header[i]) {
                    std::snprintf(buf, sizeof buf, "%.12g", v);
                    out << buf;
                    break;
                }
        }
        out << "\n";
    }
    return out.str();
}

std::string svg_statistics_set(const StatisticsSet& s, bool draw_inscribed) {
    if (!s.binary())
        throw std::invalid_argument("svg_statistics_set: binary sets only");
    const double size = 400.0, margin = 40.0;
    auto px = [&](double u) { return margin + u * (size - 2 * margin); };
    auto py = [&](double v) { return size - margin - v * (size - 2 * margin); };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
        << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    out << "  <rect x=\"" << px(0) << "\" y=\"" << py(1) << "\" width=\"" << px(1) - px(0)
        << "\" height=\"" << py(0) - py(1)
        << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    // set polygon (hull order)
    out << "  <polygon points=\"";
    for (const auto& v : s.geometry.vertices) out << px(v[0]) << "," << py(v[1]) << " ";
    out << "\" fill=\"#b0c4de\" fill-opacity=\"0.6\" stroke=\"#33517e\" stroke-width=\"1.5\"/>\n";
    if (draw_inscribed) {
        const RescalingReport r = rescaling_independence(s);
        if (r.value > 1e-9) {
            out << "  <rect x=\"" << px(r.shift[0]) << "\" y=\"" << py(r.shift[1] + r.value)
                << "\" width=\"" << px(r.value) - px(0) << "\" height=\"" << py(0) - py(r.value)
                << "\" fill=\"none\" stroke=\"#b2502d\" stroke-width=\"1.5\" stroke-dasharray=\"6,3\"/>\n";
        }
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const bool inside = corner_in_set(s, i, j);
            // deterministic pair (e_i, e_j) sits at (q_X(2), q_Y(2)) = (i, j)
            const double u = (i == 0) ? 0.0 : 1.0;
            const double v = (j == 0) ? 0.0 : 1.0;
            out << "  <circle cx=\"" << px(u) << "\" cy=\"" << py(v) << "\" r=\"5\" fill=\""
                << (inside ? "#2e7d32" : "#c62828") << "\"/>\n";
        }
    out << "</svg>\n";
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace opuc
