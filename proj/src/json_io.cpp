#include "satake/json_io.hpp"

#include <sstream>

#include "satake/error.hpp"

namespace satake {

Json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw Error(errc::parse_error, "expected a rational as \"p/q\" string or integer");
}

Json int_json(const Int& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

Json qvec_json(const QVec& v) {
    Json a = Json::array();
    for (const Rat& r : v) a.push_back(rat_json(r));
    return a;
}

QVec qvec_from_json(const Json& j) {
    if (!j.is_array()) throw Error(errc::parse_error, "expected an array of rationals");
    QVec v;
    v.reserve(j.size());
    for (const Json& e : j) v.push_back(rat_from_json(e));
    return v;
}

Json weight_json(const Weight& mu) { return weight_to_string(mu); }

Weight weight_from_json(const Json& j, int rank) {
    if (j.is_string()) return weight_from_string(j.get<std::string>(), rank);
    Weight mu = qvec_from_json(j);
    if (static_cast<int>(mu.size()) != rank)
        throw Error(errc::bad_input, "weight has wrong rank");
    return mu;
}

Json path_json(const Path& p) {
    Json a = Json::array();
    for (const auto& [dir, dur] : p.segments()) {
        Json seg;
        seg["direction"] = qvec_json(dir);
        seg["duration"] = rat_json(dur);
        a.push_back(seg);
    }
    return a;
}

Path path_from_json(const Json& j) {
    if (!j.is_array()) throw Error(errc::parse_error, "expected an array of path segments");
    std::vector<std::pair<QVec, Rat>> segs;
    for (const Json& e : j) {
        if (!e.is_object() || !e.contains("direction") || !e.contains("duration"))
            throw Error(errc::parse_error,
                        "path segment needs \"direction\" and \"duration\"");
        segs.emplace_back(qvec_from_json(e["direction"]), rat_from_json(e["duration"]));
    }
    return Path::from_segments(segs);
}

Json paths_json(const std::vector<Path>& ps) {
    Json a = Json::array();
    for (const Path& p : ps) a.push_back(path_json(p));
    return a;
}

std::vector<Path> paths_from_json(const Json& j) {
    if (!j.is_array()) throw Error(errc::parse_error, "expected an array of paths");
    std::vector<Path> ps;
    ps.reserve(j.size());
    for (const Json& e : j) ps.push_back(path_from_json(e));
    return ps;
}

Json roots_json(const RootTables& tables) {
    Json out;
    out["rank"] = tables.rank();
    Json cartan = Json::array();
    for (const auto& row : tables.datum.cartan) cartan.push_back(row);
    out["cartan"] = cartan;
    Json roots = Json::array(), coroots = Json::array();
    for (int k = 0; k < tables.num_positive(); ++k) {
        roots.push_back(weight_json(tables.positive_roots[static_cast<size_t>(k)]));
        coroots.push_back(affine_coroot_to_string(AffineCoroot{k, 0}, tables));
    }
    out["positive_roots"] = roots;
    out["positive_coroots"] = coroots;
    out["num_positive"] = tables.num_positive();
    return out;
}

Json crystal_json(const CrystalGraph& g) {
    Json out;
    out["rank"] = g.rank();
    out["size"] = g.size();
    Json nodes = Json::array();
    for (int x = 0; x < g.size(); ++x) {
        Json n;
        n["weight"] = weight_json(g.wt(x));
        n["component"] = g.node(x).component;
        Json eps = Json::array(), phi = Json::array();
        for (int i = 0; i < g.rank(); ++i) {
            eps.push_back(g.eps(x, i));
            phi.push_back(g.phi(x, i));
        }
        n["eps"] = eps;
        n["phi"] = phi;
        if (g.node(x).path) n["path"] = path_json(*g.node(x).path);
        if (!g.node(x).tuple.empty()) n["tuple"] = g.node(x).tuple;
        nodes.push_back(n);
    }
    out["nodes"] = nodes;
    Json edges = Json::array();
    for (int i = 0; i < g.rank(); ++i) {
        Json color = Json::array();
        for (int x = 0; x < g.size(); ++x)
            if (g.f(x, i) >= 0) color.push_back(Json::array({x, g.f(x, i)}));
        edges.push_back(color);
    }
    out["f_edges"] = edges;
    Json comps = Json::array();
    for (int c = 0; c < g.num_components(); ++c) {
        Json comp;
        comp["source"] = g.component(c).source;
        comp["highest_weight"] = weight_json(g.component(c).highest);
        comp["size"] = static_cast<long>(g.component(c).members.size());
        comps.push_back(comp);
    }
    out["components"] = comps;
    return out;
}

namespace {

Json crossing_json(const CrossingDatum& c, const RootTables& tables) {
    Json out;
    out["time"] = rat_json(c.time);
    Json cs = Json::array();
    for (const AffineCoroot& a : c.coroots) cs.push_back(affine_coroot_to_string(a, tables));
    out["coroots"] = cs;
    return out;
}

}  // namespace

Json label_json(const MVCycleLabel& label, const RootTables& tables) {
    Json out;
    out["paths"] = paths_json(label.paths);
    Json nu = Json::array(), lam = Json::array();
    for (const Weight& w : label.nu) nu.push_back(weight_json(w));
    for (const Weight& w : label.lambda) lam.push_back(weight_json(w));
    out["nu"] = nu;
    out["lambda"] = lam;
    out["mu"] = weight_json(label.mu);
    out["dim_attracting"] = int_json(label.dim_attracting);
    out["dim_repelling"] = int_json(label.dim_repelling);
    Json crs = Json::array();
    for (const auto& per_path : label.crossings) {
        Json one = Json::array();
        for (const CrossingDatum& c : per_path) one.push_back(crossing_json(c, tables));
        crs.push_back(one);
    }
    out["crossings"] = crs;
    Json word = Json::array();
    for (const GeneratorToken& t : label.generator_word) {
        Json tok;
        if (t.translation) {
            tok["kind"] = "z";
            tok["weight"] = weight_json(t.weight);
        } else {
            tok["kind"] = "x";
            tok["coroot"] = affine_coroot_to_string(t.coroot, tables);
        }
        word.push_back(tok);
    }
    out["generator_word"] = word;
    out["generator_word_text"] = generator_word_to_string(label, tables);
    out["parameters"] = generator_parameter_count(label);
    return out;
}

Json chamber_chain_json(const ChamberChainResult& r) {
    Json out;
    out["feasible"] = r.feasible;
    out["slack"] = rat_json(r.slack);
    Json ws = Json::array();
    for (const QVec& w : r.witnesses) ws.push_back(qvec_json(w));
    out["witnesses"] = ws;
    return out;
}

Json line_word_json(const LineWordResult& r) {
    Json out;
    out["word"] = r.word;
    Json ws = Json::array();
    for (const QVec& w : r.witnesses) ws.push_back(qvec_json(w));
    out["witnesses"] = ws;
    return out;
}

bool VerificationReport::all_pass() const {
    for (const CheckReport& c : checks)
        if (!c.pass) return false;
    return true;
}

void VerificationReport::add(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back(CheckReport{name, pass, detail});
}

Json report_json(const VerificationReport& r) {
    Json out = r.data;  // free-form fields first; fixed keys below win on clash
    Json checks = Json::array();
    for (const CheckReport& c : r.checks) {
        Json one;
        one["name"] = c.name;
        one["pass"] = c.pass;
        if (!c.detail.empty()) one["detail"] = c.detail;
        checks.push_back(one);
    }
    out["title"] = r.title;
    out["checks"] = checks;
    out["pass"] = r.all_pass();
    return out;
}

std::string report_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "== " << r.title << " ==\n";
    for (const CheckReport& c : r.checks) {
        os << (c.pass ? "  [PASS] " : "  [FAIL] ") << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    for (const auto& [key, value] : r.data.items())
        os << "  " << key << " = " << value.dump() << "\n";
    os << (r.all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return os.str();
}

}  // namespace satake
