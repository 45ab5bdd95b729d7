#ifndef SATAKE_JSON_IO_HPP
#define SATAKE_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "satake/crystal.hpp"
#include "satake/cones.hpp"
#include "satake/mv_cycles.hpp"
#include "satake/paths.hpp"
#include "satake/roots.hpp"

namespace satake {

// nlohmann's default map keeps keys sorted, which is exactly the canonical
// key order the output contract asks for.
using Json = nlohmann::json;

// Rationals travel as strings "p" / "p/q"; integers as JSON numbers when
// they fit, strings otherwise.
Json rat_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json int_json(const Int& n);

Json qvec_json(const QVec& v);
QVec qvec_from_json(const Json& j);

// Weights render in the fundamental-weight basis ("w1+2*w2", "0").
Json weight_json(const Weight& mu);
Weight weight_from_json(const Json& j, int rank);

// Schema: [{"direction": ["p/q", ...], "duration": "p/q"}, ...]
Json path_json(const Path& p);
Path path_from_json(const Json& j);
Json paths_json(const std::vector<Path>& ps);
std::vector<Path> paths_from_json(const Json& j);

Json roots_json(const RootTables& tables);
Json crystal_json(const CrystalGraph& g);
Json label_json(const MVCycleLabel& label, const RootTables& tables);
Json chamber_chain_json(const ChamberChainResult& r);
Json line_word_json(const LineWordResult& r);

// One named pass/fail line of a verification run.
struct CheckReport {
    std::string name;
    bool pass = false;
    std::string detail;
};

// A whole verification run: named checks plus free-form data fields that
// are merged into the top level of the JSON rendering.
struct VerificationReport {
    std::string title;
    std::vector<CheckReport> checks;
    Json data = Json::object();

    bool all_pass() const;
    void add(const std::string& name, bool pass, const std::string& detail = "");
};

Json report_json(const VerificationReport& r);
std::string report_text(const VerificationReport& r);

}  // namespace satake

#endif
