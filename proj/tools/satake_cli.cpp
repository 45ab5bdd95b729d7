// Command-line front end for the exact-arithmetic root-system, path-crystal,
// cycle-label, and verification machinery.
//
// Conventions:
//   * Weights are written in the fundamental-weight basis, either as text
//     ("w1+2*w2", "0") or as a JSON vector of rationals ("[1,2]").
//   * Colors and word letters are 0-based simple-root indices (0..rank-1),
//     matching every JSON report emitted by the tool.
//   * Exit codes: 0 success (or feasible / all checks passed), 1 a
//     verification or feasibility check failed, 2 malformed input.
//   * Output is written in full only after a computation succeeds; --json
//     selects canonical machine-readable output (sorted keys, rationals as
//     "p/q" strings).
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "satake/cones.hpp"
#include "satake/crystal.hpp"
#include "satake/dataset.hpp"
#include "satake/json_io.hpp"
#include "satake/mv_cycles.hpp"
#include "satake/paths.hpp"
#include "satake/roots.hpp"
#include "satake/worked_examples.hpp"

using namespace satake;

namespace {

int exit_for(const Error& e) {
    return e.code() == errc::verification_failed ? 1 : 2;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::bad_input, "cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(errc::parse_error, std::string("bad JSON in ") + path + ": " + e.what());
    }
    return j;
}

// A root system from either a built-in name (A1, A2, A3, D4) or a JSON file
// holding a Cartan matrix ([[2,-1],[-1,2]] or {"cartan": ..., "labels": ...}).
RootTables tables_from_arg(const std::string& arg) {
    bool looks_like_file =
        arg.find(".json") != std::string::npos || std::filesystem::exists(arg);
    if (!looks_like_file) return build_root_system(named_cartan(arg));

    Json j = read_json_file(arg);
    Json matrix = j.is_object() ? j.value("cartan", Json::array()) : j;
    if (!matrix.is_array() || matrix.empty())
        throw Error(errc::bad_input, "expected a Cartan matrix in " + arg);
    CartanDatum datum;
    datum.rank = static_cast<int>(matrix.size());
    for (const auto& row : matrix) {
        if (!row.is_array())
            throw Error(errc::bad_input, "Cartan matrix rows must be arrays");
        std::vector<long> r;
        for (const auto& entry : row) r.push_back(entry.get<long>());
        datum.cartan.push_back(std::move(r));
    }
    if (j.is_object() && j.contains("labels"))
        for (const auto& l : j["labels"]) datum.labels.push_back(l.get<std::string>());
    datum.validate();
    return build_root_system(datum);
}

Weight parse_weight_arg(const std::string& s, int rank) {
    std::string trimmed = s;
    size_t first = trimmed.find_first_not_of(" \t");
    if (first != std::string::npos && trimmed[first] == '[') {
        Json j;
        try {
            j = Json::parse(trimmed);
        } catch (const std::exception& e) {
            throw Error(errc::parse_error, std::string("bad weight vector: ") + e.what());
        }
        QVec v = qvec_from_json(j);
        if (static_cast<int>(v.size()) != rank)
            throw Error(errc::bad_input, "weight vector has wrong length for this type");
        return v;
    }
    return weight_from_string(s, rank);
}

// Comma- or space-separated 0-based letters, e.g. "0,1,0".
WeylWord parse_word_arg(const std::string& s, int rank) {
    WeylWord word;
    std::string cleaned = s;
    for (auto& ch : cleaned)
        if (ch == ',') ch = ' ';
    std::istringstream in(cleaned);
    long letter;
    while (in >> letter) {
        if (letter < 0 || letter >= rank)
            throw Error(errc::bad_input,
                        "word letter " + std::to_string(letter) + " outside 0.." +
                            std::to_string(rank - 1));
        word.push_back(static_cast<int>(letter));
    }
    if (!in.eof())
        throw Error(errc::parse_error, "cannot parse word: " + s);
    return word;
}

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string weight_text(const Weight& mu) { return weight_to_string(mu); }

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the process exit code.

int cmd_roots(const std::string& type, bool json_mode) {
    RootTables t = tables_from_arg(type);
    if (json_mode) {
        emit_json(roots_json(t));
        return 0;
    }
    std::ostringstream os;
    os << "rank " << t.rank() << ", " << t.num_positive() << " positive roots\n";
    for (int b = 0; b < t.num_positive(); ++b) {
        os << "  " << weight_text(t.positive_roots[b]) << "  (coroot functional:";
        for (long c : t.positive_coroots[b]) os << " " << c;
        os << ")\n";
    }
    os << "longest word:";
    for (int i : longest_word(t)) os << " " << i;
    os << "\n";
    std::cout << os.str();
    return 0;
}

int cmd_crystal_gen(const std::string& type, const std::string& weight, bool json_mode) {
    RootTables t = tables_from_arg(type);
    Weight lam = parse_weight_arg(weight, t.rank());
    auto g = b_lambda(t, lam, orbit_budget_default());
    if (json_mode) {
        emit_json(crystal_json(g));
        return 0;
    }
    std::ostringstream os;
    os << "crystal of highest weight " << weight_text(lam) << ": " << g.size()
       << " elements, " << g.num_components() << " component(s)\n";
    std::cout << os.str();
    return 0;
}

int cmd_crystal_tensor(const std::string& type, const std::vector<std::string>& weights,
                       bool want_decompose, bool want_invariants, bool json_mode) {
    RootTables t = tables_from_arg(type);
    std::vector<CrystalGraph> graphs;
    graphs.reserve(weights.size());
    std::vector<Weight> lams;
    for (const auto& w : weights) lams.push_back(parse_weight_arg(w, t.rank()));
    for (const auto& lam : lams) graphs.push_back(b_lambda(t, lam, orbit_budget_default()));
    std::vector<const CrystalGraph*> factors;
    for (const auto& g : graphs) factors.push_back(&g);
    auto prod = tensor_product(t, factors);

    Json out = crystal_json(prod);
    std::ostringstream os;
    os << "tensor product of " << weights.size() << " factor(s): " << prod.size()
       << " elements, " << prod.num_components() << " component(s)\n";
    if (want_decompose) {
        auto dec = decompose(prod);
        Json list = Json::array();
        for (const auto& [wt, mult] : dec) {
            list.push_back(Json{{"weight", weight_json(wt)}, {"multiplicity", mult}});
            os << "  " << weight_text(wt) << " x " << mult << "\n";
        }
        out["decompose"] = std::move(list);
    }
    if (want_invariants) {
        auto invs = invariant_elements(prod);
        out["invariants"] = invs;
        os << "  invariants:";
        for (int x : invs) os << " " << x;
        os << "\n";
    }
    if (json_mode)
        emit_json(out);
    else
        std::cout << os.str();
    return 0;
}

int cmd_path_apply(const std::string& op, int color, const std::string& file,
                   const std::string& type, bool json_mode) {
    Json j = read_json_file(file);
    Path p = path_from_json(j);
    int rank = p.num_segments() == 0 ? 0 : static_cast<int>(p.segments()[0].first.size());
    RootTables t = type.empty()
                       ? build_root_system(named_cartan("A" + std::to_string(std::max(1, rank))))
                       : tables_from_arg(type);
    if (op != "e" && op != "f")
        throw Error(errc::bad_input, "operator must be e or f, got: " + op);
    std::optional<Path> image = op == "e" ? e_op(p, color, t) : f_op(p, color, t);

    if (json_mode) {
        Json out;
        out["defined"] = image.has_value();
        out["result"] = image ? path_json(*image) : Json();
        emit_json(out);
        return 0;
    }
    if (image)
        std::cout << "endpoint " << weight_text(image->endpoint()) << ", "
                  << image->num_segments() << " segment(s)\n"
                  << path_json(*image).dump(2) << "\n";
    else
        std::cout << "undefined\n";
    return 0;
}

int cmd_mv_label(const std::string& type, const std::string& file, bool json_mode) {
    RootTables t = tables_from_arg(type);
    auto paths = paths_from_json(read_json_file(file));
    auto label = cycle_label(paths, t, orbit_budget_default());
    if (json_mode) {
        emit_json(label_json(label, t));
        return 0;
    }
    std::ostringstream os;
    os << "total weight " << weight_text(label.mu) << ", attracting dimension "
       << label.dim_attracting.get_str() << ", repelling dimension "
       << label.dim_repelling.get_str() << "\n"
       << "generator word: " << generator_word_to_string(label, t) << "\n";
    std::cout << os.str();
    return 0;
}

int cmd_rotate(const std::string& type, const std::vector<std::string>& args, bool json_mode) {
    if (args.size() < 2)
        throw Error(errc::bad_input, "rotate needs at least one weight and an element id");
    RootTables t = tables_from_arg(type);
    std::vector<Weight> lams;
    for (size_t k = 0; k + 1 < args.size(); ++k)
        lams.push_back(parse_weight_arg(args[k], t.rank()));
    int index;
    try {
        index = std::stoi(args.back());
    } catch (const std::exception&) {
        throw Error(errc::bad_input, "element id must be an integer, got: " + args.back());
    }
    auto rot = rotate_satake(t, lams, index, orbit_budget_default());
    if (json_mode) {
        Json out;
        Json rl = Json::array();
        for (const auto& lam : rot.rotated) rl.push_back(weight_json(lam));
        out["rotated"] = std::move(rl);
        out["index"] = rot.index;
        emit_json(out);
        return 0;
    }
    std::ostringstream os;
    os << "rotated factors:";
    for (const auto& lam : rot.rotated) os << " " << weight_text(lam);
    os << "\nelement id: " << rot.index << "\n";
    std::cout << os.str();
    return 0;
}

int cmd_conda_check(const std::string& type, const std::string& word_text, bool json_mode) {
    RootTables t = tables_from_arg(type);
    WeylWord word = parse_word_arg(word_text, t.rank());
    auto res = condition_A_check(t, word);
    if (json_mode)
        emit_json(chamber_chain_json(res));
    else
        std::cout << (res.feasible ? "feasible" : "infeasible") << "\n";
    return res.feasible ? 0 : 1;
}

int cmd_conda_from_line(const std::string& type, const std::string& xs, const std::string& ys,
                        bool json_mode) {
    RootTables t = tables_from_arg(type);
    QVec x = parse_weight_arg(xs, t.rank());
    QVec y = parse_weight_arg(ys, t.rank());
    auto res = chamber_word_from_line(t, x, y);
    if (json_mode) {
        emit_json(line_word_json(res));
        return 0;
    }
    std::ostringstream os;
    os << "word:";
    for (int i : res.word) os << " " << i;
    os << "\n";
    std::cout << os.str();
    return 0;
}

int run_report(const VerificationReport& rep, bool json_mode) {
    if (json_mode)
        emit_json(report_json(rep));
    else
        std::cout << report_text(rep);
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact root-system, path-crystal, and cycle-label toolkit"};
    app.require_subcommand(1);
    bool json_mode = false;

    auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", json_mode, "canonical machine-readable output");
    };

    // roots <type>
    std::string roots_type;
    auto* roots_cmd = app.add_subcommand("roots", "root-system tables for a type");
    roots_cmd->add_option("type", roots_type, "named type (A1, A2, A3, D4) or JSON file")
        ->required();
    add_json(roots_cmd);

    // crystal gen / crystal tensor
    auto* crystal_cmd = app.add_subcommand("crystal", "path-model crystal graphs");
    crystal_cmd->require_subcommand(1);
    std::string gen_type, gen_weight;
    auto* gen_cmd = crystal_cmd->add_subcommand("gen", "highest-weight crystal");
    gen_cmd->add_option("type", gen_type)->required();
    gen_cmd->add_option("weight", gen_weight, "highest weight, e.g. \"w1+2*w2\"")->required();
    add_json(gen_cmd);

    std::string tensor_type;
    std::vector<std::string> tensor_weights;
    bool tensor_decompose = false, tensor_invariants = false;
    auto* tensor_cmd = crystal_cmd->add_subcommand("tensor", "tensor product of crystals");
    tensor_cmd->add_option("type", tensor_type)->required();
    tensor_cmd->add_option("weights", tensor_weights, "one or more highest weights")
        ->required()
        ->expected(-1);
    tensor_cmd->add_flag("--decompose", tensor_decompose, "list component multiplicities");
    tensor_cmd->add_flag("--invariants", tensor_invariants, "list invariant element ids");
    add_json(tensor_cmd);

    // path apply <op> <color> <path.json>
    auto* path_cmd = app.add_subcommand("path", "piecewise-linear path operations");
    path_cmd->require_subcommand(1);
    std::string apply_op, apply_file, apply_type;
    int apply_color = 0;
    auto* apply_cmd = path_cmd->add_subcommand("apply", "apply a root operator");
    apply_cmd->add_option("op", apply_op, "e or f")->required();
    apply_cmd->add_option("color", apply_color, "0-based simple-root index")->required();
    apply_cmd->add_option("file", apply_file, "path JSON file")->required();
    apply_cmd->add_option("--type", apply_type,
                          "root-system type (default: A<dim> from the path)");
    add_json(apply_cmd);

    // mv label <type> <paths.json>
    auto* mv_cmd = app.add_subcommand("mv", "cycle labels from path tuples");
    mv_cmd->require_subcommand(1);
    std::string label_type, label_file;
    auto* label_cmd = mv_cmd->add_subcommand("label", "label of a path tuple");
    label_cmd->add_option("type", label_type)->required();
    label_cmd->add_option("file", label_file, "JSON array of paths")->required();
    add_json(label_cmd);

    // satake rotate <type> <weights...> <index>
    auto* satake_cmd = app.add_subcommand("satake", "invariant-space operations");
    satake_cmd->require_subcommand(1);
    std::string rotate_type;
    std::vector<std::string> rotate_args;
    auto* rotate_cmd = satake_cmd->add_subcommand("rotate", "cyclic rotation of an invariant");
    rotate_cmd->add_option("type", rotate_type)->required();
    rotate_cmd->add_option("args", rotate_args, "weights... then the invariant element id")
        ->required()
        ->expected(-1);
    add_json(rotate_cmd);

    // conda check / conda from-line
    auto* conda_cmd = app.add_subcommand("conda", "cone condition on reduced words");
    conda_cmd->require_subcommand(1);
    std::string check_type, check_word;
    auto* check_cmd = conda_cmd->add_subcommand("check", "feasibility of a reduced word");
    check_cmd->add_option("type", check_type)->required();
    check_cmd->add_option("word", check_word, "0-based letters, e.g. \"0,1,0\"")->required();
    add_json(check_cmd);

    std::string line_type, line_x, line_y;
    auto* line_cmd = conda_cmd->add_subcommand("from-line", "chamber word of a generic line");
    line_cmd->add_option("type", line_type)->required();
    line_cmd->add_option("x", line_x, "strictly dominant start point")->required();
    line_cmd->add_option("y", line_y, "strictly dominant end point")->required();
    add_json(line_cmd);

    // verify sl3 / verify d4
    auto* verify_cmd = app.add_subcommand("verify", "worked-example verifications");
    verify_cmd->require_subcommand(1);
    auto* sl3_cmd = verify_cmd->add_subcommand("sl3", "rank-2 intersection computation");
    add_json(sl3_cmd);
    auto* d4_cmd = verify_cmd->add_subcommand("d4", "rank-4 lower-bound certificate");
    add_json(d4_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (roots_cmd->parsed()) return cmd_roots(roots_type, json_mode);
        if (gen_cmd->parsed()) return cmd_crystal_gen(gen_type, gen_weight, json_mode);
        if (tensor_cmd->parsed())
            return cmd_crystal_tensor(tensor_type, tensor_weights, tensor_decompose,
                                      tensor_invariants, json_mode);
        if (apply_cmd->parsed())
            return cmd_path_apply(apply_op, apply_color, apply_file, apply_type, json_mode);
        if (label_cmd->parsed()) return cmd_mv_label(label_type, label_file, json_mode);
        if (rotate_cmd->parsed()) return cmd_rotate(rotate_type, rotate_args, json_mode);
        if (check_cmd->parsed()) return cmd_conda_check(check_type, check_word, json_mode);
        if (line_cmd->parsed())
            return cmd_conda_from_line(line_type, line_x, line_y, json_mode);
        if (sl3_cmd->parsed()) return run_report(verify_sl3(), json_mode);
        if (d4_cmd->parsed()) return run_report(verify_d4(), json_mode);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const Error& e) {
        if (json_mode) {
            Json err{{"error", e.code()}, {"message", e.what()}};
            std::cerr << err.dump(2) << "\n";
        } else {
            std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        }
        return exit_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error [internal]: " << e.what() << "\n";
        return 2;
    }
}
