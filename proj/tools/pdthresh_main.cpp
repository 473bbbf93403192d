// pdthresh: decide, certify, and construct witnesses for positive
// definiteness under hard thresholding of symmetric matrices.

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdthresh/certificates.hpp"
#include "pdthresh/counterexamples.hpp"
#include "pdthresh/decomposable.hpp"
#include "pdthresh/errors.hpp"
#include "pdthresh/graph.hpp"
#include "pdthresh/io.hpp"
#include "pdthresh/matrix.hpp"
#include "pdthresh/reporting.hpp"
#include "pdthresh/thresholding.hpp"

namespace {

using namespace pdthresh;
using namespace pdthresh::io;
using nlohmann::json;

constexpr int kExitPd = 0;
constexpr int kExitNotPd = 2;
constexpr int kExitIndeterminate = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

int exit_code_for(const Error& e) {
    switch (e.code) {
        case Error::Code::Parse:
        case Error::Code::Io:
            return kExitUsage;
        case Error::Code::SingularBlock:
        case Error::Code::NoBrokenCycle:
        case Error::Code::NotPd:
            return kExitInternal;
        default:
            return kExitData;  // input rejected by a documented precondition
    }
}

double default_tolerance() {
    if (const char* env = std::getenv("PDTHRESH_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v >= 0.0) return v;
        std::fprintf(stderr, "warning: ignoring unparseable PDTHRESH_TOL=%s\n", env);
    }
    return kDefaultPdTol;
}

const char* status_word(const PdReport& rep) {
    if (rep.is_pd) return "PD";
    return rep.indeterminate ? "INDETERMINATE" : "NOT PD";
}

int verdict_exit(const PdReport& rep) {
    if (rep.is_pd) return kExitPd;
    return rep.indeterminate ? kExitIndeterminate : kExitNotPd;
}

int overall_exit(OverallVerdict v) {
    switch (v) {
        case OverallVerdict::PD: return kExitPd;
        case OverallVerdict::NotPD: return kExitNotPd;
        default: return kExitIndeterminate;
    }
}

std::string one_based_list(const std::vector<int>& vs, const char* sep = ",") {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(vs[i] + 1);
    }
    return s;
}

// ---------------------------------------------------------------- check ----

struct CheckOptions {
    std::string matrix_path;
    std::string graph_path;
    double tol = -1.0;  // resolved later against env/default
    bool exact = false;
    bool as_json = false;
};

int cmd_check(const CheckOptions& opt) {
    const double tol = opt.tol >= 0.0 ? opt.tol : default_tolerance();
    const PdStrategy strategy = opt.exact ? PdStrategy::Exact : PdStrategy::Auto;

    SymmetricMatrix a = read_matrix_file(opt.matrix_path);
    UndirectedGraph g = read_graph_file(opt.graph_path);
    SymmetricMatrix ag = threshold_by_graph(a, g);

    PdReport rep_a = is_positive_definite(a, tol, strategy);
    PdReport rep_ag = is_positive_definite(ag, tol, strategy);
    const double eig_a = min_eigenvalue(a);
    const double eig_ag = min_eigenvalue(ag);
    DdReport dd_a = is_strictly_diagonally_dominant(a);
    DdReport dd_ag = is_strictly_diagonally_dominant(ag);

    if (opt.as_json) {
        json j{
            {"matrix", opt.matrix_path},
            {"graph", opt.graph_path},
            {"tolerance", tol},
            {"a",
             {{"report", reporting::pd_report_json(rep_a)},
              {"min_eigenvalue", eig_a},
              {"strictly_diagonally_dominant", dd_a.dominant}}},
            {"a_g",
             {{"report", reporting::pd_report_json(rep_ag)},
              {"min_eigenvalue", eig_ag},
              {"strictly_diagonally_dominant", dd_ag.dominant}}},
        };
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("A: %s (min eigenvalue %s, %s); strictly diagonally dominant: %s\n",
                    status_word(rep_a), format_double(eig_a).c_str(),
                    reporting::pd_mode_name(rep_a.mode), dd_a.dominant ? "yes" : "no");
        std::printf("A_G: %s (min eigenvalue %s, %s); strictly diagonally dominant: %s\n",
                    status_word(rep_ag), format_double(eig_ag).c_str(),
                    reporting::pd_mode_name(rep_ag.mode), dd_ag.dominant ? "yes" : "no");
    }
    return verdict_exit(rep_ag);
}

// -------------------------------------------------------------- certify ----

struct CertifyOptions {
    std::string graph_path;
    std::string subgraph_path;
    double level = -1.0;
    bool all_subgraphs = false;
    bool as_json = false;
    std::string witness_out;
};

int cmd_certify(const CertifyOptions& opt) {
    UndirectedGraph g = read_graph_file(opt.graph_path);

    Certificate cert;
    if (!opt.subgraph_path.empty()) {
        UndirectedGraph h = read_graph_file(opt.subgraph_path);
        cert = certify_subgraph_preservation(g, h);
    } else if (opt.level >= 0.0) {
        cert = certify_level_preservation(g, LevelThreshold(opt.level));
    } else if (opt.all_subgraphs) {
        cert = certify_all_subgraph_preservation(g);
    } else {
        cert = certify_universal_preservation(g);
    }

    std::string witness_path;
    std::string threshold_graph_path;
    if (cert.witness.has_value()) {
        witness_path = opt.witness_out.empty() ? opt.graph_path + ".witness.txt" : opt.witness_out;
        std::vector<std::string> comments;
        comments.push_back("witness: positive definite, loses definiteness under the recorded thresholding");
        comments.push_back("theorem: " + cert.theorem);
        if (cert.witness_level.has_value()) {
            comments.push_back("threshold at level " + format_double(*cert.witness_level) +
                               " (strict magnitude cutoff)");
        } else {
            comments.push_back("threshold by the pattern graph written next to this file");
        }
        write_matrix_file(witness_path, *cert.witness, comments);
        if (cert.witness_threshold_graph.has_value()) {
            threshold_graph_path = witness_path + ".graph.txt";
            write_graph_file(threshold_graph_path, *cert.witness_threshold_graph,
                        {"thresholding pattern for the witness matrix"});
        }
    }

    if (opt.as_json) {
        json j = reporting::certificate_json(cert, witness_path);
        if (!threshold_graph_path.empty()) {
            j["witness"]["threshold"]["graph_path"] = threshold_graph_path;
        }
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("verdict: %s (%s)\n", reporting::verdict_name(cert.verdict),
                    cert.theorem.c_str());
        if (!cert.structure.empty()) {
            std::string comps;
            for (const auto& c : cert.structure) comps += " {" + one_based_list(c) + "}";
            std::printf("components:%s\n", comps.c_str());
        }
        for (const std::string& note : cert.notes) std::printf("note: %s\n", note.c_str());
        if (cert.witness.has_value()) {
            std::printf("witness: %dx%d matrix written to %s\n", cert.witness->size(),
                        cert.witness->size(), witness_path.c_str());
            if (!threshold_graph_path.empty()) {
                std::printf("witness thresholding pattern written to %s\n",
                            threshold_graph_path.c_str());
            }
            if (cert.witness_level.has_value()) {
                std::printf("witness thresholding level: %s\n",
                            format_double(*cert.witness_level).c_str());
            }
            std::printf("broken cycle: %s\n", one_based_list(cert.broken_cycle, "-").c_str());
            if (cert.cycle_params.has_value()) {
                const CycleParams& p = *cert.cycle_params;
                std::printf("cycle params: n=%d alpha=%s beta=%s a=%s b=%s\n", p.n,
                            format_double(p.alpha).c_str(), format_double(p.beta).c_str(),
                            format_double(p.a).c_str(), format_double(p.b).c_str());
            }
            std::printf("witness before thresholding: %s; after: %s\n",
                        status_word(cert.witness_pre), status_word(cert.witness_post));
        }
    }
    return cert.verdict == Verdict::GuaranteedForAll ? kExitPd : kExitNotPd;
}

// -------------------------------------------------------------- analyze ----

struct AnalyzeOptions {
    std::string matrix_path;
    std::string graph_path;
    std::string method = "auto";
    int root = 0;  // 1-based; 0 = unset
    bool as_json = false;
};

// Analyze one connected block, choosing path/tree/chordal conditions.
ConditionReport analyze_component(const SymmetricMatrix& m, const UndirectedGraph& g,
                                  const std::string& method, int root_zero_based) {
    if (method == "path" || method == "auto") {
        std::optional<std::vector<int>> order = path_vertex_order(g);
        if (order.has_value()) {
            bool identity = true;
            for (size_t i = 0; i < order->size(); ++i) {
                if ((*order)[i] != static_cast<int>(i)) identity = false;
            }
            SymmetricMatrix pm = identity ? m : permute(m, *order);
            ConditionReport rep = path_conditions(pm);
            if (!identity) {
                rep.notes.insert(rep.notes.begin(),
                                 "vertices reordered along the path: " + one_based_list(*order));
            }
            return rep;
        }
        if (method == "path") {
            throw Error(Error::Code::NotAPathPattern, "pattern is not a path (in any vertex order)");
        }
    }
    if (method == "tree" || method == "auto") {
        if (is_tree(g)) {
            return tree_conditions(m, g, root_zero_based);
        }
        if (method == "tree") {
            throw Error(Error::Code::NotATree, "pattern is not a tree");
        }
    }
    return chordal_conditions(m, g);
}

int cmd_analyze(const AnalyzeOptions& opt) {
    SymmetricMatrix m = read_matrix_file(opt.matrix_path);
    UndirectedGraph g = opt.graph_path.empty() ? zero_pattern_graph(m) : read_graph_file(opt.graph_path);

    std::vector<std::vector<int>> comps = connected_components(g);
    ConditionReport rep;
    if (comps.size() == 1) {
        const int root = opt.root > 0 ? opt.root - 1 : 0;
        rep = analyze_component(m, g, opt.method, root);
    } else {
        rep.notes.push_back("pattern has " + std::to_string(comps.size()) +
                            " connected components; conditions evaluated per component");
        for (size_t c = 0; c < comps.size(); ++c) {
            const std::vector<int>& comp = comps[c];
            const std::string prefix = "component " + std::to_string(c + 1) + " {" +
                                       one_based_list(comp) + "}";
            if (comp.size() <= 2) {
                // Nothing to decompose: classify the principal block directly.
                SymmetricMatrix block(static_cast<int>(comp.size()));
                for (size_t i = 0; i < comp.size(); ++i) {
                    for (size_t j = i; j < comp.size(); ++j) {
                        block.set(static_cast<int>(i), static_cast<int>(j),
                                  m.at(comp[i], comp[j]));
                    }
                }
                ConditionItem item;
                item.label = prefix;
                item.form = "principal block of size " + std::to_string(comp.size()) + " > 0";
                item.is_matrix = comp.size() > 1;
                item.value = block.size() == 1 ? block.at(0, 0) : min_eigenvalue(block);
                item.passed = item.value > kConditionBand;
                item.indeterminate = std::abs(item.value) <= kConditionBand;
                rep.items.push_back(std::move(item));
                continue;
            }
            InducedSubgraph sub = induced_subgraph(g, comp);
            SymmetricMatrix block(static_cast<int>(comp.size()));
            for (size_t i = 0; i < comp.size(); ++i) {
                for (size_t j = i; j < comp.size(); ++j) {
                    block.set(static_cast<int>(i), static_cast<int>(j), m.at(comp[i], comp[j]));
                }
            }
            int root = 0;
            if (opt.root > 0) {
                for (size_t i = 0; i < comp.size(); ++i) {
                    if (comp[i] == opt.root - 1) root = static_cast<int>(i);
                }
            }
            ConditionReport sub_rep = analyze_component(block, sub.graph, opt.method, root);
            rep.notes.push_back(prefix + " uses local vertex numbering 1.." +
                                std::to_string(comp.size()) + " for vertices " +
                                one_based_list(comp));
            for (ConditionItem& item : sub_rep.items) {
                item.label = "component " + std::to_string(c + 1) + ": " + item.label;
                rep.items.push_back(std::move(item));
            }
            for (std::string& note : sub_rep.notes) {
                rep.notes.push_back("component " + std::to_string(c + 1) + ": " + note);
            }
        }
        bool any_fail = false, any_indet = false;
        for (const ConditionItem& it : rep.items) {
            if (it.indeterminate) any_indet = true;
            else if (!it.passed) any_fail = true;
        }
        rep.overall = any_fail ? OverallVerdict::NotPD
                               : (any_indet ? OverallVerdict::Indeterminate : OverallVerdict::PD);
    }

    if (opt.as_json) {
        json j = reporting::condition_report_json(rep);
        j["matrix"] = opt.matrix_path;
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        for (const ConditionItem& it : rep.items) {
            const char* status = it.indeterminate ? "INDET" : (it.passed ? "PASS " : "FAIL ");
            std::printf("%-28s %14s  %s  %s\n", it.label.c_str(),
                        format_double(it.value).c_str(), status, it.form.c_str());
        }
        for (const std::string& note : rep.notes) std::printf("note: %s\n", note.c_str());
        std::printf("overall: %s\n", reporting::overall_name(rep.overall));
    }
    return overall_exit(rep.overall);
}

// ------------------------------------------------------- counterexample ----

struct CounterexampleOptions {
    int cycle_n = 0;
    double level = -1.0;
    std::string graph_path;
    std::string subgraph_path;
    bool non_dd = false;
    std::string out_path;
};

void self_verify_pd_flip(const SymmetricMatrix& reloaded, const SymmetricMatrix& thresholded) {
    PdReport pre = is_positive_definite(reloaded);
    PdReport post = is_positive_definite(thresholded);
    if (!pre.is_pd || post.is_pd || post.indeterminate) {
        throw Error(Error::Code::NotPd, "internal: written witness failed self-verification");
    }
}

int cmd_counterexample(const CounterexampleOptions& opt) {
    std::vector<std::string> comments;
    SymmetricMatrix w;

    enum class Kind { Cycle, Embed, NonDd } kind;
    if (opt.cycle_n > 0) {
        kind = Kind::Cycle;
        CycleCounterexample cc = opt.level >= 0.0
                                     ? construct_level_counterexample(opt.cycle_n, LevelThreshold(opt.level))
                                     : construct_cycle_counterexample(opt.cycle_n);
        w = cc.matrix;
        comments.push_back("broken-cycle witness: n=" + std::to_string(cc.params.n) +
                           " alpha=" + format_double(cc.params.alpha) +
                           " beta=" + format_double(cc.params.beta) + " a=" +
                           format_double(cc.params.a) + " b=" + format_double(cc.params.b) +
                           " epsilon=" + format_double(cc.params.epsilon) + " scale=" +
                           format_double(cc.scale));
        if (opt.level >= 0.0) {
            comments.push_back("thresholding at level " + format_double(opt.level) +
                               " zeroes exactly the (1," + std::to_string(opt.cycle_n) +
                               ") entry and breaks definiteness");
        } else {
            comments.push_back("zeroing the (1," + std::to_string(opt.cycle_n) +
                               ") entry breaks definiteness");
        }
    } else if (opt.non_dd) {
        kind = Kind::NonDd;
        UndirectedGraph g = read_graph_file(opt.graph_path);
        w = non_dd_witness(g);
        comments.push_back("positive definite, no zero entries, no diagonally dominant row;");
        comments.push_back("thresholding by the pattern of " + opt.graph_path +
                           " stays positive definite and stays non-dominant");
    } else {
        kind = Kind::Embed;
        UndirectedGraph g = read_graph_file(opt.graph_path);
        UndirectedGraph h = read_graph_file(opt.subgraph_path);
        if (!broken_cycle_witness(g, h).has_value()) {
            std::fprintf(stderr,
                         "no counterexample exists: every component of the subgraph is induced, "
                         "so this thresholding always preserves definiteness\n");
            return kExitData;
        }
        EmbeddedCounterexample emb = embed_counterexample(g, h);
        w = emb.matrix;
        comments.push_back("witness in the pattern cone of " + opt.graph_path +
                           "; thresholding by " + opt.subgraph_path + " breaks definiteness");
        comments.push_back("planted cycle (1-based): " + one_based_list(emb.cycle, "-"));
    }

    write_matrix_file(opt.out_path, w, comments);

    // Self-verification reads the file back, so rounding through the on-disk
    // representation is covered by the check.
    SymmetricMatrix reloaded = read_matrix_file(opt.out_path);
    switch (kind) {
        case Kind::Cycle: {
            SymmetricMatrix broken = reloaded;
            if (opt.level >= 0.0) {
                broken = threshold_at_level(reloaded, LevelThreshold(opt.level));
            } else {
                broken.set(0, reloaded.size() - 1, 0.0);
            }
            self_verify_pd_flip(reloaded, broken);
            break;
        }
        case Kind::Embed: {
            UndirectedGraph g = read_graph_file(opt.graph_path);
            UndirectedGraph h = read_graph_file(opt.subgraph_path);
            if (!is_in_pattern_cone(reloaded, g)) {
                throw Error(Error::Code::PatternMismatch,
                            "internal: witness leaves the pattern cone");
            }
            self_verify_pd_flip(reloaded, threshold_by_graph(reloaded, h));
            break;
        }
        case Kind::NonDd: {
            UndirectedGraph g = read_graph_file(opt.graph_path);
            SymmetricMatrix thr = threshold_by_graph(reloaded, g);
            PdReport pre = is_positive_definite(reloaded);
            PdReport post = is_positive_definite(thr);
            DdReport dd_pre = is_strictly_diagonally_dominant(reloaded);
            DdReport dd_post = is_strictly_diagonally_dominant(thr);
            bool any_zero = false;
            for (int i = 0; i < reloaded.size(); ++i) {
                for (int j = 0; j < reloaded.size(); ++j) {
                    if (reloaded.at(i, j) == 0.0) any_zero = true;
                }
            }
            bool any_row_dominant = false;
            for (double margin : dd_pre.row_margins) {
                if (margin > 0.0) any_row_dominant = true;
            }
            if (!pre.is_pd || !post.is_pd || any_zero || any_row_dominant || dd_post.dominant) {
                throw Error(Error::Code::NotPd, "internal: witness failed self-verification");
            }
            break;
        }
    }
    std::printf("witness written to %s and verified\n", opt.out_path.c_str());
    return kExitPd;
}

// ------------------------------------------------------------ threshold ----

struct ThresholdOptions {
    std::string matrix_path;
    std::string graph_path;
    double level = -1.0;
    std::string out_path;
};

int cmd_threshold(const ThresholdOptions& opt) {
    SymmetricMatrix m = read_matrix_file(opt.matrix_path);
    SymmetricMatrix out;
    std::vector<std::string> comments;
    if (!opt.graph_path.empty()) {
        UndirectedGraph g = read_graph_file(opt.graph_path);
        out = threshold_by_graph(m, g);
        comments.push_back("thresholding of " + opt.matrix_path + " by the pattern of " +
                           opt.graph_path);
    } else {
        out = threshold_at_level(m, LevelThreshold(opt.level));
        comments.push_back("thresholding of " + opt.matrix_path + " at level " +
                           format_double(opt.level) + " (strict magnitude cutoff)");
    }
    write_matrix_file(opt.out_path, out, comments);
    std::printf("thresholded matrix written to %s\n", opt.out_path.c_str());
    return kExitPd;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"positive definiteness under hard thresholding of symmetric matrices"};
    app.require_subcommand(1);

    CheckOptions check_opt;
    CLI::App* check = app.add_subcommand(
        "check", "test whether a matrix and its graph thresholding are positive definite");
    check->add_option("--matrix", check_opt.matrix_path, "symmetric matrix file")->required();
    check->add_option("--graph", check_opt.graph_path, "pattern graph file")->required();
    check->add_option("--tol", check_opt.tol, "pivot tolerance for the float test");
    check->add_flag("--exact", check_opt.exact, "force exact rational arithmetic");
    check->add_flag("--json", check_opt.as_json, "emit JSON");

    CertifyOptions certify_opt;
    CLI::App* certify = app.add_subcommand(
        "certify", "decide whether thresholding preserves definiteness for a whole matrix class");
    certify->add_option("--graph", certify_opt.graph_path, "pattern graph file")->required();
    CLI::Option* opt_sub = certify->add_option("--subgraph", certify_opt.subgraph_path,
                                               "certify thresholding from the graph to this subgraph");
    CLI::Option* opt_level =
        certify->add_option("--level", certify_opt.level, "certify level thresholding (level > 0)");
    CLI::Option* opt_all = certify->add_flag("--all-subgraphs", certify_opt.all_subgraphs,
                                             "certify thresholding to every subgraph at once");
    opt_sub->excludes(opt_level)->excludes(opt_all);
    opt_level->excludes(opt_all);
    certify->add_option("--witness-out", certify_opt.witness_out,
                        "where to write the witness matrix (default: <graph>.witness.txt)");
    certify->add_flag("--json", certify_opt.as_json, "emit JSON");

    AnalyzeOptions analyze_opt;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "evaluate Schur-complement positivity conditions for a decomposable pattern");
    analyze->add_option("--matrix", analyze_opt.matrix_path, "symmetric matrix file")->required();
    analyze->add_option("--graph", analyze_opt.graph_path,
                        "pattern graph (default: the matrix's own zero pattern)");
    analyze->add_option("--method", analyze_opt.method, "auto|chordal|tree|path")
        ->check(CLI::IsMember({"auto", "chordal", "tree", "path"}))
        ->default_val("auto");
    analyze->add_option("--root", analyze_opt.root, "root vertex for the tree sweep (1-based)")
        ->check(CLI::PositiveNumber);
    analyze->add_flag("--json", analyze_opt.as_json, "emit JSON");

    CounterexampleOptions ce_opt;
    CLI::App* ce = app.add_subcommand("counterexample", "construct and verify witness matrices");
    CLI::Option* opt_cycle =
        ce->add_option("--cycle", ce_opt.cycle_n, "broken-cycle witness on n >= 3 vertices");
    ce->add_option("--level", ce_opt.level, "scale the cycle witness to a magnitude level");
    ce->add_option("--graph", ce_opt.graph_path, "pattern graph file");
    CLI::Option* opt_ce_sub =
        ce->add_option("--subgraph", ce_opt.subgraph_path, "subgraph to break (with --graph)");
    CLI::Option* opt_nondd = ce->add_flag(
        "--non-dd", ce_opt.non_dd, "PD witness with no diagonally dominant row (with --graph)");
    ce->add_option("--out", ce_opt.out_path, "output matrix file")->required();
    opt_cycle->excludes(opt_ce_sub)->excludes(opt_nondd);
    opt_nondd->excludes(opt_ce_sub);

    ThresholdOptions thr_opt;
    CLI::App* thr = app.add_subcommand("threshold", "apply graph or level thresholding to a matrix");
    thr->add_option("--matrix", thr_opt.matrix_path, "symmetric matrix file")->required();
    CLI::Option* opt_tg = thr->add_option("--graph", thr_opt.graph_path, "keep entries on this pattern");
    CLI::Option* opt_tl =
        thr->add_option("--level", thr_opt.level, "keep entries strictly above this magnitude");
    opt_tg->excludes(opt_tl);
    thr->add_option("--out", thr_opt.out_path, "output matrix file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(check_opt);
        if (app.got_subcommand(certify)) return cmd_certify(certify_opt);
        if (app.got_subcommand(analyze)) return cmd_analyze(analyze_opt);
        if (app.got_subcommand(ce)) {
            if (ce_opt.cycle_n == 0 && !ce_opt.non_dd && ce_opt.subgraph_path.empty()) {
                std::fprintf(stderr, "error: pick one of --cycle, --graph/--subgraph, --non-dd\n");
                return kExitUsage;
            }
            if ((ce_opt.non_dd || !ce_opt.subgraph_path.empty()) && ce_opt.graph_path.empty()) {
                std::fprintf(stderr, "error: this construction needs --graph\n");
                return kExitUsage;
            }
            return cmd_counterexample(ce_opt);
        }
        if (app.got_subcommand(thr)) {
            if (thr_opt.graph_path.empty() && thr_opt.level < 0.0) {
                std::fprintf(stderr, "error: threshold needs --graph or --level\n");
                return kExitUsage;
            }
            return cmd_threshold(thr_opt);
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error [%s]: %s\n", error_code_name(e.code), e.what());
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitInternal;
    }
    return kExitUsage;
}
