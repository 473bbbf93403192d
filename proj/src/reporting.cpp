#include "pdthresh/reporting.hpp"

namespace pdthresh::reporting {

namespace {

nlohmann::json one_based(const std::vector<int>& vs) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : vs) arr.push_back(v + 1);
    return arr;
}

}  // namespace

const char* verdict_name(Verdict v) {
    return v == Verdict::GuaranteedForAll ? "guaranteed" : "not-guaranteed";
}

const char* overall_name(OverallVerdict v) {
    switch (v) {
        case OverallVerdict::PD: return "positive-definite";
        case OverallVerdict::NotPD: return "not-positive-definite";
        default: return "indeterminate";
    }
}

const char* pd_mode_name(PdMode m) {
    return m == PdMode::ExactRational ? "exact-rational" : "float-pivot";
}

nlohmann::json graph_json(const UndirectedGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back(nlohmann::json::array({u + 1, v + 1}));
    }
    return nlohmann::json{{"vertices", g.vertex_count()}, {"edges", edges}};
}

nlohmann::json pd_report_json(const PdReport& rep) {
    return nlohmann::json{
        {"positive_definite", rep.is_pd},
        {"indeterminate", rep.indeterminate},
        {"mode", pd_mode_name(rep.mode)},
        {"min_pivot_or_eigenvalue", rep.min_pivot_or_eigenvalue},
        {"failing_minor_order", rep.failing_minor_order},
    };
}

nlohmann::json certificate_json(const Certificate& cert, const std::string& witness_path) {
    nlohmann::json j{
        {"verdict", verdict_name(cert.verdict)},
        {"theorem", cert.theorem},
        {"notes", cert.notes},
    };
    nlohmann::json structure = nlohmann::json::array();
    for (const std::vector<int>& comp : cert.structure) structure.push_back(one_based(comp));
    j["structure"] = structure;

    if (cert.witness.has_value()) {
        nlohmann::json w;
        w["size"] = cert.witness->size();
        if (!witness_path.empty()) w["path"] = witness_path;
        if (cert.witness_threshold_graph.has_value()) {
            w["threshold"] = {{"type", "graph"},
                              {"graph", graph_json(*cert.witness_threshold_graph)}};
        } else if (cert.witness_level.has_value()) {
            w["threshold"] = {{"type", "level"}, {"level", *cert.witness_level}};
        }
        w["broken_cycle"] = one_based(cert.broken_cycle);
        w["uses_3x3_block"] = cert.witness_is_a3;
        if (cert.cycle_params.has_value()) {
            const CycleParams& p = *cert.cycle_params;
            w["cycle_params"] = {{"n", p.n}, {"alpha", p.alpha}, {"beta", p.beta},
                                 {"a", p.a},  {"b", p.b},        {"epsilon", p.epsilon}};
        }
        w["before_thresholding"] = pd_report_json(cert.witness_pre);
        w["after_thresholding"] = pd_report_json(cert.witness_post);
        j["witness"] = w;
    }
    return j;
}

nlohmann::json condition_report_json(const ConditionReport& rep) {
    nlohmann::json items = nlohmann::json::array();
    for (const ConditionItem& it : rep.items) {
        items.push_back(nlohmann::json{
            {"label", it.label},
            {"form", it.form},
            {"value", it.value},
            {"matrix_condition", it.is_matrix},
            {"passed", it.passed},
            {"indeterminate", it.indeterminate},
        });
    }
    return nlohmann::json{
        {"overall", overall_name(rep.overall)},
        {"items", items},
        {"notes", rep.notes},
    };
}

}  // namespace pdthresh::reporting
