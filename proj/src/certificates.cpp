#include "pdthresh/certificates.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "pdthresh/errors.hpp"

namespace pdthresh {

namespace {

std::string vertex_list(const std::vector<int>& vs) {
    std::string s = "{";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i] + 1);
    }
    s += "}";
    return s;
}

// Every negative certificate is checked before it is returned: the witness
// must be PD, stay inside the allowed pattern, and its thresholding must be
// decisively not PD.  A failure here is a bug, not an input problem.
void verify_witness(Certificate& cert, const UndirectedGraph* pattern) {
    const SymmetricMatrix& w = *cert.witness;
    if (pattern != nullptr && !is_in_pattern_cone(w, *pattern)) {
        throw Error(Error::Code::PatternMismatch, "internal: witness leaves the pattern cone");
    }
    cert.witness_pre = is_positive_definite(w);
    if (!cert.witness_pre.is_pd) {
        throw Error(Error::Code::NotPd, "internal: constructed witness is not positive definite");
    }
    SymmetricMatrix thr;
    if (cert.witness_threshold_graph.has_value()) {
        thr = threshold_by_graph(w, *cert.witness_threshold_graph);
    } else {
        thr = threshold_at_level(w, LevelThreshold(*cert.witness_level));
    }
    cert.witness_post = is_positive_definite(thr);
    if (cert.witness_post.is_pd || cert.witness_post.indeterminate) {
        throw Error(Error::Code::NotPd, "internal: witness thresholding failed to break definiteness");
    }
}

void adopt_embedding(Certificate& cert, EmbeddedCounterexample&& emb) {
    cert.witness = std::move(emb.matrix);
    cert.broken_cycle = std::move(emb.cycle);
    cert.witness_is_a3 = emb.used_a3;
    cert.cycle_params = emb.params;
}

}  // namespace

Certificate certify_universal_preservation(const UndirectedGraph& g) {
    Certificate cert;
    cert.theorem = "union-of-complete-components";
    cert.structure = connected_components(g);
    if (is_union_of_complete_components(g)) {
        cert.verdict = Verdict::GuaranteedForAll;
        return cert;
    }
    cert.verdict = Verdict::NotGuaranteed;
    UndirectedGraph full = UndirectedGraph::complete(g.vertex_count());
    adopt_embedding(cert, embed_counterexample(full, g));
    cert.witness_threshold_graph = g;
    cert.notes.push_back("witness pattern uses vertices " + vertex_list(cert.broken_cycle));
    verify_witness(cert, nullptr);
    return cert;
}

Certificate certify_subgraph_preservation(const UndirectedGraph& g, const UndirectedGraph& h) {
    if (g.vertex_count() != h.vertex_count()) {
        throw Error(Error::Code::DimensionMismatch, "graph and subgraph must share a vertex set");
    }
    for (auto [u, v] : h.edges()) {
        if (!g.has_edge(u, v)) {
            throw Error(Error::Code::NotASubgraph, "h has an edge outside g");
        }
    }
    Certificate cert;
    cert.theorem = "induced-component-subgraphs";
    std::optional<std::vector<int>> cycle = broken_cycle_witness(g, h);
    if (!cycle.has_value()) {
        cert.verdict = Verdict::GuaranteedForAll;
        cert.structure = connected_components(h);
        return cert;
    }
    cert.verdict = Verdict::NotGuaranteed;
    adopt_embedding(cert, embed_counterexample(g, h));
    cert.witness_threshold_graph = h;
    cert.notes.push_back("component of h through " + vertex_list(cert.broken_cycle) +
                         " is not induced in g");
    verify_witness(cert, &g);
    return cert;
}

Certificate certify_all_subgraph_preservation(const UndirectedGraph& g) {
    Certificate cert;
    cert.theorem = "forest-all-subgraphs";
    if (is_forest(g)) {
        cert.verdict = Verdict::GuaranteedForAll;
        cert.structure = connected_components(g);
        return cert;
    }
    cert.verdict = Verdict::NotGuaranteed;
    adopt_embedding(cert, embed_counterexample(g, spanning_forest(g)));

    // The failing subgraph: g minus the edge that closes the planted cycle.
    const int cu = cert.broken_cycle.front();
    const int cv = cert.broken_cycle.back();
    UndirectedGraph h(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        if ((u == std::min(cu, cv) && v == std::max(cu, cv))) continue;
        h.add_edge(u, v);
    }
    cert.witness_threshold_graph = std::move(h);
    cert.notes.push_back("failing subgraph drops edge (" + std::to_string(cu + 1) + "," +
                         std::to_string(cv + 1) + ") closing cycle " +
                         vertex_list(cert.broken_cycle));
    verify_witness(cert, &g);
    return cert;
}

Certificate certify_level_preservation(const UndirectedGraph& g, LevelThreshold level) {
    if (!(level.eta > 0.0)) {
        throw Error(Error::Code::OutOfRange, "level certification needs a positive level");
    }
    Certificate cert;
    cert.theorem = "tree-level";
    cert.structure = connected_components(g);

    const std::vector<int>* failing = nullptr;
    for (const std::vector<int>& comp : cert.structure) {
        if (comp.size() <= 2) continue;  // at most one off-diagonal entry; always safe
        InducedSubgraph sub = induced_subgraph(g, comp);
        if (!is_tree(sub.graph)) {
            failing = &comp;
            break;
        }
    }
    if (cert.structure.size() > 1) {
        cert.notes.push_back("disconnected pattern: components certified independently");
    }
    if (failing == nullptr) {
        cert.verdict = Verdict::GuaranteedForAll;
        return cert;
    }

    cert.verdict = Verdict::NotGuaranteed;
    InducedSubgraph sub = induced_subgraph(g, *failing);
    std::optional<std::vector<int>> cycle = broken_cycle_witness(sub.graph, spanning_forest(sub.graph));
    if (!cycle.has_value()) {
        throw Error(Error::Code::NoBrokenCycle, "internal: non-tree component without a cycle");
    }
    std::vector<int> hosts;
    hosts.reserve(cycle->size());
    for (int local : *cycle) hosts.push_back(sub.vertex_map[static_cast<size_t>(local)]);

    const int m = static_cast<int>(hosts.size());
    CycleCounterexample cc = construct_level_counterexample(m, level);
    SymmetricMatrix w = SymmetricMatrix::identity(g.vertex_count());
    // Keep the planted block's diagonal scale: off-block diagonal entries
    // match it so the witness is well-conditioned at any level.
    const double diag = cc.matrix.at(1 % m, 1 % m);
    for (int i = 0; i < g.vertex_count(); ++i) w.set(i, i, diag);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            w.set(hosts[static_cast<size_t>(i)], hosts[static_cast<size_t>(j)], cc.matrix.at(i, j));
        }
    }
    cert.witness = std::move(w);
    cert.witness_level = level.eta;
    cert.broken_cycle = std::move(hosts);
    cert.cycle_params = cc.params;
    cert.notes.push_back("component " + vertex_list(*failing) + " is connected but not a tree");
    verify_witness(cert, &g);
    return cert;
}

DdGuarantee dd_guarantee(const SymmetricMatrix& m) {
    DdReport rep = is_strictly_diagonally_dominant(m);
    DdGuarantee out;
    out.row_margins = rep.row_margins;
    bool diag_pos = true;
    for (int i = 0; i < m.size(); ++i) {
        if (!(m.at(i, i) > 0.0)) diag_pos = false;
    }
    out.applies = rep.dominant && diag_pos;
    return out;
}

}  // namespace pdthresh
