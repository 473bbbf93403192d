#include "pdthresh/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "pdthresh/errors.hpp"

namespace pdthresh {

UndirectedGraph::UndirectedGraph(int n) : n_(n) {
    if (n < 0) throw Error(Error::Code::OutOfRange, "negative vertex count");
    adj_.resize(static_cast<size_t>(n));
}

void UndirectedGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw Error(Error::Code::OutOfRange,
                    "vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
}

void UndirectedGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(Error::Code::OutOfRange, "self-loop at vertex " + std::to_string(v));
    auto& au = adj_[static_cast<size_t>(u)];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        throw Error(Error::Code::DuplicateEdge,
                    "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    au.insert(it, v);
    auto& av = adj_[static_cast<size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
}

bool UndirectedGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& au = adj_[static_cast<size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

int UndirectedGraph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<size_t>(v)].size());
}

const std::vector<int>& UndirectedGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

std::vector<std::pair<int, int>> UndirectedGraph::edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) e.emplace_back(u, v);
    return e;
}

UndirectedGraph UndirectedGraph::complete(int n) {
    UndirectedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

UndirectedGraph UndirectedGraph::path(int n) {
    UndirectedGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

UndirectedGraph UndirectedGraph::cycle(int n) {
    if (n < 3) throw Error(Error::Code::TooSmall, "cycle needs n >= 3");
    UndirectedGraph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

namespace {

// BFS from `start` over unvisited vertices; appends visited vertices.
void bfs_component(const UndirectedGraph& g, int start, std::vector<char>& visited,
                   std::vector<int>& out) {
    std::vector<int> queue{start};
    visited[static_cast<size_t>(start)] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        out.push_back(u);
        for (int w : g.neighbors(u)) {
            if (!visited[static_cast<size_t>(w)]) {
                visited[static_cast<size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
}

}  // namespace

std::vector<std::vector<int>> connected_components(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> comps;
    for (int v = 0; v < n; ++v) {
        if (visited[static_cast<size_t>(v)]) continue;
        std::vector<int> comp;
        bfs_component(g, v, visited, comp);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const UndirectedGraph& g) {
    if (g.vertex_count() == 0) return true;
    std::vector<char> visited(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> comp;
    bfs_component(g, 0, visited, comp);
    return static_cast<int>(comp.size()) == g.vertex_count();
}

bool is_complete(const UndirectedGraph& g) {
    const long long n = g.vertex_count();
    return 2LL * g.edge_count() == n * (n - 1);
}

bool is_union_of_complete_components(const UndirectedGraph& g) {
    for (const auto& comp : connected_components(g)) {
        // A component is complete iff every member is adjacent to all others.
        const auto k = static_cast<int>(comp.size());
        for (int v : comp)
            if (g.degree(v) != k - 1) return false;
    }
    return true;
}

InducedSubgraph induced_subgraph(const UndirectedGraph& g, const std::vector<int>& vertices) {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw Error(Error::Code::OutOfRange, "induced_subgraph: repeated vertex");
    if (!vs.empty() && (vs.front() < 0 || vs.back() >= g.vertex_count()))
        throw Error(Error::Code::OutOfRange, "induced_subgraph: vertex out of range");
    InducedSubgraph result;
    result.graph = UndirectedGraph(static_cast<int>(vs.size()));
    result.vertex_map = vs;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j]))
                result.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return result;
}

bool is_forest(const UndirectedGraph& g) {
    const auto comps = connected_components(g);
    return g.edge_count() == g.vertex_count() - static_cast<int>(comps.size());
}

bool is_tree(const UndirectedGraph& g) {
    return g.vertex_count() >= 1 && is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

namespace {

// Maximum cardinality search: repeatedly visit the vertex with the most
// already-visited neighbors, lowest index on ties.  Returns the visit order.
std::vector<int> mcs_visit_order(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(static_cast<size_t>(n), 0);
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (visited[static_cast<size_t>(v)]) continue;
            if (best < 0 || weight[static_cast<size_t>(v)] > weight[static_cast<size_t>(best)])
                best = v;
        }
        visited[static_cast<size_t>(best)] = 1;
        order.push_back(best);
        for (int w : g.neighbors(best))
            if (!visited[static_cast<size_t>(w)]) ++weight[static_cast<size_t>(w)];
    }
    return order;
}

// Zero-fill-in test on an MCS visit order (Tarjan & Yannakakis): for each
// vertex, its earlier neighbors minus the latest-visited one must all be
// adjacent to that latest one.  Passes iff the graph is chordal.
bool mcs_order_is_perfect(const UndirectedGraph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<int> pos(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) {
        const int v = order[static_cast<size_t>(i)];
        int latest = -1;
        for (int w : g.neighbors(v))
            if (pos[static_cast<size_t>(w)] < i &&
                (latest < 0 || pos[static_cast<size_t>(w)] > pos[static_cast<size_t>(latest)]))
                latest = w;
        if (latest < 0) continue;
        for (int w : g.neighbors(v)) {
            if (w == latest || pos[static_cast<size_t>(w)] >= i) continue;
            if (!g.has_edge(latest, w)) return false;
        }
    }
    return true;
}

}  // namespace

std::optional<std::vector<int>> chordality(const UndirectedGraph& g) {
    std::vector<int> order = mcs_visit_order(g);
    if (!mcs_order_is_perfect(g, order)) return std::nullopt;
    // In MCS visit order each vertex's earlier neighbors form a clique, so
    // the reversed order is a perfect elimination order (simplicial first).
    std::reverse(order.begin(), order.end());
    return order;
}

CliqueOrdering perfect_clique_ordering(const UndirectedGraph& g) {
    if (!is_connected(g)) throw Error(Error::Code::NotConnected, "perfect_clique_ordering: graph not connected");
    if (g.vertex_count() == 0) throw Error(Error::Code::TooSmall, "perfect_clique_ordering: empty graph");
    std::vector<int> visit = mcs_visit_order(g);
    if (!mcs_order_is_perfect(g, visit))
        throw Error(Error::Code::NotChordal, "perfect_clique_ordering: graph not chordal");

    const int n = g.vertex_count();
    std::vector<int> pos(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(visit[static_cast<size_t>(i)])] = i;

    // Candidate cliques: each vertex together with its earlier neighbors.
    // Every maximal clique of a chordal graph shows up as one of these.
    std::vector<std::vector<int>> candidates;
    candidates.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int v = visit[static_cast<size_t>(i)];
        std::vector<int> c{v};
        for (int w : g.neighbors(v))
            if (pos[static_cast<size_t>(w)] < i) c.push_back(w);
        std::sort(c.begin(), c.end());
        candidates.push_back(std::move(c));
    }

    // Keep maximal candidates only.  Scanning larger ones first keeps the
    // kept list short.
    std::vector<size_t> by_size(candidates.size());
    std::iota(by_size.begin(), by_size.end(), size_t{0});
    std::stable_sort(by_size.begin(), by_size.end(), [&](size_t a, size_t b) {
        return candidates[a].size() > candidates[b].size();
    });
    std::vector<std::vector<int>> maximal;
    for (size_t idx : by_size) {
        const auto& c = candidates[idx];
        bool contained = false;
        for (const auto& m : maximal) {
            if (std::includes(m.begin(), m.end(), c.begin(), c.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(c);
    }

    // Perfect order: ascending position of each clique's latest-visited
    // member (unique per maximal clique).
    std::vector<int> rank(maximal.size(), 0);
    for (size_t q = 0; q < maximal.size(); ++q) {
        int r = -1;
        for (int v : maximal[q]) r = std::max(r, pos[static_cast<size_t>(v)]);
        rank[q] = r;
    }
    std::vector<size_t> clique_order(maximal.size());
    std::iota(clique_order.begin(), clique_order.end(), size_t{0});
    std::sort(clique_order.begin(), clique_order.end(),
              [&](size_t a, size_t b) { return rank[a] < rank[b]; });

    CliqueOrdering out;
    std::vector<int> history;
    for (size_t qi = 0; qi < clique_order.size(); ++qi) {
        const auto& c = maximal[clique_order[qi]];
        std::vector<int> sep, res_b, new_history;
        std::set_intersection(c.begin(), c.end(), history.begin(), history.end(),
                              std::back_inserter(sep));
        std::set_difference(c.begin(), c.end(), sep.begin(), sep.end(), std::back_inserter(res_b));
        std::vector<int> res_a;
        std::set_difference(history.begin(), history.end(), sep.begin(), sep.end(),
                            std::back_inserter(res_a));
        std::set_union(history.begin(), history.end(), c.begin(), c.end(),
                       std::back_inserter(new_history));
        history = std::move(new_history);

        if (qi > 0) {
            // Running intersection property: S_q must sit inside some earlier
            // clique.  Holds for every connected chordal graph with this
            // construction; treat a violation as an internal error.
            bool rip = false;
            for (size_t pj = 0; pj < qi && !rip; ++pj) {
                const auto& p = out.cliques[pj];
                rip = std::includes(p.begin(), p.end(), sep.begin(), sep.end());
            }
            if (!rip || sep.empty())
                throw Error(Error::Code::NotChordal,
                            "perfect_clique_ordering: running intersection property violated");
        }

        out.cliques.push_back(c);
        out.histories.push_back(history);
        out.separators.push_back(qi == 0 ? std::vector<int>{} : sep);
        out.residual_a.push_back(qi == 0 ? std::vector<int>{} : res_a);
        out.residual_b.push_back(qi == 0 ? std::vector<int>{} : res_b);
    }
    return out;
}

int removable_vertex(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw Error(Error::Code::TooSmall, "removable_vertex: need n >= 2");
    if (!is_connected(g)) throw Error(Error::Code::NotConnected, "removable_vertex: graph not connected");
    // BFS distances from vertex 0; a farthest vertex cannot disconnect the
    // graph when removed.  Lowest index on distance ties.
    std::vector<int> dist(static_cast<size_t>(n), -1);
    std::vector<int> queue{0};
    dist[0] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    int best = -1;
    for (int v = 0; v < n; ++v)
        if (best < 0 || dist[static_cast<size_t>(v)] > dist[static_cast<size_t>(best)]) best = v;
    return best;
}

UndirectedGraph spanning_forest(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    UndirectedGraph f(n);
    std::vector<char> visited(static_cast<size_t>(n), 0);
    for (int r = 0; r < n; ++r) {
        if (visited[static_cast<size_t>(r)]) continue;
        visited[static_cast<size_t>(r)] = 1;
        std::vector<int> queue{r};
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u)) {
                if (!visited[static_cast<size_t>(w)]) {
                    visited[static_cast<size_t>(w)] = 1;
                    f.add_edge(u, w);
                    queue.push_back(w);
                }
            }
        }
    }
    return f;
}

std::optional<std::vector<int>> broken_cycle_witness(const UndirectedGraph& g,
                                                     const UndirectedGraph& h) {
    const int n = g.vertex_count();
    if (h.vertex_count() != n)
        throw Error(Error::Code::DimensionMismatch, "broken_cycle_witness: vertex counts differ");
    for (auto [u, v] : h.edges())
        if (!g.has_edge(u, v))
            throw Error(Error::Code::NotASubgraph, "broken_cycle_witness: h is not a subgraph of g");

    // Component id per vertex in h.
    std::vector<int> comp(static_cast<size_t>(n), -1);
    {
        const auto comps = connected_components(h);
        for (size_t c = 0; c < comps.size(); ++c)
            for (int v : comps[c]) comp[static_cast<size_t>(v)] = static_cast<int>(c);
    }

    for (auto [u, v] : g.edges()) {
        if (h.has_edge(u, v) || comp[static_cast<size_t>(u)] != comp[static_cast<size_t>(v)])
            continue;
        // Shortest h-path u -> v (ascending neighbor scan keeps it canonical).
        std::vector<int> parent(static_cast<size_t>(n), -2);
        std::vector<int> queue{u};
        parent[static_cast<size_t>(u)] = -1;
        for (size_t head = 0; head < queue.size() && parent[static_cast<size_t>(v)] == -2; ++head) {
            int x = queue[head];
            for (int w : h.neighbors(x)) {
                if (parent[static_cast<size_t>(w)] == -2) {
                    parent[static_cast<size_t>(w)] = x;
                    queue.push_back(w);
                }
            }
        }
        std::vector<int> cycle;
        for (int x = v; x != -1; x = parent[static_cast<size_t>(x)]) cycle.push_back(x);
        std::reverse(cycle.begin(), cycle.end());  // u ... v; closing edge (u,v) is in g only
        return cycle;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> path_vertex_order(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    if (n == 0 || !is_connected(g) || g.edge_count() != n - 1) return std::nullopt;
    if (n == 1) return std::vector<int>{0};
    int endpoint = -1;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 2) return std::nullopt;
        if (g.degree(v) == 1 && endpoint < 0) endpoint = v;
    }
    if (endpoint < 0) return std::nullopt;
    std::vector<int> order{endpoint};
    int prev = -1, cur = endpoint;
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        for (int w : g.neighbors(cur))
            if (w != prev) next = w;
        if (next < 0) return std::nullopt;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

}  // namespace pdthresh
