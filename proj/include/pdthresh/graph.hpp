#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace pdthresh {

// Simple undirected graph on vertices 0..n-1 (no loops, no multi-edges).
// The library is 0-based throughout; file formats and reports use 1-based
// labels and the I/O layer converts.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    void add_edge(int u, int v);  // throws OutOfRange / DuplicateEdge
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;  // ascending

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    static UndirectedGraph complete(int n);
    static UndirectedGraph path(int n);   // 0-1-2-...-(n-1)
    static UndirectedGraph cycle(int n);  // path plus closing edge (0, n-1); n >= 3

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
};

// A decomposition (A, B, C) of a vertex set: C separates A from B.  Used by
// the Schur-complement analyses; decomposition_condition() validates the
// block-zero structure against the matrix itself.
struct Decomposition {
    std::vector<int> part_a;
    std::vector<int> part_b;
    std::vector<int> separator_c;  // may be empty (block-diagonal case)
};

// Maximal cliques C_1..C_k of a connected chordal graph in an order with the
// running intersection property, plus the derived sets the recursive
// Schur-complement conditions need.  All vertex lists are sorted ascending.
// Index q is 0-based here; separators/residuals are empty for q = 0.
struct CliqueOrdering {
    std::vector<std::vector<int>> cliques;     // C_1..C_k
    std::vector<std::vector<int>> histories;   // H_q = C_1 u ... u C_q
    std::vector<std::vector<int>> separators;  // S_q = C_q n H_{q-1}
    std::vector<std::vector<int>> residual_a;  // A_q = H_{q-1} \ S_q
    std::vector<std::vector<int>> residual_b;  // B_q = C_q \ S_q
};

struct InducedSubgraph {
    UndirectedGraph graph;
    std::vector<int> vertex_map;  // vertex_map[new_index] = old_index
};

// Components sorted by smallest member; members ascending.
std::vector<std::vector<int>> connected_components(const UndirectedGraph& g);

bool is_connected(const UndirectedGraph& g);
bool is_complete(const UndirectedGraph& g);

// True iff every connected component is a complete graph.
bool is_union_of_complete_components(const UndirectedGraph& g);

// vertices must be distinct and in range; the result relabels them in
// ascending order.
InducedSubgraph induced_subgraph(const UndirectedGraph& g, const std::vector<int>& vertices);

bool is_forest(const UndirectedGraph& g);
bool is_tree(const UndirectedGraph& g);

// Chordality test via maximum cardinality search (lowest-index tie-break)
// plus verification of the resulting order.  Returns a perfect elimination
// order (first vertex is simplicial, eliminate left to right) when the graph
// is chordal, nullopt otherwise.  Deterministic.
std::optional<std::vector<int>> chordality(const UndirectedGraph& g);

// Maximal cliques in a perfect order (running intersection property).
// Throws NotConnected / NotChordal.
CliqueOrdering perfect_clique_ordering(const UndirectedGraph& g);

// A vertex whose removal keeps the graph connected: BFS from the
// lowest-index vertex, take a vertex at maximum distance, lowest index on
// ties.  Throws NotConnected, TooSmall (n < 2).
int removable_vertex(const UndirectedGraph& g);

// Spanning forest via BFS from the lowest-index vertex of each component
// (neighbors scanned ascending).  Same components as g.
UndirectedGraph spanning_forest(const UndirectedGraph& g);

// h must be a subgraph of g on the same vertex set.  If some connected
// component of h is not an induced subgraph of g, returns a broken cycle:
// vertices v_1..v_m (m >= 3) such that consecutive pairs are edges of h and
// the closing edge (v_1, v_m) is in g but not h.  The path is a shortest
// h-path between the lexicographically first qualifying g-edge; returns
// nullopt iff every component of h is induced in g.
std::optional<std::vector<int>> broken_cycle_witness(const UndirectedGraph& g,
                                                     const UndirectedGraph& h);

// If g is a single path spanning all n vertices, returns the vertex order
// along it (starting from the lower-numbered endpoint); nullopt otherwise.
std::optional<std::vector<int>> path_vertex_order(const UndirectedGraph& g);

}  // namespace pdthresh
