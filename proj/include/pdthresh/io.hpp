#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pdthresh/graph.hpp"
#include "pdthresh/matrix.hpp"

// Text formats.  Graphs: '#' comment lines, then "n <count>", then one
// "u v" line per edge with 1 <= u < v <= n (1-based; duplicates rejected).
// Matrices: either dense text ('#' comments allowed, first value is n,
// then n rows of n entries) or Matrix Market coordinate real symmetric
// (autodetected by the %%MatrixMarket banner).  Writers emit 17 significant
// digits so doubles round-trip exactly.
namespace pdthresh::io {

UndirectedGraph read_graph(std::istream& in);
UndirectedGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const UndirectedGraph& g,
                 const std::vector<std::string>& comments = {});
void write_graph_file(const std::string& path, const UndirectedGraph& g,
                      const std::vector<std::string>& comments = {});

SymmetricMatrix read_matrix(std::istream& in);
SymmetricMatrix read_matrix_file(const std::string& path);
void write_matrix_dense(std::ostream& out, const SymmetricMatrix& m,
                        const std::vector<std::string>& comments = {});
void write_matrix_market(std::ostream& out, const SymmetricMatrix& m);
// Picks Matrix Market when the path ends in .mtx, dense text otherwise.
void write_matrix_file(const std::string& path, const SymmetricMatrix& m,
                       const std::vector<std::string>& comments = {});

std::string format_double(double v);  // %.17g

}  // namespace pdthresh::io
