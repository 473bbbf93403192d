#include "pdthresh/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pdthresh/errors.hpp"

namespace pdthresh::io {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw Error(Error::Code::Parse, "line " + std::to_string(line) + ": " + msg);
}

// Reads the next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size() || line[i] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

UndirectedGraph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno)) parse_fail(lineno, "missing graph header");
    std::istringstream head(line);
    int n = -1;
    long long count = -1;
    std::string extra;
    if (!(head >> n >> count) || (head >> extra))
        parse_fail(lineno, "graph header must be 'n <edge count>'");
    if (n < 0 || count < 0) parse_fail(lineno, "negative graph header values");

    UndirectedGraph g(n);
    for (long long e = 0; e < count; ++e) {
        if (!next_content_line(in, line, lineno)) parse_fail(lineno, "unexpected end of edge list");
        std::istringstream ls(line);
        int u = 0, v = 0;
        if (!(ls >> u >> v) || (ls >> extra)) parse_fail(lineno, "edge line must be 'u v'");
        if (!(1 <= u && u < v && v <= n))
            parse_fail(lineno, "edge endpoints must satisfy 1 <= u < v <= n");
        try {
            g.add_edge(u - 1, v - 1);
        } catch (const Error& err) {
            parse_fail(lineno, err.what());
        }
    }
    if (next_content_line(in, line, lineno)) parse_fail(lineno, "trailing content after edge list");
    return g;
}

void write_graph(std::ostream& out, const UndirectedGraph& g,
                 const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << (u + 1) << " " << (v + 1) << "\n";
}

namespace {

SymmetricMatrix read_matrix_market(std::istream& in, const std::string& banner, int lineno_start) {
    int lineno = lineno_start;
    {
        std::istringstream hs(banner);
        std::string tag, object, format, field, symmetry;
        hs >> tag >> object >> format >> field >> symmetry;
        for (auto* s : {&object, &format, &field, &symmetry})
            for (char& c : *s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (object != "matrix" || format != "coordinate" ||
            (field != "real" && field != "integer") || symmetry != "symmetric")
            parse_fail(lineno, "unsupported MatrixMarket header (need coordinate real symmetric)");
    }
    std::string line;
    // Size line; '%' comments may intervene.
    for (;;) {
        if (!std::getline(in, line)) parse_fail(lineno, "missing MatrixMarket size line");
        ++lineno;
        size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size() || line[i] == '%') continue;
        break;
    }
    std::istringstream ss(line);
    int rows = 0, cols = 0;
    long long nnz = -1;
    std::string extra;
    if (!(ss >> rows >> cols >> nnz) || (ss >> extra))
        parse_fail(lineno, "MatrixMarket size line must be 'n n nnz'");
    if (rows != cols || rows < 0 || nnz < 0) parse_fail(lineno, "bad MatrixMarket dimensions");

    SymmetricMatrix m(rows);
    std::vector<char> seen(static_cast<size_t>(rows) * rows, 0);
    for (long long k = 0; k < nnz; ++k) {
        for (;;) {
            if (!std::getline(in, line)) parse_fail(lineno, "unexpected end of MatrixMarket entries");
            ++lineno;
            size_t i = 0;
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i == line.size() || line[i] == '%') continue;
            break;
        }
        std::istringstream es(line);
        int i = 0, j = 0;
        double v = 0.0;
        if (!(es >> i >> j >> v) || (es >> extra)) parse_fail(lineno, "entry line must be 'i j value'");
        if (i < 1 || i > rows || j < 1 || j > rows) parse_fail(lineno, "entry index out of range");
        if (!std::isfinite(v)) parse_fail(lineno, "non-finite entry");
        char& mark = seen[static_cast<size_t>(i - 1) * rows + (j - 1)];
        char& mark_t = seen[static_cast<size_t>(j - 1) * rows + (i - 1)];
        if (mark) parse_fail(lineno, "duplicate entry");
        mark = mark_t = 1;
        m.set(i - 1, j - 1, v);
    }
    return m;
}

}  // namespace

SymmetricMatrix read_matrix(std::istream& in) {
    std::string line;
    int lineno = 0;
    // Peek at the first line to pick the format.
    if (!std::getline(in, line)) parse_fail(1, "empty matrix file");
    ++lineno;
    if (line.rfind("%%MatrixMarket", 0) == 0) return read_matrix_market(in, line, lineno);

    // Dense text: rewind-free, treat the already-read line as content unless
    // it is blank or a comment.
    std::vector<double> values;
    int n = -1;
    auto consume = [&](const std::string& l, int ln) {
        size_t i = 0;
        while (i < l.size() && std::isspace(static_cast<unsigned char>(l[i]))) ++i;
        if (i == l.size() || l[i] == '#') return;
        std::istringstream ls(l);
        if (n < 0) {
            if (!(ls >> n) || n < 0) parse_fail(ln, "first value must be the dimension n");
        }
        double v = 0.0;
        while (ls >> v) {
            if (!std::isfinite(v)) parse_fail(ln, "non-finite entry");
            values.push_back(v);
        }
        if (!ls.eof()) parse_fail(ln, "malformed number");
    };
    consume(line, lineno);
    while (std::getline(in, line)) consume(line, ++lineno);
    if (n < 0) parse_fail(lineno, "missing dimension");
    if (values.size() != static_cast<size_t>(n) * n)
        parse_fail(lineno, "expected " + std::to_string(static_cast<long long>(n) * n) +
                               " entries, found " + std::to_string(values.size()));
    // Symmetry is required of the input, not repaired.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (values[static_cast<size_t>(i) * n + j] != values[static_cast<size_t>(j) * n + i])
                parse_fail(lineno, "matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ")");
    return SymmetricMatrix(n, std::move(values));
}

void write_matrix_dense(std::ostream& out, const SymmetricMatrix& m,
                        const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    const int n = m.size();
    out << n << "\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << " ";
            out << format_double(m.at(i, j));
        }
        out << "\n";
    }
}

void write_matrix_market(std::ostream& out, const SymmetricMatrix& m) {
    const int n = m.size();
    long long nnz = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (m.at(i, j) != 0.0) ++nnz;
    out << "%%MatrixMarket matrix coordinate real symmetric\n";
    out << n << " " << n << " " << nnz << "\n";
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (m.at(i, j) != 0.0)
                out << (i + 1) << " " << (j + 1) << " " << format_double(m.at(i, j)) << "\n";
}

namespace {
template <typename Fn>
void write_file(const std::string& path, Fn&& fn) {
    std::ofstream out(path);
    if (!out) throw Error(Error::Code::Io, "cannot open for writing: " + path);
    fn(out);
    out.flush();
    if (!out) throw Error(Error::Code::Io, "write failed: " + path);
}
}  // namespace

UndirectedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Error::Code::Io, "cannot open: " + path);
    return read_graph(in);
}

void write_graph_file(const std::string& path, const UndirectedGraph& g,
                      const std::vector<std::string>& comments) {
    write_file(path, [&](std::ostream& out) { write_graph(out, g, comments); });
}

SymmetricMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Error::Code::Io, "cannot open: " + path);
    return read_matrix(in);
}

void write_matrix_file(const std::string& path, const SymmetricMatrix& m,
                       const std::vector<std::string>& comments) {
    const bool mm = path.size() >= 4 && path.compare(path.size() - 4, 4, ".mtx") == 0;
    write_file(path, [&](std::ostream& out) {
        if (mm)
            write_matrix_market(out, m);
        else
            write_matrix_dense(out, m, comments);
    });
}

}  // namespace pdthresh::io
