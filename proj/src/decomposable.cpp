#include "pdthresh/decomposable.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pdthresh/errors.hpp"

namespace pdthresh {

namespace {

std::string vlist(const std::vector<int>& vs) {
    std::string s = "{";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i] + 1);
    }
    s += "}";
    return s;
}

SymmetricMatrix extract(const SymmetricMatrix& m, const std::vector<int>& idx) {
    const int k = static_cast<int>(idx.size());
    SymmetricMatrix out(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            out.set(i, j, m.at(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]));
        }
    }
    return out;
}

// Schur complement of m restricted to (others u sep) onto sep; nullopt when
// the eliminated block is numerically singular.
std::optional<SymmetricMatrix> schur_through(const SymmetricMatrix& m,
                                             const std::vector<int>& others,
                                             const std::vector<int>& sep) {
    std::vector<int> all = others;
    all.insert(all.end(), sep.begin(), sep.end());
    std::sort(all.begin(), all.end());
    SymmetricMatrix ext = extract(m, all);
    std::vector<int> keep;
    keep.reserve(sep.size());
    for (int s : sep) {
        auto it = std::lower_bound(all.begin(), all.end(), s);
        keep.push_back(static_cast<int>(it - all.begin()));
    }
    try {
        return schur_complement(ext, keep);
    } catch (const Error& e) {
        if (e.code == Error::Code::SingularBlock) return std::nullopt;
        throw;
    }
}

double condition_scalar(const SymmetricMatrix& c) {
    return c.size() == 1 ? c.at(0, 0) : min_eigenvalue(c);
}

void classify(ConditionItem& item) {
    if (!std::isfinite(item.value)) {
        item.passed = false;
        item.indeterminate = true;
        return;
    }
    item.indeterminate = std::abs(item.value) <= kConditionBand;
    item.passed = item.value > kConditionBand;
}

void finalize(ConditionReport& rep) {
    bool any_fail = false;
    bool any_indet = false;
    for (const ConditionItem& it : rep.items) {
        if (it.indeterminate) {
            any_indet = true;
        } else if (!it.passed) {
            any_fail = true;
        }
    }
    if (any_fail) {
        rep.overall = OverallVerdict::NotPD;
    } else if (any_indet) {
        rep.overall = OverallVerdict::Indeterminate;
    } else {
        rep.overall = OverallVerdict::PD;
    }
}

void require_pattern_inside(const SymmetricMatrix& m, const UndirectedGraph& g) {
    if (m.size() != g.vertex_count()) {
        throw Error(Error::Code::DimensionMismatch, "matrix and graph sizes differ");
    }
    for (int i = 0; i < m.size(); ++i) {
        for (int j = i + 1; j < m.size(); ++j) {
            if (m.at(i, j) != 0.0 && !g.has_edge(i, j)) {
                throw Error(Error::Code::PatternMismatch,
                            "nonzero entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") outside the pattern");
            }
        }
    }
}

double min_diagonal(const SymmetricMatrix& m) {
    double lo = m.at(0, 0);
    for (int i = 1; i < m.size(); ++i) lo = std::min(lo, m.at(i, i));
    return lo;
}

void add_singular_item(ConditionReport& rep, const std::string& label, const std::string& form) {
    ConditionItem item;
    item.label = label;
    item.form = form;
    item.value = 0.0;
    item.is_matrix = true;
    item.passed = false;
    item.indeterminate = true;
    rep.items.push_back(std::move(item));
    rep.notes.push_back(label + ": eliminated block numerically singular; condition indeterminate");
}

// Backward sweep of the continued fraction; sigmas[k-1] holds sigma(k).
std::vector<SigmaValue> sigma_sweep(const SymmetricMatrix& m) {
    const int n = m.size();
    std::vector<SigmaValue> out(static_cast<size_t>(n));
    double sig = m.at(n - 1, n - 1);
    bool shaky = false;
    out[static_cast<size_t>(n - 1)] = {sig, false};
    for (int i = n - 2; i >= 0; --i) {
        if (std::abs(sig) <= kConditionBand) shaky = true;
        const double a = m.at(i, i + 1);
        sig = m.at(i, i) - (a * a) / sig;
        if (!std::isfinite(sig)) shaky = true;
        out[static_cast<size_t>(i)] = {sig, shaky};
    }
    return out;
}

void require_tridiagonal(const SymmetricMatrix& m) {
    for (int i = 0; i < m.size(); ++i) {
        for (int j = i + 2; j < m.size(); ++j) {
            if (m.at(i, j) != 0.0) {
                throw Error(Error::Code::NotAPathPattern,
                            "nonzero entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") off the tridiagonal band");
            }
        }
    }
}

void require_positive_diagonal(const SymmetricMatrix& m) {
    for (int i = 0; i < m.size(); ++i) {
        if (!(m.at(i, i) > 0.0)) {
            throw Error(Error::Code::NonpositiveDiagonal,
                        "diagonal entry " + std::to_string(i + 1) + " is not positive");
        }
    }
}

}  // namespace

ConditionReport decomposition_condition(const SymmetricMatrix& m, const Decomposition& d) {
    const int n = m.size();
    std::vector<int> tag(static_cast<size_t>(n), 0);
    auto mark = [&](const std::vector<int>& part, int t, const char* name) {
        for (int v : part) {
            if (v < 0 || v >= n) {
                throw Error(Error::Code::OutOfRange,
                            std::string(name) + " contains an out-of-range vertex");
            }
            if (tag[static_cast<size_t>(v)] != 0) {
                throw Error(Error::Code::InvalidDecomposition,
                            "vertex " + std::to_string(v + 1) + " appears twice in the decomposition");
            }
            tag[static_cast<size_t>(v)] = t;
        }
    };
    mark(d.part_a, 1, "part A");
    mark(d.part_b, 2, "part B");
    mark(d.separator_c, 3, "separator C");
    if (d.part_a.empty() || d.part_b.empty()) {
        throw Error(Error::Code::InvalidDecomposition, "parts A and B must both be nonempty");
    }
    for (int v = 0; v < n; ++v) {
        if (tag[static_cast<size_t>(v)] == 0) {
            throw Error(Error::Code::InvalidDecomposition,
                        "vertex " + std::to_string(v + 1) + " is in no part");
        }
    }
    for (int a : d.part_a) {
        for (int b : d.part_b) {
            if (m.at(a, b) != 0.0) {
                throw Error(Error::Code::PatternMismatch,
                            "m[A,B] must vanish; entry (" + std::to_string(a + 1) + "," +
                                std::to_string(b + 1) + ") is nonzero");
            }
        }
    }

    std::vector<int> a_idx = d.part_a;
    std::vector<int> b_idx = d.part_b;
    std::vector<int> c_idx = d.separator_c;
    std::sort(a_idx.begin(), a_idx.end());
    std::sort(b_idx.begin(), b_idx.end());
    std::sort(c_idx.begin(), c_idx.end());

    ConditionReport rep;
    {
        ConditionItem item;
        item.label = "m[A,A]";
        item.form = "m[A,A] > 0, A=" + vlist(a_idx);
        item.is_matrix = a_idx.size() > 1;
        item.value = condition_scalar(extract(m, a_idx));
        classify(item);
        rep.items.push_back(std::move(item));
    }
    {
        ConditionItem item;
        item.label = "m[B,B]";
        item.form = "m[B,B] > 0, B=" + vlist(b_idx);
        item.is_matrix = b_idx.size() > 1;
        item.value = condition_scalar(extract(m, b_idx));
        classify(item);
        rep.items.push_back(std::move(item));
    }
    if (c_idx.empty()) {
        rep.notes.push_back("empty separator: block-diagonal case, no coupling condition");
    } else {
        std::optional<SymmetricMatrix> s1 = schur_through(m, a_idx, c_idx);
        std::optional<SymmetricMatrix> s2 = schur_through(m, b_idx, c_idx);
        const std::string form = "S1+S2-m[C,C] > 0, C=" + vlist(c_idx);
        if (!s1.has_value() || !s2.has_value()) {
            add_singular_item(rep, "coupling", form);
        } else {
            SymmetricMatrix cond = extract(m, c_idx);
            for (int i = 0; i < cond.size(); ++i) {
                for (int j = i; j < cond.size(); ++j) {
                    cond.set(i, j, s1->at(i, j) + s2->at(i, j) - cond.at(i, j));
                }
            }
            ConditionItem item;
            item.label = "coupling";
            item.form = form;
            item.is_matrix = cond.size() > 1;
            item.value = condition_scalar(cond);
            classify(item);
            rep.items.push_back(std::move(item));
        }
    }
    finalize(rep);
    return rep;
}

ConditionReport chordal_conditions(const SymmetricMatrix& m, const UndirectedGraph& g) {
    require_pattern_inside(m, g);
    CliqueOrdering co = perfect_clique_ordering(g);

    ConditionReport rep;
    const double dmin = min_diagonal(m);
    if (!(dmin > 0.0)) {
        ConditionItem item;
        item.label = "diagonal";
        item.form = "all diagonal entries > 0";
        item.value = dmin;
        classify(item);
        rep.items.push_back(std::move(item));
        rep.notes.push_back("nonpositive diagonal entry: not positive definite");
        finalize(rep);
        return rep;
    }

    const size_t k = co.cliques.size();
    if (k == 1) {
        rep.notes.push_back("single clique: positivity is inherited, no separator conditions");
        rep.overall = OverallVerdict::PD;
        return rep;
    }
    for (size_t q = 1; q < k; ++q) {
        const std::vector<int>& sep = co.separators[q];
        const std::vector<int>& res_a = co.residual_a[q];
        const std::vector<int>& res_b = co.residual_b[q];
        const std::string label = "q=" + std::to_string(q + 1);
        const std::string form = "S1+S2-m[S,S] > 0, S=" + vlist(sep) + ", clique " +
                                 vlist(co.cliques[q]) + ", prior residue " + vlist(res_a);
        std::optional<SymmetricMatrix> s1 = schur_through(m, res_a, sep);
        std::optional<SymmetricMatrix> s2 = schur_through(m, res_b, sep);
        if (!s1.has_value() || !s2.has_value()) {
            add_singular_item(rep, label, form);
            continue;
        }
        SymmetricMatrix cond = extract(m, sep);
        for (int i = 0; i < cond.size(); ++i) {
            for (int j = i; j < cond.size(); ++j) {
                cond.set(i, j, s1->at(i, j) + s2->at(i, j) - cond.at(i, j));
            }
        }
        ConditionItem item;
        item.label = label;
        item.form = form;
        item.is_matrix = cond.size() > 1;
        item.value = condition_scalar(cond);
        classify(item);
        rep.items.push_back(std::move(item));
    }
    finalize(rep);
    return rep;
}

TreeEdgeOrder tree_edge_order(const UndirectedGraph& t, int root) {
    if (!is_tree(t)) {
        throw Error(Error::Code::NotATree, "edge ordering needs a tree");
    }
    const int n = t.vertex_count();
    if (root < 0 || root >= n) {
        throw Error(Error::Code::OutOfRange, "root vertex out of range");
    }
    TreeEdgeOrder out;
    out.root = root;
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::vector<int> queue;
    queue.push_back(root);
    visited[static_cast<size_t>(root)] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int w : t.neighbors(u)) {
            if (visited[static_cast<size_t>(w)]) continue;
            visited[static_cast<size_t>(w)] = 1;
            out.edges.emplace_back(u, w);
            queue.push_back(w);
        }
    }
    return out;
}

ConditionReport tree_conditions(const SymmetricMatrix& m, const UndirectedGraph& t, int root) {
    require_pattern_inside(m, t);
    if (m.size() < 3) {
        throw Error(Error::Code::TooSmall, "tree conditions need at least two edges");
    }
    TreeEdgeOrder teo = tree_edge_order(t, root);

    ConditionReport rep;
    const double dmin = min_diagonal(m);
    if (!(dmin > 0.0)) {
        ConditionItem item;
        item.label = "diagonal";
        item.form = "all diagonal entries > 0";
        item.value = dmin;
        classify(item);
        rep.items.push_back(std::move(item));
        rep.notes.push_back("nonpositive diagonal entry: not positive definite");
        finalize(rep);
        return rep;
    }

    rep.notes.push_back("edge 1 (" + std::to_string(teo.edges[0].first + 1) + "," +
                        std::to_string(teo.edges[0].second + 1) +
                        ") anchors the sweep; its 2x2 block carries no condition");
    std::set<int> seen{teo.edges[0].first, teo.edges[0].second};
    for (size_t j = 1; j < teo.edges.size(); ++j) {
        const int p = teo.edges[j].first;
        const int q = teo.edges[j].second;
        std::vector<int> a_j;
        for (int v : seen) {
            if (v != p) a_j.push_back(v);
        }
        const std::string label = "j=" + std::to_string(j + 1);
        const std::string form = "sigma+eta-m[p,p] > 0 at edge (" + std::to_string(p + 1) + "," +
                                 std::to_string(q + 1) + "), prior part " + vlist(a_j);
        std::optional<SymmetricMatrix> sig = schur_through(m, a_j, {p});
        if (!sig.has_value()) {
            add_singular_item(rep, label, form);
        } else {
            const double eta = m.at(p, p) - (m.at(p, q) * m.at(p, q)) / m.at(q, q);
            ConditionItem item;
            item.label = label;
            item.form = form;
            item.value = sig->at(0, 0) + eta - m.at(p, p);
            classify(item);
            rep.items.push_back(std::move(item));
        }
        seen.insert(q);
    }
    finalize(rep);
    return rep;
}

SigmaValue path_sigma(const SymmetricMatrix& m, int k) {
    require_tridiagonal(m);
    require_positive_diagonal(m);
    if (k < 1 || k > m.size()) {
        throw Error(Error::Code::OutOfRange, "sigma index out of range");
    }
    return sigma_sweep(m)[static_cast<size_t>(k - 1)];
}

ConditionReport path_conditions(const SymmetricMatrix& m) {
    if (m.size() < 3) {
        throw Error(Error::Code::TooSmall, "path conditions need at least 3 vertices");
    }
    require_tridiagonal(m);
    require_positive_diagonal(m);

    ConditionReport rep;
    std::vector<SigmaValue> sig = sigma_sweep(m);
    for (int k = 1; k + 2 <= m.size(); ++k) {
        ConditionItem item;
        item.label = "k=" + std::to_string(k);
        item.form = "sigma(" + std::to_string(k) + ") = m[" + std::to_string(k) + "," +
                    std::to_string(k) + "] - m[" + std::to_string(k) + "," + std::to_string(k + 1) +
                    "]^2 / sigma(" + std::to_string(k + 1) + ") > 0";
        item.value = sig[static_cast<size_t>(k - 1)].value;
        classify(item);
        if (sig[static_cast<size_t>(k - 1)].indeterminate) {
            item.passed = false;
            item.indeterminate = true;
        }
        rep.items.push_back(std::move(item));
    }
    std::string sweep = "sigma sweep:";
    for (int k = m.size(); k >= 1; --k) {
        char buf[64];
        std::snprintf(buf, sizeof buf, " sigma(%d)=%.12g", k, sig[static_cast<size_t>(k - 1)].value);
        sweep += buf;
    }
    rep.notes.push_back(sweep);
    rep.notes.push_back("sigma(" + std::to_string(m.size() - 1) + ") and sigma(" +
                        std::to_string(m.size()) +
                        ") touch only the trailing clique block and carry no condition");
    finalize(rep);
    return rep;
}

}  // namespace pdthresh
