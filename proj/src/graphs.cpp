#include "srg/graphs.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>

#include "srg/walks.hpp"

namespace srg {

Graph::Graph(std::size_t vertex_count, const std::vector<Edge>& edges)
    : n_(vertex_count), matrix_(vertex_count * vertex_count, 0), rows_(vertex_count) {
    for (auto [u, v] : edges) {
        if (u >= n_ || v >= n_) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        if (matrix_[u * n_ + v]) continue;
        matrix_[u * n_ + v] = matrix_[v * n_ + u] = 1;
        rows_[u].push_back(v);
        rows_[v].push_back(u);
        ++edge_count_;
    }
    for (auto& row : rows_) std::sort(row.begin(), row.end());
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& row : rows_) best = std::max(best, row.size());
    return best;
}

Graph Graph::complement() const {
    std::vector<Edge> flipped;
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) {
            if (!adjacent(u, v)) flipped.emplace_back(u, v);
        }
    }
    return Graph(n_, flipped);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : rows_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

void Graph::write_edge_list(std::ostream& os) const {
    os << n_ << ' ' << edge_count_ << '\n';
    for (auto [u, v] : edges()) os << u << ' ' << v << '\n';
}

Graph Graph::read_edge_list(std::istream& is) {
    std::size_t n = 0, m = 0;
    if (!(is >> n >> m)) throw std::invalid_argument("edge list: missing header");
    std::vector<Edge> edges(m);
    for (auto& [u, v] : edges) {
        if (!(is >> u >> v)) throw std::invalid_argument("edge list: truncated");
    }
    return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// Families

namespace {

[[noreturn]] void invalid(const std::string& what) {
    throw GraphError(GraphErrorKind::InvalidFamilyParameter, what);
}

std::int64_t parse_param(std::string_view text, std::string_view family) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        invalid("bad parameter '" + std::string(text) + "' for " + std::string(family));
    }
    return v;
}

Graph kneser_5_2() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < pairs.size(); ++i) {
        for (Vertex j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
        }
    }
    return Graph(pairs.size(), edges);
}

Graph paley(std::int64_t q) {
    if (q < 5 || !is_prime(static_cast<std::uint64_t>(q)) || q % 4 != 1) {
        invalid("paley requires a prime q = 1 (mod 4), got " + std::to_string(q));
    }
    std::vector<bool> residue(q, false);
    for (std::int64_t x = 1; x < q; ++x) residue[x * x % q] = true;
    std::vector<Edge> edges;
    for (Vertex x = 0; x < q; ++x) {
        for (Vertex y = x + 1; y < q; ++y) {
            if (residue[(y - x) % q]) edges.emplace_back(x, y);
        }
    }
    return Graph(q, edges);
}

Graph triangular(std::int64_t m) {
    if (m < 4) invalid("triangular requires m >= 4, got " + std::to_string(m));
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::int64_t a = 0; a < m; ++a)
        for (std::int64_t b = a + 1; b < m; ++b) pairs.emplace_back(a, b);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < pairs.size(); ++i) {
        for (Vertex j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
        }
    }
    return Graph(pairs.size(), edges);
}

Graph lattice(std::int64_t m) {
    if (m < 2) invalid("lattice requires m >= 2, got " + std::to_string(m));
    const auto size = static_cast<Vertex>(m);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < size * size; ++i) {
        for (Vertex j = i + 1; j < size * size; ++j) {
            if (i / size == j / size || i % size == j % size) edges.emplace_back(i, j);
        }
    }
    return Graph(size * size, edges);
}

Graph cycle5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const std::string_view rest =
        colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    const bool has_arg = colon != std::string_view::npos;

    if (head == "petersen" && !has_arg) return petersen();
    if (head == "cycle5" && !has_arg) return cycle5();
    if (head == "paley" && has_arg) return paley(parse_param(rest, head));
    if (head == "triangular" && has_arg) return triangular(parse_param(rest, head));
    if (head == "lattice" && has_arg) return lattice(parse_param(rest, head));
    if ((head == "complement" || head == "complement-of") && has_arg) {
        return complement_of(parse(rest));
    }
    invalid("unknown graph family '" + std::string(text) + "'");
}

std::string FamilySpec::to_string() const {
    switch (kind) {
        case Kind::Petersen: return "petersen";
        case Kind::Cycle5: return "cycle5";
        case Kind::Paley: return "paley:" + std::to_string(param);
        case Kind::Triangular: return "triangular:" + std::to_string(param);
        case Kind::Lattice: return "lattice:" + std::to_string(param);
        case Kind::Complement: return "complement:" + (inner ? inner->to_string() : "?");
    }
    return "?";
}

Graph build_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::Petersen: return kneser_5_2();
        case FamilySpec::Kind::Cycle5: return cycle5();
        case FamilySpec::Kind::Paley: return paley(spec.param);
        case FamilySpec::Kind::Triangular: return triangular(spec.param);
        case FamilySpec::Kind::Lattice: return lattice(spec.param);
        case FamilySpec::Kind::Complement:
            if (!spec.inner) invalid("complement without an inner family");
            return build_family(*spec.inner).complement();
    }
    invalid("unknown family kind");
}

// ---------------------------------------------------------------------------
// Oracles

SrgParams verify_srg(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        throw GraphError(GraphErrorKind::TrivialGraph, "graph has no vertices");
    }
    const std::size_t k = g.degree(0);
    for (Vertex u = 1; u < n; ++u) {
        if (g.degree(u) != k) {
            throw GraphError(GraphErrorKind::NotRegular,
                             "vertex " + std::to_string(u) + " has degree " +
                                 std::to_string(g.degree(u)) + ", vertex 0 has " +
                                 std::to_string(k));
        }
    }
    if (k == 0 || k + 1 == n) {
        throw GraphError(GraphErrorKind::TrivialGraph,
                         "graph is empty or complete (k=" + std::to_string(k) + ")");
    }

    std::optional<std::size_t> lambda, mu;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            std::size_t common = 0;
            for (Vertex w : g.neighbors(u)) common += g.adjacent(v, w);
            auto& slot = g.adjacent(u, v) ? lambda : mu;
            if (!slot) {
                slot = common;
            } else if (*slot != common) {
                throw GraphError(GraphErrorKind::NotStronglyRegular,
                                 "pair (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") has " + std::to_string(common) +
                                     " common neighbours, expected " + std::to_string(*slot),
                                 Edge{u, v});
            }
        }
    }
    const SrgParams p{static_cast<std::int64_t>(n), static_cast<std::int64_t>(k),
                      static_cast<std::int64_t>(lambda.value_or(0)),
                      static_cast<std::int64_t>(mu.value_or(0))};
    if (!check_identity(p)) {
        throw std::logic_error("counted parameters " + p.to_string() +
                               " violate the double-counting identity");
    }
    return p;
}

std::vector<BigInt> trace_walks(const Graph& g, std::size_t max_len) {
    const std::size_t n = g.vertex_count();
    // power[i * n + j] = number of walks of the current length from i to j.
    std::vector<BigInt> power(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) power[i * n + i] = 1;

    std::vector<BigInt> traces;
    traces.reserve(max_len + 1);
    std::vector<BigInt> next(n * n);
    for (std::size_t len = 0;; ++len) {
        BigInt trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += power[i * n + i];
        traces.push_back(trace);
        if (len == max_len) break;
        for (std::size_t i = 0; i < n; ++i) {
            for (Vertex j = 0; j < n; ++j) {
                BigInt& cell = next[i * n + j];
                cell = 0;
                for (Vertex v : g.neighbors(j)) cell += power[i * n + v];
            }
        }
        std::swap(power, next);
    }
    return traces;
}

namespace {

std::vector<Vertex> least_rotation(const std::vector<Vertex>& walk) {
    std::vector<Vertex> best = walk;
    std::vector<Vertex> candidate(walk.size());
    for (std::size_t s = 1; s < walk.size(); ++s) {
        std::rotate_copy(walk.begin(), walk.begin() + s, walk.end(), candidate.begin());
        if (candidate < best) best = candidate;
    }
    return best;
}

}  // namespace

RotationClassStats rotation_classes(const Graph& g, std::uint64_t p, std::uint64_t budget) {
    if (!is_prime(p)) {
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    // Overflow-safe check of n * maxdeg^(p-1) <= budget.
    unsigned __int128 estimate = g.vertex_count();
    for (std::uint64_t i = 1; i < p && estimate <= budget; ++i) estimate *= g.max_degree();
    if (estimate > budget) {
        throw GraphError(GraphErrorKind::BudgetExceeded,
                         "closed walks of length " + std::to_string(p) +
                             " exceed the enumeration budget of " + std::to_string(budget));
    }

    std::map<std::vector<Vertex>, std::uint64_t> classes;
    RotationClassStats stats;
    stats.walk_length = p;

    std::vector<Vertex> walk(p);
    std::vector<std::size_t> cursor(p, 0);
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        walk[0] = start;
        std::size_t depth = 1;  // walk[0..depth) is fixed
        cursor[1] = 0;
        while (depth > 0) {
            if (depth == p) {
                if (g.adjacent(walk[p - 1], start)) {
                    ++stats.total_walks;
                    ++classes[least_rotation(walk)];
                }
                --depth;
                continue;
            }
            const auto& row = g.neighbors(walk[depth - 1]);
            if (cursor[depth] == row.size()) {
                --depth;
                continue;
            }
            walk[depth] = row[cursor[depth]++];
            ++depth;
            if (depth < p) cursor[depth] = 0;
        }
    }
    stats.class_count = classes.size();
    for (const auto& [rep, size] : classes) {
        if (size != p) stats.all_classes_size_p = false;
    }
    return stats;
}

std::uint64_t count_two_step_sequences(const Graph& g, Vertex w0) {
    std::uint64_t count = 0;
    for (Vertex w1 : g.neighbors(w0)) {
        for (Vertex w2 : g.neighbors(w1)) {
            if (w2 != w0 && !g.adjacent(w0, w2)) ++count;
        }
    }
    return count;
}

}  // namespace srg
