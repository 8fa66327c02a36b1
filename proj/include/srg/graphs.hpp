#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srg/bigint.hpp"
#include "srg/core.hpp"

namespace srg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph. Immutable after construction.
class Graph {
public:
    Graph() = default;
    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    /// Duplicate edges are merged.
    Graph(std::size_t vertex_count, const std::vector<Edge>& edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    bool adjacent(Vertex u, Vertex v) const { return matrix_[u * n_ + v] != 0; }
    const std::vector<Vertex>& neighbors(Vertex u) const { return rows_[u]; }
    std::size_t degree(Vertex u) const { return rows_[u].size(); }
    std::size_t max_degree() const;

    Graph complement() const;
    std::vector<Edge> edges() const;

    /// "n m" followed by m lines "u v", 0-based, u < v.
    void write_edge_list(std::ostream& os) const;
    static Graph read_edge_list(std::istream& is);

private:
    std::size_t n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::uint8_t> matrix_;
    std::vector<std::vector<Vertex>> rows_;
};

enum class GraphErrorKind {
    InvalidFamilyParameter,
    NotRegular,
    NotStronglyRegular,
    TrivialGraph,
    BudgetExceeded,
};

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorKind kind, const std::string& what,
               std::optional<Edge> witness = std::nullopt)
        : std::runtime_error(what), kind_(kind), witness_(witness) {}

    GraphErrorKind kind() const { return kind_; }
    /// Vertex pair whose common-neighbour count breaks strong regularity.
    const std::optional<Edge>& witness() const { return witness_; }

private:
    GraphErrorKind kind_;
    std::optional<Edge> witness_;
};

/// Named fixture graph. Text form: petersen, cycle5, paley:Q, triangular:M,
/// lattice:M, complement:<spec>.
struct FamilySpec {
    enum class Kind { Petersen, Paley, Triangular, Lattice, Cycle5, Complement };

    Kind kind = Kind::Petersen;
    std::int64_t param = 0;
    std::shared_ptr<const FamilySpec> inner;

    static FamilySpec petersen() { return {Kind::Petersen, 0, nullptr}; }
    static FamilySpec cycle5() { return {Kind::Cycle5, 0, nullptr}; }
    static FamilySpec paley(std::int64_t q) { return {Kind::Paley, q, nullptr}; }
    static FamilySpec triangular(std::int64_t m) { return {Kind::Triangular, m, nullptr}; }
    static FamilySpec lattice(std::int64_t m) { return {Kind::Lattice, m, nullptr}; }
    static FamilySpec complement_of(FamilySpec s) {
        return {Kind::Complement, 0, std::make_shared<const FamilySpec>(std::move(s))};
    }

    /// Throws GraphError(InvalidFamilyParameter) on unknown or malformed text.
    static FamilySpec parse(std::string_view text);
    std::string to_string() const;
};

struct RotationClassStats {
    std::uint64_t walk_length = 0;
    std::uint64_t total_walks = 0;
    std::uint64_t class_count = 0;
    bool all_classes_size_p = true;
};

inline constexpr std::uint64_t kDefaultWalkBudget = 10'000'000;

/// Throws GraphError(InvalidFamilyParameter) when the parameters are invalid.
Graph build_family(const FamilySpec& spec);

/// Recovers (n, k, lambda, mu) by exhaustive common-neighbour counting.
/// Throws GraphError: NotRegular, TrivialGraph (k = 0 or k = n - 1), or
/// NotStronglyRegular with a witness pair.
SrgParams verify_srg(const Graph& g);

/// Number of closed walks of each length 0..max_len (traces of adjacency powers).
std::vector<BigInt> trace_walks(const Graph& g, std::size_t max_len);

/// Enumerates all closed walks of prime length p and groups them by cyclic
/// rotation. Throws GraphError(BudgetExceeded) if n * maxdeg^(p-1) > budget,
/// std::invalid_argument if p is not prime.
RotationClassStats rotation_classes(const Graph& g, std::uint64_t p,
                                    std::uint64_t budget = kDefaultWalkBudget);

/// Counts vertex pairs (w1, w2) with w0 ~ w1, w1 ~ w2, w2 != w0 and w2 not
/// adjacent to w0. Choosing w2 first gives (n-1-k) mu; choosing w1 first gives
/// k (k-1-lambda).
std::uint64_t count_two_step_sequences(const Graph& g, Vertex w0);

}  // namespace srg
