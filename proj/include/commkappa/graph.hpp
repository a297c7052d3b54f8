#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "commkappa/group_table.hpp"

namespace commkappa {

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n, Bitset(n)) {}

    std::size_t order() const noexcept { return adj_.size(); }
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
    const Bitset& neighbors(std::size_t u) const { return adj_[u]; }
    std::size_t degree(std::size_t u) const { return adj_[u].count(); }
    std::size_t edge_count() const;
    std::size_t component_count() const;
    bool is_connected() const { return order() > 0 && component_count() == 1; }
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    static Graph complete(std::size_t n);
    Graph complement() const;

private:
    std::vector<Bitset> adj_;
};

/// Maximum independent set by branch and bound (max clique in the complement
/// with greedy-colouring bounds and degree-sorted vertex order). Returns vertex
/// indices in increasing order.
std::vector<std::size_t> maximum_independent_set(const Graph& g);

/// Greedy maximal independent set, minimum-degree first.
std::vector<std::size_t> greedy_independent_set(const Graph& g);

}  // namespace commkappa
