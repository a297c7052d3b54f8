#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "commkappa/graph.hpp"
#include "commkappa/group_table.hpp"

namespace commkappa {

/// Commuting graph over a vertex subset of a group: local vertex i is the
/// group element vertices[i]; u ~ v iff the elements commute and differ.
struct CommGraph {
    std::vector<ElementIndex> vertices;
    Graph graph;
    std::string provenance;

    std::size_t order() const noexcept { return vertices.size(); }
};

/// X is sorted and deduplicated; vertex order follows element index.
CommGraph commuting_graph(const GroupTable& g, std::vector<ElementIndex> subset);
/// C(G)
CommGraph commuting_graph(const GroupTable& g);
/// Delta(G) = C(G \ Z(G))
CommGraph noncentral_graph(const GroupTable& g);

/// Group elements of degree |V| - 1.
std::vector<ElementIndex> universal_vertices(const CommGraph& c);

struct NoncommutingSet {
    std::vector<ElementIndex> elements;
    bool maximum = false;
};

struct IndependenceResult {
    std::size_t size = 0;
    NoncommutingSet witness;
    /// false when the graph exceeded the exact cap and only a greedy lower
    /// bound was computed.
    bool exact = true;
};

inline constexpr std::size_t kExactIndependenceCap = 600;

IndependenceResult independence_number(const CommGraph& c, std::size_t exact_cap = kExactIndependenceCap);

/// Whether the intersection of the centralizers of a maximum noncommuting set
/// is abelian. Throws NotMaximumWitness unless `s` is a noncommuting set of
/// size nc(G).
bool centralizer_core_abelian(const GroupTable& g, const NoncommutingSet& s);

/// Delta(G) of an AC-group split into the cliques C_G(x) \ Z(G).
struct CentralizerDecomposition {
    std::size_t group_order = 0;
    std::size_t center_size = 0;
    /// Sorted by size descending, ties by smallest element.
    std::vector<std::vector<ElementIndex>> blocks;

    std::size_t t() const noexcept { return blocks.size(); }
    /// (m_i, multiplicity), m_i descending.
    std::vector<std::pair<std::size_t, std::size_t>> multiset() const;
    /// m_1, ..., m_t, descending.
    std::vector<std::size_t> sizes() const;
};

/// Throws NotACGroup.
CentralizerDecomposition centralizer_decomposition(const GroupTable& g);

/// One "u v" line per edge, vertices as group element indices, u < v.
void write_edge_list(std::ostream& out, const CommGraph& c);

}  // namespace commkappa
