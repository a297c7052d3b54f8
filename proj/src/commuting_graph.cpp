#include "commkappa/commuting_graph.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

#include "commkappa/group.hpp"

namespace commkappa {

CommGraph commuting_graph(const GroupTable& g, std::vector<ElementIndex> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (auto x : subset)
        if (x >= g.order()) throw Error(ErrorKind::BadParams, "vertex outside the group");
    CommGraph c;
    c.vertices = std::move(subset);
    c.provenance = "C(" + g.name() + ")";
    const std::size_t m = c.vertices.size();
    c.graph = Graph(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (g.commute(c.vertices[i], c.vertices[j])) c.graph.add_edge(i, j);
    if (m > 0 && c.vertices.front() == 0 && !c.graph.is_connected())
        throw Error(ErrorKind::BadParams, "commuting graph containing the identity must be connected");
    return c;
}

CommGraph commuting_graph(const GroupTable& g) {
    std::vector<ElementIndex> all(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) all[i] = static_cast<ElementIndex>(i);
    return commuting_graph(g, std::move(all));
}

CommGraph noncentral_graph(const GroupTable& g) {
    std::vector<ElementIndex> rest;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (!g.center_set().test(i)) rest.push_back(static_cast<ElementIndex>(i));
    CommGraph c = commuting_graph(g, std::move(rest));
    c.provenance = "Delta(" + g.name() + ")";
    return c;
}

std::vector<ElementIndex> universal_vertices(const CommGraph& c) {
    std::vector<ElementIndex> out;
    for (std::size_t i = 0; i < c.order(); ++i)
        if (c.graph.degree(i) + 1 == c.order()) out.push_back(c.vertices[i]);
    return out;
}

IndependenceResult independence_number(const CommGraph& c, std::size_t exact_cap) {
    IndependenceResult r;
    std::vector<std::size_t> local;
    if (c.order() > exact_cap) {
        r.exact = false;
        local = greedy_independent_set(c.graph);
    } else {
        local = maximum_independent_set(c.graph);
    }
    r.size = local.size();
    for (auto v : local) r.witness.elements.push_back(c.vertices[v]);
    r.witness.maximum = r.exact;
    return r;
}

bool centralizer_core_abelian(const GroupTable& g, const NoncommutingSet& s) {
    for (std::size_t i = 0; i < s.elements.size(); ++i)
        for (std::size_t j = i + 1; j < s.elements.size(); ++j)
            if (g.commute(s.elements[i], s.elements[j]))
                throw Error(ErrorKind::NotMaximumWitness, "witness contains a commuting pair");
    const auto nc = independence_number(commuting_graph(g));
    if (!nc.exact || nc.size != s.elements.size())
        throw Error(ErrorKind::NotMaximumWitness, "witness of size " + std::to_string(s.elements.size()) +
                                                      " but nc(G) = " + std::to_string(nc.size));
    Bitset core(g.order());
    core.set();
    for (auto x : s.elements) core &= g.centralizer_set(x);
    for (auto a = core.find_first(); a != Bitset::npos; a = core.find_next(a))
        if (!core.is_subset_of(g.centralizer_set(a))) return false;
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> CentralizerDecomposition::multiset() const {
    std::map<std::size_t, std::size_t, std::greater<>> counts;
    for (const auto& b : blocks) ++counts[b.size()];
    return {counts.begin(), counts.end()};
}

std::vector<std::size_t> CentralizerDecomposition::sizes() const {
    std::vector<std::size_t> out;
    for (const auto& b : blocks) out.push_back(b.size());
    return out;
}

CentralizerDecomposition centralizer_decomposition(const GroupTable& g) {
    if (g.is_abelian() || !is_ac_group(g)) throw Error(ErrorKind::NotACGroup, g.name() + " is not a nonabelian AC-group");
    CentralizerDecomposition d;
    d.group_order = g.order();
    d.center_size = g.center_set().count();
    std::set<Bitset> seen;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (g.center_set().test(x)) continue;
        const Bitset& c = g.centralizer_set(x);
        if (!seen.insert(c).second) continue;
        std::vector<ElementIndex> block;
        const Bitset noncentral = c - g.center_set();
        for (auto y = noncentral.find_first(); y != Bitset::npos; y = noncentral.find_next(y))
            block.push_back(static_cast<ElementIndex>(y));
        d.blocks.push_back(std::move(block));
    }
    std::stable_sort(d.blocks.begin(), d.blocks.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return d;
}

void write_edge_list(std::ostream& out, const CommGraph& c) {
    for (const auto& [u, v] : c.graph.edges()) out << c.vertices[u] << ' ' << c.vertices[v] << '\n';
}

}  // namespace commkappa
