#pragma once

// Shared fixtures and brute-force oracles for the unit tests. The oracles here
// deliberately avoid the library's own algorithms.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "commkappa/graph.hpp"
#include "commkappa/group.hpp"
#include "commkappa/spectra.hpp"

namespace testsupport {

using namespace commkappa;

inline std::vector<GroupTable> small_catalog() {
    std::vector<GroupTable> out;
    out.push_back(families::cyclic(6));
    out.push_back(families::symmetric(3));
    out.push_back(families::dihedral(4));
    out.push_back(families::quaternion(2));
    out.push_back(families::dihedral(5));
    out.push_back(families::dihedral(6));
    out.push_back(families::quaternion(3));
    out.push_back(families::alternating(4));
    out.push_back(families::semidihedral(4));
    out.push_back(families::heisenberg(3));
    out.push_back(families::modular_p3(3));
    out.push_back(families::symmetric(4));
    out.push_back(direct_product(families::dihedral(4), families::cyclic(3)));
    out.push_back(families::metacyclic(8, 2, 5));
    return out;
}

/// Spanning trees by rational Gaussian elimination on the reduced Laplacian.
inline mpz_class oracle_tree_count(const Graph& g) {
    const std::size_t n = g.order();
    if (n <= 1) return 1;
    const std::size_t k = n - 1;
    std::vector<std::vector<mpq_class>> a(k, std::vector<mpq_class>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            a[i][j] = i == j ? mpq_class(static_cast<unsigned long>(g.degree(i + 1)))
                             : mpq_class(g.adjacent(i + 1, j + 1) ? -1 : 0);
    mpq_class det = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && a[p][c] == 0) ++p;
        if (p == k) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < k; ++r) {
            if (a[r][c] == 0) continue;
            const mpq_class f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return mpz_class(det.get_num() / det.get_den());
}

/// det(x I - L) by rational elimination.
inline mpz_class oracle_charpoly_at(const Graph& g, long x) {
    const std::size_t n = g.order();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = i == j ? mpq_class(x) - static_cast<unsigned long>(g.degree(i))
                             : mpq_class(g.adjacent(i, j) ? 1 : 0);
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            const mpq_class f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return mpz_class(det.get_num() / det.get_den());
}

/// Largest independent set by subset enumeration (n <= 20).
inline std::size_t oracle_independence(const Graph& g) {
    const std::size_t n = g.order();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if (mask >> i & 1)
                for (std::size_t j = i + 1; j < n && ok; ++j)
                    if ((mask >> j & 1) && g.adjacent(i, j)) ok = false;
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    return best;
}

inline CliqueExpr random_expr(std::mt19937_64& rng, int depth, std::size_t max_leaf = 4) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 3);
    std::uniform_int_distribution<std::size_t> size(1, max_leaf);
    switch (pick(rng)) {
        case 0: return CliqueExpr::complete(size(rng));
        case 1: return CliqueExpr::empty(size(rng));
        case 2: {
            std::vector<CliqueExpr> parts;
            const int k = std::uniform_int_distribution<int>(1, 3)(rng);
            for (int i = 0; i < k; ++i) parts.push_back(random_expr(rng, depth - 1, max_leaf));
            return CliqueExpr::disjoint_union(std::move(parts));
        }
        default: return CliqueExpr::join(random_expr(rng, depth - 1, max_leaf), random_expr(rng, depth - 1, max_leaf));
    }
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge(rng)) g.add_edge(i, j);
    return g;
}

inline ElementIndex find_label(const GroupTable& g, const std::string& label) {
    for (std::size_t i = 0; i < g.order(); ++i)
        if (g.label(i) == label) return static_cast<ElementIndex>(i);
    throw std::runtime_error("label not found: " + label);
}

}  // namespace testsupport
