#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commkappa/bignat.hpp"
#include "commkappa/commuting_graph.hpp"
#include "commkappa/graph.hpp"
#include "commkappa/group_table.hpp"

namespace commkappa {

enum class KappaMethod { MatrixTree, ModularCrt, AcStructure, Spectrum };

std::string to_string(KappaMethod m);

struct EngineRun {
    KappaMethod method;
    BigNat value;
};

struct KappaResult {
    BigNat value;
    KappaMethod method = KappaMethod::MatrixTree;
    /// Only present when computed structurally; product equals value.
    std::optional<Factorization> factors;
    std::vector<EngineRun> engines;
    bool engines_agreed = true;
    /// Set when the graph was disconnected; value is then 0.
    bool disconnected = false;
    std::vector<std::string> notes;
};

inline constexpr std::size_t kMatrixTreeCap = 1000;

/// Fraction-free determinant of the reduced Laplacian. Throws
/// ExactCapExceeded above `cap` vertices.
KappaResult kappa_matrix_tree(const Graph& g, std::size_t cap = kMatrixTreeCap);
KappaResult kappa_matrix_tree(const CommGraph& c, std::size_t cap = kMatrixTreeCap);

/// (n-1) * log2(max degree + 1), rounded up: a Hadamard-type bound on the
/// bit length of any cofactor of the Laplacian.
std::uint64_t default_bit_bound(const Graph& g);

/// Reduced Laplacian determinant modulo enough fixed primes to exceed
/// `bit_bound` bits, then CRT. Residues are computed on up to `threads`
/// workers (0 = hardware concurrency); the fold is sequential. Throws
/// ExactCapExceeded if the fixed prime list cannot cover the bound.
KappaResult kappa_modular(const Graph& g, std::optional<std::uint64_t> bit_bound = std::nullopt, unsigned threads = 0);
KappaResult kappa_modular(const CommGraph& c, std::optional<std::uint64_t> bit_bound = std::nullopt, unsigned threads = 0);

/// n^(m-1) m^(t-1) prod (m_i + m)^(m_i - 1) from the centralizer
/// decomposition. Throws NotACGroup.
KappaResult kappa_ac(const GroupTable& g);

/// Laplacian spectrum of C(G) = K_|Z| v (K_m1 + ... + K_mt), valid for abelian
/// and AC-groups. Throws NotACGroup otherwise.
KappaResult kappa_spectrum(const GroupTable& g);

/// Runs every engine applicable to G (matrix-tree and modular within their
/// caps, AC structure and spectrum on AC-groups); the first one in that order
/// supplies the value and engines_agreed reports whether all of them matched.
KappaResult kappa_cross_check(const GroupTable& g);

/// Abelian: n^(n-2). AC: structural formula, cross-checked by both determinant
/// engines when |G| <= 200. Otherwise matrix-tree up to the exact cap, else the
/// modular engine.
KappaResult kappa_auto(const GroupTable& g);

}  // namespace commkappa
