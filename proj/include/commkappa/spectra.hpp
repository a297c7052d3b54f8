#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "commkappa/bignat.hpp"
#include "commkappa/graph.hpp"

namespace commkappa {

/// Graph expression over complete graphs K_s and empty graphs E_s closed
/// under disjoint union and join. Text form: K5, E3, U(e1,e2,...), J(e1,e2).
class CliqueExpr {
public:
    enum class Kind { Complete, Empty, Union, Join };

    static CliqueExpr complete(std::size_t s);
    static CliqueExpr empty(std::size_t s);
    static CliqueExpr disjoint_union(std::vector<CliqueExpr> parts);
    static CliqueExpr join(CliqueExpr left, CliqueExpr right);
    /// Throws ParseError with the offending offset.
    static CliqueExpr parse(std::string_view text);

    Kind kind() const noexcept { return node_->kind; }
    std::size_t vertex_count() const noexcept { return node_->vertices; }
    /// Leaf size; 0 for internal nodes.
    std::size_t leaf_size() const noexcept { return node_->leaf; }
    const std::vector<CliqueExpr>& children() const noexcept { return node_->children; }

    std::string to_string() const;
    /// The explicit graph; vertices numbered left to right through the leaves.
    Graph realize() const;

private:
    struct Node {
        Kind kind;
        std::size_t leaf = 0;
        std::size_t vertices = 0;
        std::vector<CliqueExpr> children;
    };
    explicit CliqueExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Integral Laplacian spectrum as eigenvalue -> multiplicity.
struct LapSpectrum {
    std::map<std::uint64_t, std::uint64_t, std::greater<>> multiplicity;
    std::uint64_t n = 0;

    std::uint64_t zero_multiplicity() const;
    std::uint64_t largest() const;
    /// "6^1 3^1 1^3 0^1", eigenvalues descending.
    std::string to_string() const;
    /// Eigenvalues descending with repetition.
    std::vector<std::uint64_t> values() const;
    friend bool operator==(const LapSpectrum&, const LapSpectrum&) = default;
};

LapSpectrum make_spectrum(const std::vector<std::uint64_t>& values);

LapSpectrum spectrum(const CliqueExpr& e);

/// Product of the nonzero eigenvalues over n; 0 for disconnected spectra.
/// Throws NonIntegerResult if the division is inexact.
BigNat kappa_from_spectrum(const LapSpectrum& s);

struct SigmaValue {
    /// sigma(Gamma; -m) = det(-m I - L)
    mpz_class sigma;
    /// (mu_1 + m)...(mu_{n-1} + m), one zero eigenvalue dropped.
    BigNat shifted_product;
    /// The same product taken over all n eigenvalues, i.e. |sigma(Gamma; -m)|.
    BigNat full_product;
};

/// Requires m >= 1 and a spectrum with at least one zero eigenvalue.
SigmaValue sigma_eval(const LapSpectrum& s, std::uint64_t m);

/// kappa(G) for a centerless group from the spectrum of Delta(G): the product
/// of (mu + 1) over all eigenvalues but one zero.
BigNat kappa_centerless(const LapSpectrum& delta);

/// kappa(K_m join Delta) = n^(m-1) (mu_1 + m)...(mu_{nu-1} + m), n = m + nu.
BigNat kappa_with_center(const LapSpectrum& delta, std::uint64_t m);

}  // namespace commkappa
