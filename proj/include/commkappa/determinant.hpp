#pragma once

#include <cstdint>
#include <span>

#include <Eigen/Core>
#include <gmpxx.h>

#include "commkappa/graph.hpp"

namespace Eigen {
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpz_class NonInteger;
    typedef mpz_class Nested;
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 8
    };
};
}  // namespace Eigen

namespace commkappa {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Laplacian with row and column 0 removed.
template <typename Scalar>
MatrixX<Scalar> reduced_laplacian(const Graph& g) {
    const Eigen::Index k = g.order() == 0 ? 0 : static_cast<Eigen::Index>(g.order()) - 1;
    MatrixX<Scalar> l(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) l(i, j) = Scalar(0);
    for (Eigen::Index i = 0; i < k; ++i) {
        const auto& nb = g.neighbors(static_cast<std::size_t>(i) + 1);
        l(i, i) = Scalar(static_cast<long>(nb.count()));
        for (auto v = nb.find_next(0); v != Bitset::npos; v = nb.find_next(v)) l(i, static_cast<Eigen::Index>(v) - 1) = Scalar(-1);
    }
    return l;
}

/// Fraction-free (Bareiss) determinant. Pivot = first nonzero entry in the
/// column, scanning rows in order.
mpz_class bareiss_determinant(MatrixX<mpz_class> m);

/// Determinant modulo an odd prime p < 2^62. Entries are reduced mod p first.
std::uint64_t determinant_mod(const MatrixX<std::int64_t>& m, std::uint64_t p);

/// The fixed prime sequence of the modular engine: the 256 largest primes below
/// 2^62, descending.
std::span<const std::uint64_t> crt_primes();

}  // namespace commkappa
