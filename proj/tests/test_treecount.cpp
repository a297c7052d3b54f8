#include <chrono>
#include <random>

#include "doctest.h"

#include "commkappa/commuting_graph.hpp"
#include "commkappa/determinant.hpp"
#include "commkappa/errors.hpp"
#include "commkappa/group.hpp"
#include "commkappa/spectra.hpp"
#include "commkappa/treecount.hpp"
#include "support.hpp"

using namespace commkappa;

namespace {

BigNat pw(unsigned long b, std::uint64_t e) { return BigNat::pow(BigNat(b), e); }

// Determinant by Leibniz-free cofactor expansion (n <= 7).
mpz_class oracle_det(const MatrixX<std::int64_t>& m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return mpz_class(static_cast<long>(m(0, 0)));
    mpz_class det = 0;
    for (Eigen::Index c = 0; c < n; ++c) {
        MatrixX<std::int64_t> minor(n - 1, n - 1);
        for (Eigen::Index i = 1; i < n; ++i)
            for (Eigen::Index j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = m(i, j);
        const mpz_class term = mpz_class(static_cast<long>(m(0, c))) * oracle_det(minor);
        det += (c % 2 == 0) ? term : mpz_class(-term);
    }
    return det;
}

}  // namespace

TEST_CASE("prime sequence") {
    const auto primes = crt_primes();
    REQUIRE(primes.size() == 256);
    CHECK(primes[0] == 4611686018427387847ULL);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        CHECK(primes[i] < (std::uint64_t(1) << 62));
        CHECK(primes[i] > (std::uint64_t(1) << 61));
        if (i) CHECK(primes[i] < primes[i - 1]);
        CHECK(mpz_probab_prime_p(mpz_class(static_cast<unsigned long>(primes[i])).get_mpz_t(), 30) > 0);
    }
}

TEST_CASE("determinant engines against cofactor expansion") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> entry(-9, 9);
    for (int trial = 0; trial < 300; ++trial) {
        const Eigen::Index n = trial % 7;
        MatrixX<std::int64_t> m(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) m(i, j) = trial % 5 == 0 && j == 0 ? 0 : entry(rng);
        const mpz_class expect = oracle_det(m);
        MatrixX<mpz_class> big(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) big(i, j) = static_cast<long>(m(i, j));
        CHECK(bareiss_determinant(big) == expect);
        for (std::uint64_t p : {crt_primes()[0], crt_primes()[17], std::uint64_t(1000003)}) {
            mpz_class r;
            mpz_fdiv_r_ui(r.get_mpz_t(), expect.get_mpz_t(), p);
            CHECK(determinant_mod(m, p) == r.get_ui());
        }
    }
}

TEST_CASE("matrix-tree engine") {
    CHECK(kappa_matrix_tree(Graph::complete(4)).value == BigNat(16UL));
    CHECK(kappa_matrix_tree(Graph::complete(1)).value == BigNat(1UL));
    CHECK(kappa_matrix_tree(commuting_graph(families::symmetric(3))).value == BigNat(3UL));
    CHECK(kappa_matrix_tree(commuting_graph(families::dihedral(4))).value == BigNat(2048UL));

    const auto d = kappa_matrix_tree(Graph(3));
    CHECK(d.disconnected);
    CHECK(d.value.is_zero());
    CHECK_THROWS_AS(kappa_matrix_tree(Graph::complete(12), 10), Error);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = testsupport::random_graph(rng, 2 + trial % 14, 0.3 + 0.05 * (trial % 10));
        const auto r = kappa_matrix_tree(g);
        CHECK(r.value.mpz() == testsupport::oracle_tree_count(g));
        CHECK(kappa_modular(g).value == r.value);
    }
}

TEST_CASE("modular engine") {
    CHECK(kappa_modular(Graph::complete(4)).value == BigNat(16UL));
    CHECK(kappa_modular(Graph::complete(4), 1).value == BigNat(16UL));
    CHECK(kappa_modular(Graph(2)).disconnected);

    const CommGraph a5 = commuting_graph(families::alternating(5));
    const BigNat expect = pw(2, 20) * pw(3, 10) * pw(5, 18);
    CHECK(kappa_modular(a5).value == expect);
    CHECK(kappa_matrix_tree(a5).value == expect);
    // Extra primes beyond the bound never change the answer; residues computed
    // on several workers fold to the same value.
    for (std::uint64_t bits : {200u, 500u, 2000u}) CHECK(kappa_modular(a5, bits).value == expect);
    CHECK(kappa_modular(a5, 2000, 4).value == expect);
    CHECK_THROWS_AS(kappa_modular(a5, 100000), Error);
}

TEST_CASE("modular engine on L2(8)") {
    const GroupTable g = families::l2(3);
    REQUIRE(g.order() == 504);
    const auto start = std::chrono::steady_clock::now();
    const auto r = kappa_modular(commuting_graph(g));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    MESSAGE("L2(8) modular engine: " << secs << " s");
    // Evaluate q^((q-2)(q+1)) (q-1)^((q-3)q(q+1)/2) (q+1)^((q-1)^2 q/2) at q = 8.
    const std::uint64_t q = 8;
    const BigNat closed = pw(q, (q - 2) * (q + 1)) * pw(q - 1, (q - 3) * q * (q + 1) / 2) * pw(q + 1, (q - 1) * (q - 1) * q / 2);
    CHECK(r.value == closed);
    CHECK(r.value == pw(2, 162) * pw(3, 392) * pw(7, 180));
    CHECK(kappa_ac(g).value == closed);
}

TEST_CASE("structural AC engine") {
    const auto q8 = kappa_ac(families::quaternion(2));
    CHECK(q8.value == BigNat(2048UL));
    REQUIRE(q8.factors);
    CHECK(format_factorization(*q8.factors) == "2^11");
    CHECK(kappa_ac(families::semidihedral(4)).value == pw(2, 31));
    const auto gl23 = kappa_ac(families::gl2(3));
    CHECK(format_factorization(*gl23.factors) == "2^85*3^13");
    CHECK(kappa_matrix_tree(commuting_graph(families::gl2(3))).value == gl23.value);
    CHECK_THROWS_AS(kappa_ac(families::symmetric(4)), Error);
    CHECK_THROWS_AS(kappa_ac(families::cyclic(4)), Error);
}

TEST_CASE("dispatcher and engine agreement over the catalog") {
    CHECK(kappa_auto(families::cyclic(6)).value == BigNat(1296UL));
    CHECK(kappa_auto(families::dihedral(5)).value == BigNat(125UL));
    const auto d12 = kappa_auto(families::dihedral(6));
    CHECK(d12.value == BigNat(1327104UL));
    CHECK(d12.engines.size() == 3);
    CHECK(d12.engines_agreed);
    for (const auto& g : testsupport::small_catalog()) {
        const auto r = kappa_auto(g);
        CHECK(r.engines_agreed);
        CHECK(r.value.mpz() == testsupport::oracle_tree_count(commuting_graph(g).graph));
        if (r.factors) CHECK(evaluate(*r.factors) == r.value);
        if (!g.is_abelian()) {
            const std::uint64_t m = center(g).order();
            CHECK(r.value.divisible_by(BigNat::pow(BigNat(g.order()), m - 1)));
        }
    }
    const auto s4 = kappa_auto(families::symmetric(4));
    CHECK(s4.method == KappaMethod::MatrixTree);
    CHECK(s4.engines.size() == 2);
}

TEST_CASE("Frobenius product on dihedral groups") {
    // D_2k, k odd: kernel Z_k, complement Z_2.
    for (std::uint64_t k : {5u, 7u}) {
        const BigNat kernel = kappa_auto(families::cyclic(k)).value;
        const BigNat complement = kappa_auto(families::cyclic(2)).value;
        CHECK(kappa_auto(families::dihedral(k)).value == kernel * BigNat::pow(complement, k));
    }
    CHECK(kappa_auto(families::dihedral(7)).value == pw(7, 5));
}
