#include <chrono>
#include <functional>

#include "doctest.h"

#include "commkappa/commuting_graph.hpp"
#include "commkappa/errors.hpp"
#include "commkappa/group.hpp"
#include "commkappa/partitions.hpp"
#include "commkappa/treecount.hpp"
#include "support.hpp"

using namespace commkappa;
using testsupport::find_label;

namespace {

std::vector<ElementIndex> minus_identity(const Subgroup& s) { return {s.elements.begin() + 1, s.elements.end()}; }

// Minimum n by brute force over set partitions of G \ A (orders <= 8).
std::size_t oracle_min_blocks(const GroupTable& g) {
    std::size_t best = SIZE_MAX;
    const std::size_t n = g.order();
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {  // A contains 0
        std::vector<ElementIndex> a;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) a.push_back(static_cast<ElementIndex>(i));
        if (!is_subgroup(g, a) || !is_abelian_set(g, a)) continue;
        std::vector<ElementIndex> rest;
        for (std::size_t i = 0; i < n; ++i)
            if (!(mask >> i & 1)) rest.push_back(static_cast<ElementIndex>(i));
        // Restricted growth strings.
        std::vector<std::size_t> label(rest.size(), 0);
        std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t used) {
            if (i == rest.size()) {
                std::vector<std::vector<ElementIndex>> blocks(used);
                for (std::size_t j = 0; j < rest.size(); ++j) blocks[label[j]].push_back(rest[j]);
                for (const auto& b : blocks)
                    if (b.size() < 2 || !is_abelian_set(g, b)) return;
                if (used >= 2) best = std::min(best, used);
                return;
            }
            for (std::size_t l = 0; l <= used; ++l) {
                label[i] = l;
                go(i + 1, std::max(used, l + 1));
            }
        };
        go(0, 0);
    }
    return best;
}

}  // namespace

TEST_CASE("verify_partition") {
    const GroupTable q8 = families::quaternion(2);
    const ElementIndex i = find_label(q8, "x^1 y^0"), mi = find_label(q8, "x^3 y^0");
    const ElementIndex j = find_label(q8, "x^0 y^1"), mj = find_label(q8, "x^2 y^1");
    const ElementIndex k = find_label(q8, "x^1 y^1"), mk = find_label(q8, "x^3 y^1");
    const ElementIndex m1 = find_label(q8, "x^2 y^0");
    PartitionCertificate ok{{0, i, m1, mi}, {{j, mj}, {k, mk}}, false};
    CHECK(verify_partition(q8, ok).ok);

    PartitionCertificate overlap{{0, i, m1, mi}, {{j, mj}, {k, mk, j}}, false};
    CHECK(verify_partition(q8, overlap).violation.starts_with("overlap"));
    PartitionCertificate gap{{0, i, m1, mi}, {{j, mj}, {k}}, false};
    CHECK(verify_partition(q8, gap).violation.starts_with("non-cover"));
    PartitionCertificate not_sub{{0, i, m1, j}, {{mi, mj}, {k, mk}}, false};
    CHECK(verify_partition(q8, not_sub).violation == "A is not a subgroup");
    PartitionCertificate not_comm{{0, m1}, {{i, mi}, {j, mj, k, mk}}, false};
    CHECK(verify_partition(q8, not_comm).violation == "block 2 is not a commuting set");
    PartitionCertificate small{{0, m1, i, mi}, {{j, mj}, {k}, {mk}}, false};
    CHECK(verify_partition(q8, small).violation == "block 2 has fewer than 2 elements");
    PartitionCertificate one{{0, m1}, {{i, mi, j, mj, k, mk}}, false};
    CHECK_FALSE(verify_partition(q8, one).ok);

    // S3: the reflections pairwise do not commute.
    const GroupTable s3 = families::symmetric(3);
    std::vector<ElementIndex> rot, refl;
    for (std::size_t x = 0; x < 6; ++x) (element_order(s3, x) == 2 ? refl : rot).push_back(static_cast<ElementIndex>(x));
    CHECK_FALSE(verify_partition(s3, {rot, {{refl[0], refl[1]}, {refl[2]}}, false}).ok);
    CHECK_FALSE(verify_partition(s3, {rot, {{refl[0], refl[1], refl[2]}}, false}).ok);

    // A5: one Sylow-5 as A, all other Sylow subgroups minus the identity.
    const GroupTable a5 = families::alternating(5);
    PartitionCertificate sylow;
    const auto s5 = sylow_subgroups(a5, 5), s3s = sylow_subgroups(a5, 3), s2 = sylow_subgroups(a5, 2);
    sylow.A = s5[0].elements;
    for (std::size_t t = 1; t < s5.size(); ++t) sylow.blocks.push_back(minus_identity(s5[t]));
    for (const auto& s : s3s) sylow.blocks.push_back(minus_identity(s));
    for (const auto& s : s2) sylow.blocks.push_back(minus_identity(s));
    CHECK(sylow.n() == 20);
    CHECK(verify_partition(a5, sylow).ok);
}

TEST_CASE("coset partitions") {
    const auto q8 = coset_partition(families::quaternion(2));
    CHECK(q8.n() == 3);
    CHECK(q8.verified);
    for (const auto& b : q8.blocks) CHECK(b.size() == 2);
    const auto d12 = coset_partition(families::dihedral(6));
    CHECK(d12.n() == 5);
    CHECK_THROWS_AS(coset_partition(families::symmetric(3)), Error);
    try {
        coset_partition(families::symmetric(3));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CenterTooSmall);
    }
    try {
        coset_partition(families::cyclic(2));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IndexTooSmall);
    }
    for (const auto& g : testsupport::small_catalog()) {
        const std::size_t z = center(g).order();
        if (z < 2 || g.order() / z < 4) continue;
        CHECK(coset_partition(g).verified);
    }
}

TEST_CASE("block lower bound") {
    CHECK(lower_bound_blocks(families::alternating(5)) == 11);
    CHECK(lower_bound_blocks(families::l2(3)) == 55);
    CHECK(lower_bound_blocks(families::gl2(3)) == 5);
}

TEST_CASE("abelian subgroups") {
    const auto q8 = abelian_subgroups(families::quaternion(2));
    CHECK(q8.size() == 5);  // 1, Z, and three cyclic of order 4
    const auto s3 = abelian_subgroups(families::symmetric(3));
    CHECK(s3.size() == 5);
    const auto a4 = abelian_subgroups(families::alternating(4));
    CHECK(a4.size() == 1 + 3 + 4 + 1);
    const auto mas = maximal_abelian_subgroups(families::alternating(5));
    CHECK(mas.size() == 21);
    CHECK(mas.front().order() == 5);
}

TEST_CASE("exact search") {
    const auto s3 = find_partition(families::symmetric(3), SearchMode::Exact);
    CHECK_FALSE(s3.certificate);
    CHECK(s3.conclusive);

    const GroupTable q8 = families::quaternion(2);
    const auto r = find_partition(q8, SearchMode::Exact);
    REQUIRE(r.certificate);
    CHECK(r.certificate->n() == 2);
    CHECK(r.certificate->A.size() == 4);
    CHECK(r.certificate->A[1] == find_label(q8, "x^1 y^0"));

    CHECK_THROWS_AS(find_partition(families::dihedral(13), SearchMode::Exact), Error);

    for (const auto& g : testsupport::small_catalog()) {
        if (g.order() > 8) continue;
        const auto res = find_partition(g, SearchMode::Exact);
        const std::size_t oracle = oracle_min_blocks(g);
        if (oracle == SIZE_MAX) {
            CHECK_FALSE(res.certificate);
        } else {
            REQUIRE(res.certificate);
            CHECK(res.certificate->n() == oracle);
        }
    }
}

TEST_CASE("heuristic search") {
    const auto a5 = find_partition(families::alternating(5), SearchMode::Heuristic, 20);
    REQUIRE(a5.certificate);
    CHECK(a5.certificate->n() == 20);
    CHECK(a5.certificate->A.size() == 5);
    CHECK(a5.certificate->verified);
    const auto tight = find_partition(families::alternating(5), SearchMode::Heuristic, 10);
    CHECK_FALSE(tight.certificate);
    CHECK_FALSE(tight.conclusive);
    const auto s3 = find_partition(families::symmetric(3), SearchMode::Heuristic);
    CHECK_FALSE(s3.conclusive);
}

TEST_CASE("2- and 3-abelian classifiers") {
    const auto q8 = classify_2_abelian(families::quaternion(2));
    REQUIRE(q8);
    CHECK(q8->partition.A.size() == 4);
    CHECK(q8->Q.order() == 1);
    const auto d8z3 = classify_2_abelian(direct_product(families::dihedral(4), families::cyclic(3)));
    REQUIRE(d8z3);
    CHECK(d8z3->P.order() == 8);
    CHECK(d8z3->Q.order() == 3);
    CHECK_FALSE(classify_2_abelian(families::dihedral(6)));
    CHECK_THROWS_AS(classify_2_abelian(families::cyclic(4)), Error);

    CHECK(classify_3_abelian(families::quaternion(2))->kind == ThreeAbelianCase::Klein);
    CHECK(classify_3_abelian(families::dihedral(6))->kind == ThreeAbelianCase::S3);
    CHECK(classify_3_abelian(families::heisenberg(3))->kind == ThreeAbelianCase::Z3xZ3);
    CHECK_FALSE(classify_3_abelian(families::symmetric(3)));
    CHECK_FALSE(classify_3_abelian(families::symmetric(4)));
    for (const auto& g : testsupport::small_catalog()) {
        if (g.is_abelian()) continue;
        if (const auto w = classify_3_abelian(g)) {
            CHECK(w->partition.verified);
            CHECK(w->partition.n() == 3);
        }
    }
}

TEST_CASE("classifiers agree with exhaustive search") {
    const auto start = std::chrono::steady_clock::now();
    for (const auto& g : testsupport::small_catalog()) {
        if (g.is_abelian() || g.order() > 24) continue;
        const auto r = find_partition(g, SearchMode::Exact);
        const std::size_t n = r.certificate ? r.certificate->n() : SIZE_MAX;
        const bool two = classify_2_abelian(g).has_value();
        const bool three = classify_3_abelian(g).has_value();
        INFO(g.name());
        CHECK((n == 2) == two);
        CHECK((n <= 3) == (two || three));
        if (r.certificate) {
            CHECK(verify_partition(g, *r.certificate).ok);
            CHECK(n >= lower_bound_blocks(g));
            CHECK(independence_number(commuting_graph(g)).size <= n + 1);
            CHECK(kappa_auto(g).value >= partition_kappa_bound(*r.certificate));
        }
        if (two) {
            const std::uint64_t m = center(g).order();
            CHECK(kappa_auto(g).value == BigNat::pow(2, 5 * m - 5) * BigNat::pow(m, 4 * m - 2));
        }
    }
    MESSAGE("exhaustive partition checks: "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s");
}

TEST_CASE("Frobenius groups with empty complement graph") {
    const auto s3 = frobenius_empty_complement(families::symmetric(3));
    REQUIRE(s3);
    CHECK(s3->H.order() == 3);
    CHECK(s3->kappa == BigNat(3UL));
    const auto d10 = frobenius_empty_complement(families::dihedral(5));
    REQUIRE(d10);
    CHECK(d10->kappa == BigNat(125UL));
    CHECK(d10->kappa == kappa_auto(families::dihedral(5)).value);
    CHECK(frobenius_empty_complement(families::dihedral(7))->kappa == kappa_auto(families::dihedral(7)).value);
    CHECK_FALSE(frobenius_empty_complement(families::quaternion(2)));
    CHECK_FALSE(frobenius_empty_complement(families::alternating(4)));
    CHECK_FALSE(frobenius_empty_complement(families::dihedral(4)));
}
