#include <numeric>

#include "doctest.h"

#include "commkappa/field_matrix.hpp"
#include "commkappa/group.hpp"
#include "commkappa/perm.hpp"
#include "support.hpp"

using namespace commkappa;

using testsupport::find_label;
using testsupport::small_catalog;

TEST_CASE("closure orders of basic generator sets") {
    const GroupTable s3 = generate_group(std::vector<Perm>{Perm::parse(3, "(0 1)"), Perm::parse(3, "(0 1 2)")});
    CHECK(s3.order() == 6);
    CHECK(s3.label(0) == "()");

    const GroupTable a5 = generate_group(std::vector<Perm>{Perm::parse(5, "(0 1 2 3 4)"), Perm::parse(5, "(0 1 2)")});
    CHECK(a5.order() == 60);

    // Both unitriangular generators have entries in the prime subfield, so over
    // GF(4) they only reach SL(2,2) = S3.
    const Field f4 = build_field(2, 2);
    const GroupTable sl22 = generate_group(std::vector<Mat2>{Mat2(f4, {1, 1, 0, 1}), Mat2(f4, {1, 0, 1, 1})});
    CHECK(sl22.order() == 6);
    // Adding a transvection with a non-prime-field entry gives all of L2(4).
    const FieldElem w = f4.primitive_element();
    const GroupTable l24 = generate_group(
        std::vector<Mat2>{Mat2(f4, {1, 1, 0, 1}), Mat2(f4, {1, 0, 1, 1}), Mat2(f4, {1, w, 0, 1})});
    CHECK(l24.order() == 60);
}

TEST_CASE("closure errors") {
    std::vector<Perm> gens{Perm::parse(6, "(0 1)"), Perm::parse(6, "(0 1 2 3 4 5)")};
    CHECK_THROWS_AS(generate_group(gens, 100), Error);
    const Field f3 = build_field(3, 1);
    try {
        generate_group(std::vector<Mat2>{Mat2(f3, {1, 1, 0, 1}), Mat2(f3, {1, 1, 1, 1})});
        FAIL("singular generator accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidGenerator);
        CHECK(std::string(e.what()).find("generator 1") != std::string::npos);
    }
}

TEST_CASE("named families have their advertised orders") {
    CHECK(families::quaternion(2).order() == 8);
    CHECK(families::l2(2).order() == 60);
    CHECK(families::l2(3).order() == 504);
    CHECK(families::gl2(3).order() == 48);
    CHECK(families::gl2(4).order() == 180);
    CHECK(families::gl2(5).order() == 480);
    CHECK(families::semidihedral(4).order() == 16);
    CHECK(families::heisenberg(3).order() == 27);
    CHECK(families::modular_p3(3).order() == 27);
    CHECK(families::symmetric(5).order() == 120);
    CHECK(families::alternating(6).order() == 360);
    CHECK(families::cyclic(1).order() == 1);
    CHECK(direct_product(families::dihedral(4), families::cyclic(3)).order() == 24);
    CHECK_THROWS_AS(families::metacyclic(5, 2, 2), Error);
    CHECK_THROWS_AS(families::dihedral(2), Error);
    CHECK_THROWS_AS(families::semidihedral(3), Error);
    CHECK_THROWS_AS(parse_family("nope"), Error);

    FamilySpec spec{Family::DirectProduct, {}, {{Family::Dihedral, {{"k", 4}}, {}}, {Family::Cyclic, {{"n", 3}}, {}}}};
    CHECK(make_family(spec).order() == 24);
    CHECK(spec.describe() == "direct_product(dihedral(k=4),cyclic(n=3))");
}

TEST_CASE("quaternion presentation relations") {
    const GroupTable q8 = families::quaternion(2);
    const ElementIndex x = find_label(q8, "x^1 y^0");
    const ElementIndex y = find_label(q8, "x^0 y^1");
    CHECK(element_order(q8, x) == 4);
    CHECK(q8.mul(y, y) == q8.mul(x, x));
    CHECK(q8.conj(x, q8.inv(y)) == q8.inv(x));  // y x y^-1
}

TEST_CASE("profiles") {
    const GroupProfile a5 = profile(families::l2(2));
    CHECK(a5.class_count == 5);
    CHECK(a5.center_size() == 1);
    CHECK(a5.max_orders == std::set<std::size_t>{2, 3, 5});
    CHECK(a5.is_ac);

    const GroupProfile gl = profile(families::gl2(3));
    CHECK(gl.class_count == 8);
    CHECK(gl.center_size() == 2);

    const GroupProfile q8 = profile(families::quaternion(2));
    CHECK(q8.center_size() == 2);
    CHECK(q8.centralizer_count == 4);
    CHECK(q8.class_sizes == std::set<std::size_t>{1, 2});
    CHECK(q8.element_orders == std::set<std::size_t>{1, 2, 4});

    // k(L2(q)) = q + 1, k(GL(2,q)) = q^2 - 1
    CHECK(profile(families::l2(3)).class_count == 9);
    CHECK(profile(families::gl2(4)).class_count == 15);
}

TEST_CASE("centralizers") {
    const GroupTable q8 = families::quaternion(2);
    CHECK(centralizer(q8, 0).order() == 8);
    const ElementIndex i = find_label(q8, "x^1 y^0");
    const Subgroup ci = centralizer(q8, i);
    CHECK(ci.order() == 4);
    CHECK(ci.abelian);
    for (std::size_t k = 0; k < 4; ++k) {
        ElementIndex p = 0;
        for (std::size_t s = 0; s < k; ++s) p = q8.mul(p, i);
        CHECK(ci.contains(p));
    }

    const GroupTable d10 = families::dihedral(5);
    const ElementIndex refl = find_label(d10, "x^0 y^1");
    CHECK(centralizer(d10, refl).order() == 2);
}

TEST_CASE("quotients and small isomorphism fingerprints") {
    const GroupTable q8 = families::quaternion(2);
    const GroupTable q8z = quotient(q8, center(q8));
    CHECK(q8z.order() == 4);
    for (std::size_t x = 1; x < 4; ++x) CHECK(element_order(q8z, static_cast<ElementIndex>(x)) == 2);
    CHECK(is_isomorphic_small(q8z, SmallGroup::Z2xZ2));
    CHECK_FALSE(is_isomorphic_small(q8z, SmallGroup::Z4));

    const GroupTable d12 = families::dihedral(6);
    const GroupTable d12z = quotient(d12, center(d12));
    CHECK(d12z.order() == 6);
    CHECK_FALSE(d12z.is_abelian());
    CHECK(is_isomorphic_small(d12z, SmallGroup::S3));

    CHECK(quotient(d12, make_subgroup(d12, [&] {
              std::vector<ElementIndex> all(d12.order());
              std::iota(all.begin(), all.end(), 0);
              return all;
          }())).order() == 1);

    CHECK_FALSE(is_isomorphic_small(families::cyclic(4), SmallGroup::Z2xZ2));
    CHECK(is_isomorphic_small(families::cyclic(4), SmallGroup::Z4));
    CHECK(is_isomorphic_small(families::cyclic(9), SmallGroup::Z9));
    CHECK(is_isomorphic_small(quotient(families::heisenberg(3), center(families::heisenberg(3))), SmallGroup::Z3xZ3));
    CHECK_THROWS_AS(is_isomorphic_small(d12, SmallGroup::S3), Error);

    const GroupTable s3 = families::symmetric(3);
    const ElementIndex t = find_label(s3, "(0 1)");
    CHECK_THROWS_AS(quotient(s3, make_subgroup(s3, {0, t})), Error);
}

TEST_CASE("Sylow subgroups") {
    const GroupTable a5 = families::alternating(5);
    const auto s5 = sylow_subgroups(a5, 5);
    CHECK(s5.size() == 6);
    for (const auto& s : s5) CHECK(s.order() == 5);
    const auto s3 = sylow_subgroups(a5, 3);
    CHECK(s3.size() == 10);
    const auto s2 = sylow_subgroups(a5, 2);
    CHECK(s2.size() == 5);
    CHECK(s2.front().order() == 4);

    const auto z12 = sylow_subgroups(families::cyclic(12), 2);
    CHECK(z12.size() == 1);
    CHECK(z12.front().order() == 4);
    CHECK_THROWS_AS(sylow_subgroups(a5, 7), Error);

    for (const auto& g : small_catalog()) {
        for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
            if (g.order() % p != 0) continue;
            CHECK(sylow_subgroups(g, p).size() % p == 1);
        }
    }
}

TEST_CASE("AC and TI predicates") {
    CHECK(is_ac_group(families::quaternion(2)));
    CHECK(is_ac_group(families::l2(2)));
    // C_S4((0 1)) = <(0 1), (2 3)> is abelian; the failure comes from the
    // double transposition, whose centralizer is D8.
    CHECK_FALSE(is_ac_group(families::symmetric(4)));

    const GroupTable l24 = families::l2(2);
    CHECK(is_ti_subgroup(l24, sylow_subgroups(l24, 2).front()));
    const GroupTable s4 = families::symmetric(4);
    // Distinct subgroups of prime order always meet trivially.
    CHECK(is_ti_subgroup(s4, make_subgroup(s4, {0, find_label(s4, "(0 1)")})));
    // Sylow 2-subgroups of S4 are D8s sharing the normal Klein four-group.
    CHECK_FALSE(is_ti_subgroup(s4, sylow_subgroups(s4, 2).front()));
    for (const auto& g : small_catalog()) CHECK(is_ti_subgroup(g, center(g)));
}

TEST_CASE("L2(2^k) Sylow-2 structure") {
    for (long long k : {2, 3}) {
        const GroupTable g = families::l2(k);
        const std::size_t q = std::size_t{1} << k;
        const auto p = sylow_subgroups(g, 2).front();
        CHECK(p.order() == q);
        CHECK(p.abelian);
        CHECK(is_ti_subgroup(g, p));
        CHECK(normalizer(g, p).order() == q * (q - 1));
    }
}

TEST_CASE("structural invariants across the catalog") {
    for (const auto& g : small_catalog()) {
        CAPTURE(g.name());
        const GroupProfile p = profile(g);
        const std::size_t n = g.order();
        CHECK(n % p.center_size() == 0);
        CHECK(quotient(g, center(g)).order() * p.center_size() == n);
        std::size_t total = 0;
        for (const auto& c : p.classes) {
            total += c.size();
            CHECK(n % c.size() == 0);
        }
        CHECK(total == n);
        CHECK(p.class_count >= p.center_size());
        CHECK(p.class_sizes.count(1) == 1);
        std::set<std::size_t> omega;
        for (std::size_t x = 0; x < n; ++x) {
            const auto o = element_order(g, static_cast<ElementIndex>(x));
            CHECK(n % o == 0);
            omega.insert(o);
        }
        CHECK(omega == p.element_orders);
        for (auto a : omega)
            for (std::size_t d = 1; d <= a; ++d)
                if (a % d == 0) CHECK(omega.count(d) == 1);
        // center = elements whose centralizer is everything
        for (std::size_t x = 0; x < n; ++x)
            CHECK((centralizer(g, static_cast<ElementIndex>(x)).order() == n) == g.center_set().test(x));
    }
}
