#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "commkappa/group_table.hpp"

namespace commkappa {

/// A subgroup as a sorted element-index set. Always contains 0.
struct Subgroup {
    std::vector<ElementIndex> elements;
    bool normal = false;
    bool abelian = false;

    std::size_t order() const noexcept { return elements.size(); }
    bool contains(ElementIndex x) const;
    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

struct GroupProfile {
    std::size_t order = 0;
    std::vector<ElementIndex> center;
    std::size_t class_count = 0;
    std::vector<std::vector<ElementIndex>> classes;  // ordered by smallest member
    std::set<std::size_t> class_sizes;
    std::set<std::size_t> element_orders;   // omega(G)
    std::set<std::size_t> max_orders;       // mu(G)
    std::size_t centralizer_count = 0;      // #Cent(G), including G itself
    bool is_ac = false;

    std::size_t center_size() const noexcept { return center.size(); }
};

// ---- families ---------------------------------------------------------------

enum class Family {
    Cyclic,
    Dihedral,
    GeneralizedQuaternion,
    Semidihedral,
    Symmetric,
    Alternating,
    Heisenberg,
    ModularP3,
    L2,
    GL2,
    Metacyclic,
    DirectProduct,
};

/// Named construction. Parameter keys: cyclic {n}; dihedral {k} (order 2k);
/// generalized_quaternion {k} (order 4k); semidihedral {k} (order 2^k);
/// symmetric/alternating {d}; heisenberg/modular_p3 {p}; L2 {k} (q = 2^k);
/// GL2 {q}; metacyclic {a, b, u}; direct_product uses `factors`.
struct FamilySpec {
    Family family = Family::Cyclic;
    std::map<std::string, long long> params;
    std::vector<FamilySpec> factors;

    std::string describe() const;
};

/// Throws BadParams for unknown names.
Family parse_family(const std::string& name);
std::string family_name(Family f);

GroupTable make_family(const FamilySpec& spec);

namespace families {
GroupTable cyclic(long long n);
GroupTable dihedral(long long k);
GroupTable quaternion(long long k);
GroupTable semidihedral(long long k);
GroupTable symmetric(long long d);
GroupTable alternating(long long d);
GroupTable heisenberg(long long p);
GroupTable modular_p3(long long p);
GroupTable l2(long long k);
GroupTable gl2(long long q);
GroupTable metacyclic(long long a, long long b, long long u);
}  // namespace families

GroupTable direct_product(const GroupTable& left, const GroupTable& right);

// ---- structure --------------------------------------------------------------

std::size_t element_order(const GroupTable& g, ElementIndex x);
GroupProfile profile(const GroupTable& g);
Subgroup center(const GroupTable& g);
Subgroup centralizer(const GroupTable& g, ElementIndex x);
/// Smallest subgroup containing `gens`; stops early with std::nullopt once the
/// closure exceeds `limit` elements.
std::optional<Subgroup> closure(const GroupTable& g, const std::vector<ElementIndex>& gens,
                                std::size_t limit = kDefaultOrderCap);
/// Validates closure and fills the normal/abelian flags. Throws NotSubgroup.
Subgroup make_subgroup(const GroupTable& g, std::vector<ElementIndex> elements);
bool is_subgroup(const GroupTable& g, const std::vector<ElementIndex>& sorted_elements);
bool is_normal(const GroupTable& g, const Subgroup& h);
bool is_abelian_set(const GroupTable& g, const std::vector<ElementIndex>& elements);
/// g^-1 H g, sorted.
std::vector<ElementIndex> conjugate(const GroupTable& g, const std::vector<ElementIndex>& h, ElementIndex by);
Subgroup normalizer(const GroupTable& g, const Subgroup& h);

/// The subgroup as a group in its own right, elements renumbered in sorted
/// index order (so the identity stays at 0).
GroupTable subgroup_table(const GroupTable& g, const Subgroup& h);
/// Cayley table on the cosets of a normal subgroup, numbered by the smallest
/// element index of each coset. Throws NotNormal.
GroupTable quotient(const GroupTable& g, const Subgroup& n);

enum class SmallGroup { Trivial, Z4, Z6, Z9, Z2xZ2, Z3xZ3, S3 };
std::string small_group_name(SmallGroup s);
/// Fingerprint test (order, abelian flag, element-order multiset), which
/// separates every group in the small catalog. Throws TargetTooLarge when
/// |G| > 9.
bool is_isomorphic_small(const GroupTable& g, SmallGroup target);

/// All Sylow p-subgroups: one grown greedily, the rest its conjugates, in
/// discovery order over conjugating elements. Throws PDoesNotDivideOrder.
std::vector<Subgroup> sylow_subgroups(const GroupTable& g, std::uint64_t p);

bool is_ac_group(const GroupTable& g);
bool is_ti_subgroup(const GroupTable& g, const Subgroup& h);

/// Distinct centralizers as bitsets, in order of first occurrence over element index.
std::vector<Bitset> distinct_centralizers(const GroupTable& g);

}  // namespace commkappa
