#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commkappa/bignat.hpp"
#include "commkappa/group.hpp"

namespace commkappa {

/// G = A + A_1 + ... + A_n with A an abelian subgroup and every A_i a
/// commuting set of size > 1, n >= 2.
struct PartitionCertificate {
    std::vector<ElementIndex> A;
    std::vector<std::vector<ElementIndex>> blocks;
    bool verified = false;

    std::size_t n() const noexcept { return blocks.size(); }
};

struct PartitionVerdict {
    bool ok = false;
    /// First violated clause, empty when ok.
    std::string violation;
    explicit operator bool() const noexcept { return ok; }
};

PartitionVerdict verify_partition(const GroupTable& g, const PartitionCertificate& cert);

/// A = Z(G), blocks = the nontrivial cosets of Z in canonical order. Throws
/// CenterTooSmall when |Z| < 2 and IndexTooSmall when [G:Z] < 4.
PartitionCertificate coset_partition(const GroupTable& g);

/// floor(|G| / k(G)) - 1.
std::size_t lower_bound_blocks(const GroupTable& g);

/// All abelian subgroups, sorted by element vector.
std::vector<Subgroup> abelian_subgroups(const GroupTable& g);

/// Maximal abelian subgroups reachable by greedy growth from each cyclic
/// subgroup, sorted by size descending then element vector. Not guaranteed to
/// be all of them outside AC-groups.
std::vector<Subgroup> maximal_abelian_subgroups(const GroupTable& g);

enum class SearchMode { Exact, Heuristic };

inline constexpr std::size_t kExactPartitionCap = 24;

struct PartitionSearch {
    std::optional<PartitionCertificate> certificate;
    /// false for heuristic NotFound: nothing was proved.
    bool conclusive = true;
};

/// Exact: minimum n over all abelian subgroups A, ties to the first A in
/// canonical order; NotFound proves no partition with n <= n_max exists. Throws
/// ExactCapExceeded above `exact_cap` elements. Heuristic: greedy cover of G\A
/// by maximal abelian subgroups for each maximal abelian A, then repair of
/// leftover elements; smallest n wins.
PartitionSearch find_partition(const GroupTable& g, SearchMode mode, std::size_t n_max = SIZE_MAX,
                               std::size_t exact_cap = kExactPartitionCap);

struct TwoAbelianWitness {
    Subgroup P;
    Subgroup Q;
    PartitionCertificate partition;
};

/// Decides G = P x Q with P a Sylow 2-subgroup, P/Z(P) = Z2 x Z2 and Q
/// abelian; the witness partition uses A = <Z(G), t> for the first noncentral
/// t. Throws AbelianInput.
std::optional<TwoAbelianWitness> classify_2_abelian(const GroupTable& g);

enum class ThreeAbelianCase { Klein, Z3xZ3, S3 };
std::string case_tag(ThreeAbelianCase c);  // "a", "b", "c"

struct ThreeAbelianWitness {
    ThreeAbelianCase kind;
    PartitionCertificate partition;
};

/// |Z| >= 2 and G/Z one of Z2 x Z2, Z3 x Z3, S3. Throws AbelianInput.
std::optional<ThreeAbelianWitness> classify_3_abelian(const GroupTable& g);

struct FrobeniusWitness {
    Subgroup H;
    BigNat kappa;
};

/// H = elements of odd order when it is an index-2 subgroup with C(G\H)
/// edgeless; then kappa(G) = |H|^(|H|-2).
std::optional<FrobeniusWitness> frobenius_empty_complement(const GroupTable& g);

/// |A|^(|A|-2) prod (|A_i|+1)^(|A_i|-1), a lower bound on kappa(G).
BigNat partition_kappa_bound(const PartitionCertificate& cert);

}  // namespace commkappa
