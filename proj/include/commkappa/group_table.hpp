#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "commkappa/errors.hpp"

namespace commkappa {

using ElementIndex = std::uint16_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kDefaultOrderCap = 8192;

/// A finite group as a validated Cayley table. Element 0 is the identity and
/// table(a, b) is the index of a*b. Immutable after construction.
class GroupTable {
public:
    /// Validates the Latin-square property, the identity row/column and
    /// associativity (exhaustive up to order 128, >= 10 n^2 sampled triples
    /// beyond). Throws BadParams on any violation.
    GroupTable(std::size_t order, std::vector<ElementIndex> table, std::vector<std::string> labels,
               std::vector<ElementIndex> generators, std::string name);

    std::size_t order() const noexcept { return n_; }
    ElementIndex mul(std::size_t a, std::size_t b) const noexcept { return table_[a * n_ + b]; }
    ElementIndex inv(std::size_t a) const noexcept { return inv_[a]; }
    /// g^-1 x g
    ElementIndex conj(std::size_t x, std::size_t g) const noexcept { return mul(mul(inv_[g], x), g); }
    bool commute(std::size_t a, std::size_t b) const noexcept { return centralizers_[a].test(b); }
    /// The centralizer C_G(x) as a bitset over element indices.
    const Bitset& centralizer_set(std::size_t x) const noexcept { return centralizers_[x]; }
    const Bitset& center_set() const noexcept { return center_; }
    bool is_abelian() const noexcept { return center_.count() == n_; }

    const std::string& name() const noexcept { return name_; }
    const std::string& label(std::size_t a) const { return labels_[a]; }
    std::span<const ElementIndex> generators() const noexcept { return generators_; }
    std::span<const ElementIndex> row(std::size_t a) const noexcept { return {table_.data() + a * n_, n_}; }

private:
    std::size_t n_;
    std::vector<ElementIndex> table_;
    std::vector<ElementIndex> inv_;
    std::vector<std::string> labels_;
    std::vector<ElementIndex> generators_;
    std::string name_;
    std::vector<Bitset> centralizers_;
    Bitset center_;
};

/// Right-multiplication closure from the identity in generator order: element
/// indices follow BFS discovery, and the full table is filled from the BFS
/// tree using only the generator columns.
///
/// `Element` must provide free functions compose, inverse, identity_like and
/// to_string, plus a total order.
template <class Element>
GroupTable generate_group(const std::vector<Element>& generators, std::size_t order_cap = kDefaultOrderCap,
                          std::string name = {}) {
    if (generators.empty()) throw Error(ErrorKind::BadParams, "generate_group needs at least one generator");
    if (order_cap > kDefaultOrderCap)
        throw Error(ErrorKind::OrderCapExceeded, "order cap above " + std::to_string(kDefaultOrderCap));
    for (std::size_t g = 0; g < generators.size(); ++g) {
        try {
            (void)compose(generators[0], generators[g]);
            (void)inverse(generators[g]);
        } catch (const Error& e) {
            throw Error(e.kind(), "generator " + std::to_string(g) + ": " + e.detail());
        }
    }

    std::vector<Element> elements{identity_like(generators[0])};
    std::map<Element, std::size_t> index{{elements[0], 0}};
    std::vector<std::size_t> parent{0};
    std::vector<std::size_t> via{0};
    const std::size_t k = generators.size();
    std::vector<std::size_t> right;  // right[a*k + g] = index of a * gen_g
    for (std::size_t a = 0; a < elements.size(); ++a) {
        for (std::size_t g = 0; g < k; ++g) {
            Element prod = compose(elements[a], generators[g]);
            auto [it, inserted] = index.try_emplace(prod, elements.size());
            if (inserted) {
                if (elements.size() >= order_cap)
                    throw Error(ErrorKind::OrderCapExceeded, "closure exceeds order cap " + std::to_string(order_cap));
                elements.push_back(std::move(prod));
                parent.push_back(a);
                via.push_back(g);
            }
            right.push_back(it->second);
        }
    }

    const std::size_t n = elements.size();
    std::vector<ElementIndex> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        ElementIndex* row = table.data() + a * n;
        row[0] = static_cast<ElementIndex>(a);
        for (std::size_t b = 1; b < n; ++b) row[b] = static_cast<ElementIndex>(right[row[parent[b]] * k + via[b]]);
    }
    std::vector<ElementIndex> gens;
    for (const auto& g : generators) gens.push_back(static_cast<ElementIndex>(index.at(g)));
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& e : elements) labels.push_back(to_string(e));
    return GroupTable(n, std::move(table), std::move(labels), std::move(gens), std::move(name));
}

}  // namespace commkappa
