#include <algorithm>
#include <numeric>

#include "commkappa/group.hpp"

namespace commkappa {

namespace {

std::vector<ElementIndex> to_indices(const Bitset& b) {
    std::vector<ElementIndex> out;
    out.reserve(b.count());
    for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) out.push_back(static_cast<ElementIndex>(i));
    return out;
}

Bitset to_bitset(std::size_t n, const std::vector<ElementIndex>& xs) {
    Bitset b(n);
    for (auto x : xs) b.set(x);
    return b;
}

bool is_prime_power_of(std::size_t value, std::uint64_t p) {
    while (value % p == 0) value /= p;
    return value == 1;
}

}  // namespace

bool Subgroup::contains(ElementIndex x) const { return std::binary_search(elements.begin(), elements.end(), x); }

std::size_t element_order(const GroupTable& g, ElementIndex x) {
    std::size_t k = 1;
    for (ElementIndex y = x; y != 0; y = g.mul(y, x)) ++k;
    return k;
}

bool is_abelian_set(const GroupTable& g, const std::vector<ElementIndex>& elements) {
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j)
            if (!g.commute(elements[i], elements[j])) return false;
    return true;
}

bool is_subgroup(const GroupTable& g, const std::vector<ElementIndex>& sorted_elements) {
    if (sorted_elements.empty() || sorted_elements.front() != 0) return false;
    if (g.order() % sorted_elements.size() != 0) return false;
    const Bitset members = to_bitset(g.order(), sorted_elements);
    for (auto a : sorted_elements)
        for (auto b : sorted_elements)
            if (!members.test(g.mul(a, b))) return false;
    return true;
}

std::vector<ElementIndex> conjugate(const GroupTable& g, const std::vector<ElementIndex>& h, ElementIndex by) {
    std::vector<ElementIndex> out;
    out.reserve(h.size());
    for (auto x : h) out.push_back(g.conj(x, by));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_normal(const GroupTable& g, const Subgroup& h) {
    const Bitset members = to_bitset(g.order(), h.elements);
    for (std::size_t t = 0; t < g.order(); ++t)
        for (auto x : h.elements)
            if (!members.test(g.conj(x, static_cast<ElementIndex>(t)))) return false;
    return true;
}

Subgroup make_subgroup(const GroupTable& g, std::vector<ElementIndex> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (!is_subgroup(g, elements)) throw Error(ErrorKind::NotSubgroup, "element set is not closed in " + g.name());
    Subgroup s;
    s.elements = std::move(elements);
    s.abelian = is_abelian_set(g, s.elements);
    s.normal = is_normal(g, s);
    return s;
}

std::optional<Subgroup> closure(const GroupTable& g, const std::vector<ElementIndex>& gens, std::size_t limit) {
    Bitset members(g.order());
    std::vector<ElementIndex> elems{0};
    members.set(0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (auto s : gens) {
            const ElementIndex y = g.mul(elems[i], s);
            if (!members.test(y)) {
                if (elems.size() >= limit) return std::nullopt;
                members.set(y);
                elems.push_back(y);
            }
        }
    }
    return make_subgroup(g, std::move(elems));
}

Subgroup center(const GroupTable& g) { return make_subgroup(g, to_indices(g.center_set())); }

Subgroup centralizer(const GroupTable& g, ElementIndex x) {
    if (x >= g.order()) throw Error(ErrorKind::BadParams, "element index out of range");
    return make_subgroup(g, to_indices(g.centralizer_set(x)));
}

Subgroup normalizer(const GroupTable& g, const Subgroup& h) {
    std::vector<ElementIndex> out;
    for (std::size_t t = 0; t < g.order(); ++t)
        if (conjugate(g, h.elements, static_cast<ElementIndex>(t)) == h.elements)
            out.push_back(static_cast<ElementIndex>(t));
    return make_subgroup(g, std::move(out));
}

std::vector<Bitset> distinct_centralizers(const GroupTable& g) {
    std::vector<Bitset> out;
    std::set<Bitset> seen;
    for (std::size_t x = 0; x < g.order(); ++x)
        if (seen.insert(g.centralizer_set(x)).second) out.push_back(g.centralizer_set(x));
    return out;
}

bool is_ac_group(const GroupTable& g) {
    const Bitset& z = g.center_set();
    std::set<Bitset> checked;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (z.test(x)) continue;
        const Bitset& c = g.centralizer_set(x);
        if (!checked.insert(c).second) continue;
        for (auto y = c.find_first(); y != Bitset::npos; y = c.find_next(y))
            if (!c.is_subset_of(g.centralizer_set(y))) return false;
    }
    return true;
}

GroupProfile profile(const GroupTable& g) {
    GroupProfile p;
    const std::size_t n = g.order();
    p.order = n;
    p.center = to_indices(g.center_set());

    std::vector<bool> assigned(n, false);
    for (std::size_t x = 0; x < n; ++x) {
        if (assigned[x]) continue;
        Bitset orbit(n);
        for (std::size_t t = 0; t < n; ++t) orbit.set(g.conj(x, t));
        auto cls = to_indices(orbit);
        for (auto y : cls) assigned[y] = true;
        p.class_sizes.insert(cls.size());
        p.classes.push_back(std::move(cls));
    }
    p.class_count = p.classes.size();

    for (std::size_t x = 0; x < n; ++x) p.element_orders.insert(element_order(g, static_cast<ElementIndex>(x)));
    for (auto a : p.element_orders) {
        const bool maximal = std::none_of(p.element_orders.begin(), p.element_orders.end(),
                                          [a](std::size_t b) { return b != a && b % a == 0; });
        if (maximal) p.max_orders.insert(a);
    }
    p.centralizer_count = distinct_centralizers(g).size();
    p.is_ac = is_ac_group(g);
    return p;
}

GroupTable subgroup_table(const GroupTable& g, const Subgroup& h) {
    const std::size_t m = h.order();
    std::vector<ElementIndex> local(g.order(), 0);
    for (std::size_t i = 0; i < m; ++i) local[h.elements[i]] = static_cast<ElementIndex>(i);
    std::vector<ElementIndex> table(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) table[i * m + j] = local[g.mul(h.elements[i], h.elements[j])];
    std::vector<std::string> labels;
    for (auto x : h.elements) labels.push_back(g.label(x));
    // Greedy generating set in index order.
    std::vector<ElementIndex> gens;
    Bitset span(g.order());
    span.set(0);
    for (auto x : h.elements) {
        if (span.test(x)) continue;
        gens.push_back(x);
        auto c = closure(g, gens);
        span = to_bitset(g.order(), c->elements);
    }
    std::vector<ElementIndex> local_gens;
    for (auto x : gens) local_gens.push_back(local[x]);
    return GroupTable(m, std::move(table), std::move(labels), std::move(local_gens), g.name() + "-sub" + std::to_string(m));
}

GroupTable quotient(const GroupTable& g, const Subgroup& nsub) {
    if (!is_subgroup(g, nsub.elements) || !is_normal(g, nsub))
        throw Error(ErrorKind::NotNormal, "quotient by a subgroup that is not normal in " + g.name());
    const std::size_t n = g.order();
    std::vector<ElementIndex> coset_of(n, 0);
    std::vector<bool> assigned(n, false);
    std::vector<ElementIndex> reps;
    for (std::size_t x = 0; x < n; ++x) {
        if (assigned[x]) continue;
        const auto id = static_cast<ElementIndex>(reps.size());
        reps.push_back(static_cast<ElementIndex>(x));
        for (auto k : nsub.elements) {
            const ElementIndex y = g.mul(static_cast<ElementIndex>(x), k);
            assigned[y] = true;
            coset_of[y] = id;
        }
    }
    const std::size_t m = reps.size();
    std::vector<ElementIndex> table(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) table[i * m + j] = coset_of[g.mul(reps[i], reps[j])];
    std::vector<std::string> labels;
    for (auto r : reps) labels.push_back(g.label(r) + "N");
    std::vector<ElementIndex> gens;
    for (auto s : g.generators()) {
        const ElementIndex c = coset_of[s];
        if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
    }
    return GroupTable(m, std::move(table), std::move(labels), std::move(gens),
                      g.name() + "/N" + std::to_string(nsub.order()));
}

std::string small_group_name(SmallGroup s) {
    switch (s) {
        case SmallGroup::Trivial: return "trivial";
        case SmallGroup::Z4: return "Z4";
        case SmallGroup::Z6: return "Z6";
        case SmallGroup::Z9: return "Z9";
        case SmallGroup::Z2xZ2: return "Z2xZ2";
        case SmallGroup::Z3xZ3: return "Z3xZ3";
        case SmallGroup::S3: return "S3";
    }
    return "?";
}

bool is_isomorphic_small(const GroupTable& g, SmallGroup target) {
    if (g.order() > 9) throw Error(ErrorKind::TargetTooLarge, "small-catalog test needs |G| <= 9");
    struct Fingerprint {
        std::size_t order;
        bool abelian;
        std::vector<std::size_t> orders;
    };
    auto expected = [&]() -> Fingerprint {
        switch (target) {
            case SmallGroup::Trivial: return {1, true, {1}};
            case SmallGroup::Z4: return {4, true, {1, 2, 4, 4}};
            case SmallGroup::Z2xZ2: return {4, true, {1, 2, 2, 2}};
            case SmallGroup::Z6: return {6, true, {1, 2, 3, 3, 6, 6}};
            case SmallGroup::S3: return {6, false, {1, 2, 2, 2, 3, 3}};
            case SmallGroup::Z9: return {9, true, {1, 3, 3, 9, 9, 9, 9, 9, 9}};
            case SmallGroup::Z3xZ3: return {9, true, {1, 3, 3, 3, 3, 3, 3, 3, 3}};
        }
        return {0, false, {}};
    }();
    if (g.order() != expected.order || g.is_abelian() != expected.abelian) return false;
    std::vector<std::size_t> orders;
    for (std::size_t x = 0; x < g.order(); ++x) orders.push_back(element_order(g, static_cast<ElementIndex>(x)));
    std::sort(orders.begin(), orders.end());
    return orders == expected.orders;
}

std::vector<Subgroup> sylow_subgroups(const GroupTable& g, std::uint64_t p) {
    const std::size_t n = g.order();
    if (p < 2 || n % p != 0)
        throw Error(ErrorKind::PDoesNotDivideOrder, std::to_string(p) + " does not divide |G| = " + std::to_string(n));
    std::size_t target = 1;
    for (std::size_t r = n; r % p == 0; r /= p) target *= p;

    // Greedy growth: a p-subgroup that no single element enlarges to a
    // p-subgroup is maximal, hence Sylow.
    std::vector<ElementIndex> gens;
    Subgroup sylow = make_subgroup(g, {0});
    for (std::size_t x = 1; x < n && sylow.order() < target; ++x) {
        const auto e = static_cast<ElementIndex>(x);
        if (sylow.contains(e) || !is_prime_power_of(element_order(g, e), p)) continue;
        gens.push_back(e);
        auto grown = closure(g, gens, target);
        if (grown && is_prime_power_of(grown->order(), p)) {
            sylow = std::move(*grown);
        } else {
            gens.pop_back();
        }
    }

    std::vector<Subgroup> out;
    std::set<std::vector<ElementIndex>> seen;
    for (std::size_t t = 0; t < n; ++t) {
        auto c = conjugate(g, sylow.elements, static_cast<ElementIndex>(t));
        if (seen.insert(c).second) out.push_back(make_subgroup(g, std::move(c)));
    }
    return out;
}

bool is_ti_subgroup(const GroupTable& g, const Subgroup& h) {
    for (std::size_t t = 0; t < g.order(); ++t) {
        const auto c = conjugate(g, h.elements, static_cast<ElementIndex>(t));
        if (c == h.elements) continue;
        std::vector<ElementIndex> common;
        std::set_intersection(c.begin(), c.end(), h.elements.begin(), h.elements.end(), std::back_inserter(common));
        if (common.size() > 1) return false;
    }
    return true;
}

}  // namespace commkappa
