#include "commkappa/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "commkappa/errors.hpp"

namespace commkappa {

namespace {

Bitset to_bits(const GroupTable& g, const std::vector<ElementIndex>& xs) {
    Bitset b(g.order());
    for (auto x : xs) b.set(x);
    return b;
}

std::vector<ElementIndex> from_bits(const Bitset& b) {
    std::vector<ElementIndex> out;
    for (auto x = b.find_first(); x != Bitset::npos; x = b.find_next(x)) out.push_back(static_cast<ElementIndex>(x));
    return out;
}

Bitset centralizer_of(const GroupTable& g, const Bitset& h) {
    Bitset c(g.order());
    c.set();
    for (auto x = h.find_first(); x != Bitset::npos; x = h.find_next(x)) c &= g.centralizer_set(x);
    return c;
}

Subgroup closure_with(const GroupTable& g, const std::vector<ElementIndex>& base, ElementIndex extra) {
    std::vector<ElementIndex> gens = base;
    gens.push_back(extra);
    return *closure(g, gens, g.order());
}

bool sorted_before(const Subgroup& a, const Subgroup& b) { return a.elements < b.elements; }

PartitionCertificate finish(const GroupTable& g, PartitionCertificate cert) {
    for (auto& b : cert.blocks) std::sort(b.begin(), b.end());
    std::sort(cert.A.begin(), cert.A.end());
    cert.verified = verify_partition(g, cert).ok;
    if (!cert.verified) throw Error(ErrorKind::BadParams, "internal: constructed partition fails verification: " +
                                                              verify_partition(g, cert).violation);
    return cert;
}

// A single block of size >= 4 splits into two blocks of size >= 2.
bool fix_single_block(std::vector<std::vector<ElementIndex>>& blocks) {
    if (blocks.size() >= 2) return true;
    if (blocks.size() == 1 && blocks[0].size() >= 4) {
        std::vector<ElementIndex> head(blocks[0].begin(), blocks[0].begin() + 2);
        blocks[0].erase(blocks[0].begin(), blocks[0].begin() + 2);
        blocks.insert(blocks.begin(), head);
        return true;
    }
    return false;
}

// Minimum partition of `rest` into cliques of C(G) of size >= 2, looking only
// for solutions with fewer than `limit` blocks.
class CliqueCover {
public:
    CliqueCover(const GroupTable& g, const Bitset& rest) : g_(g) {
        verts_ = from_bits(rest);
        const std::size_t m = verts_.size();
        adj_.assign(m, Bitset(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (g.commute(verts_[i], verts_[j])) {
                    adj_[i].set(j);
                    adj_[j].set(i);
                }
    }

    /// Returns blocks (as group elements) of the first cover found with fewer
    /// than `limit` blocks after single-block fixing, minimizing if `minimize`.
    std::optional<std::vector<std::vector<ElementIndex>>> solve(std::size_t limit, bool minimize) {
        limit_ = limit;
        minimize_ = minimize;
        best_.reset();
        Bitset all(verts_.size());
        all.set();
        if (!verts_.empty()) recurse(all);
        return best_;
    }

private:
    std::size_t final_count(std::size_t k) const {
        if (k >= 2) return k;
        if (k == 1 && current_[0].count() >= 4) return 2;
        return SIZE_MAX;
    }

    std::size_t independent_bound(const Bitset& open) const {
        Bitset left = open;
        std::size_t count = 0;
        for (auto v = left.find_first(); v != Bitset::npos; v = left.find_next(v)) {
            ++count;
            left -= adj_[v];
        }
        return count;
    }

    bool done() const { return best_ && !minimize_; }

    void recurse(const Bitset& open) {
        if (done()) return;
        if (open.none()) {
            const std::size_t n = final_count(current_.size());
            if (n < limit_) {
                std::vector<std::vector<ElementIndex>> blocks;
                for (const auto& b : current_) blocks.push_back(to_elements(b));
                fix_single_block(blocks);
                best_ = std::move(blocks);
                limit_ = n;
            }
            return;
        }
        for (auto v = open.find_first(); v != Bitset::npos; v = open.find_next(v))
            if (!adj_[v].intersects(open)) return;
        if (std::max<std::size_t>(2, current_.size() + independent_bound(open)) >= limit_) return;
        const std::size_t v = open.find_first();
        Bitset clique(verts_.size());
        clique.set(v);
        Bitset cand = adj_[v] & open;
        extend(open, clique, cand);
    }

    // Emits every clique containing `clique` drawn from `cand`, larger first.
    void extend(const Bitset& open, Bitset& clique, const Bitset& cand) {
        for (auto w = cand.find_first(); w != Bitset::npos; w = cand.find_next(w)) {
            if (done()) return;
            clique.set(w);
            Bitset next = cand & adj_[w];
            for (auto u = next.find_first(); u != Bitset::npos && u <= w; u = next.find_next(u)) next.reset(u);
            extend(open, clique, next);
            current_.push_back(clique);
            recurse(open - clique);
            current_.pop_back();
            clique.reset(w);
        }
    }

    std::vector<ElementIndex> to_elements(const Bitset& b) const {
        std::vector<ElementIndex> out;
        for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) out.push_back(verts_[i]);
        return out;
    }

    const GroupTable& g_;
    std::vector<ElementIndex> verts_;
    std::vector<Bitset> adj_;
    std::vector<Bitset> current_;
    std::optional<std::vector<std::vector<ElementIndex>>> best_;
    std::size_t limit_ = SIZE_MAX;
    bool minimize_ = true;
};

std::optional<PartitionCertificate> greedy_cover(const GroupTable& g, const Subgroup& a,
                                                 const std::vector<Bitset>& pieces) {
    Bitset rest(g.order());
    rest.set();
    for (auto x : a.elements) rest.reset(x);
    std::vector<Bitset> blocks;
    while (rest.any()) {
        std::size_t best = 0;
        const Bitset* pick = nullptr;
        for (const auto& m : pieces) {
            const std::size_t c = (m & rest).count();
            if (c > best) {
                best = c;
                pick = &m;
            }
        }
        if (best < 2) break;
        blocks.push_back(*pick & rest);
        rest -= blocks.back();
    }
    // Repair: attach each leftover element to the first block it commutes
    // with entirely, otherwise pair it with commuting leftovers.
    for (auto x = rest.find_first(); x != Bitset::npos; x = rest.find_first()) {
        rest.reset(x);
        bool placed = false;
        for (auto& b : blocks)
            if (b.is_subset_of(g.centralizer_set(x))) {
                b.set(x);
                placed = true;
                break;
            }
        if (placed) continue;
        Bitset block(g.order());
        block.set(x);
        for (auto y = rest.find_first(); y != Bitset::npos; y = rest.find_next(y))
            if (block.is_subset_of(g.centralizer_set(y))) block.set(y);
        if (block.count() < 2) return std::nullopt;
        rest -= block;
        blocks.push_back(block);
    }
    PartitionCertificate cert;
    cert.A = a.elements;
    for (const auto& b : blocks) cert.blocks.push_back(from_bits(b));
    if (!fix_single_block(cert.blocks)) return std::nullopt;
    return cert;
}

}  // namespace

PartitionVerdict verify_partition(const GroupTable& g, const PartitionCertificate& cert) {
    const std::size_t n = g.order();
    auto fail = [](std::string why) { return PartitionVerdict{false, std::move(why)}; };
    std::vector<int> owner(n, -2);
    auto claim = [&](ElementIndex x, int who) -> std::optional<std::string> {
        if (x >= n) return "element " + std::to_string(x) + " is not in the group";
        if (owner[x] != -2)
            return "overlap: element " + std::to_string(x) + " appears twice";
        owner[x] = who;
        return std::nullopt;
    };
    for (auto x : cert.A)
        if (auto e = claim(x, -1)) return fail(*e);
    for (std::size_t i = 0; i < cert.blocks.size(); ++i)
        for (auto x : cert.blocks[i])
            if (auto e = claim(x, static_cast<int>(i))) return fail(*e);
    for (std::size_t x = 0; x < n; ++x)
        if (owner[x] == -2) return fail("non-cover: element " + std::to_string(x) + " is in no part");
    std::vector<ElementIndex> a = cert.A;
    std::sort(a.begin(), a.end());
    if (!is_subgroup(g, a)) return fail("A is not a subgroup");
    if (!is_abelian_set(g, a)) return fail("A is not abelian");
    for (std::size_t i = 0; i < cert.blocks.size(); ++i)
        if (!is_abelian_set(g, cert.blocks[i])) return fail("block " + std::to_string(i + 1) + " is not a commuting set");
    for (std::size_t i = 0; i < cert.blocks.size(); ++i)
        if (cert.blocks[i].size() < 2) return fail("block " + std::to_string(i + 1) + " has fewer than 2 elements");
    if (cert.blocks.size() < 2) return fail("n = " + std::to_string(cert.blocks.size()) + " < 2");
    return {true, {}};
}

PartitionCertificate coset_partition(const GroupTable& g) {
    const Subgroup z = center(g);
    if (z.order() < 2) throw Error(ErrorKind::CenterTooSmall, "|Z(" + g.name() + ")| = " + std::to_string(z.order()));
    if (g.order() / z.order() < 4)
        throw Error(ErrorKind::IndexTooSmall, "[G:Z] = " + std::to_string(g.order() / z.order()) + " < 4");
    PartitionCertificate cert;
    cert.A = z.elements;
    Bitset seen = to_bits(g, z.elements);
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (seen.test(x)) continue;
        std::vector<ElementIndex> coset;
        for (auto c : z.elements) {
            coset.push_back(g.mul(c, x));
            seen.set(coset.back());
        }
        cert.blocks.push_back(std::move(coset));
    }
    return finish(g, std::move(cert));
}

std::size_t lower_bound_blocks(const GroupTable& g) { return g.order() / profile(g).class_count - 1; }

std::vector<Subgroup> abelian_subgroups(const GroupTable& g) {
    std::set<Bitset> seen;
    std::vector<Subgroup> out;
    std::vector<std::size_t> queue;
    auto add = [&](Subgroup h) {
        if (seen.insert(to_bits(g, h.elements)).second) {
            out.push_back(std::move(h));
            queue.push_back(out.size() - 1);
        }
    };
    add(*closure(g, {}, g.order()));
    for (std::size_t x = 1; x < g.order(); ++x) add(*closure(g, {static_cast<ElementIndex>(x)}, g.order()));
    while (!queue.empty()) {
        const std::size_t i = queue.back();
        queue.pop_back();
        const std::vector<ElementIndex> base = out[i].elements;
        const Bitset h = to_bits(g, base);
        const Bitset cand = centralizer_of(g, h) - h;
        for (auto y = cand.find_first(); y != Bitset::npos; y = cand.find_next(y))
            add(closure_with(g, base, static_cast<ElementIndex>(y)));
    }
    for (auto& s : out) {
        s.abelian = true;
        s.normal = is_normal(g, s);
    }
    std::sort(out.begin(), out.end(), sorted_before);
    return out;
}

std::vector<Subgroup> maximal_abelian_subgroups(const GroupTable& g) {
    std::set<Bitset> seen;
    std::vector<Subgroup> out;
    for (std::size_t x = 0; x < g.order(); ++x) {
        const Bitset& cx = g.centralizer_set(x);
        if (seen.count(cx)) continue;
        Bitset h(g.order());
        std::vector<ElementIndex> gens{static_cast<ElementIndex>(x)};
        if (is_abelian_set(g, from_bits(cx))) {
            h = cx;
        } else {
            h = to_bits(g, closure(g, gens, g.order())->elements);
            for (;;) {
                const Bitset cand = centralizer_of(g, h) - h;
                const auto y = cand.find_first();
                if (y == Bitset::npos) break;
                gens.push_back(static_cast<ElementIndex>(y));
                h = to_bits(g, closure(g, gens, g.order())->elements);
            }
        }
        if (seen.insert(h).second) {
            Subgroup s;
            s.elements = from_bits(h);
            s.abelian = true;
            s.normal = is_normal(g, s);
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() > b.order();
        return a.elements < b.elements;
    });
    return out;
}

PartitionSearch find_partition(const GroupTable& g, SearchMode mode, std::size_t n_max, std::size_t exact_cap) {
    PartitionSearch result;
    const std::size_t limit = n_max == SIZE_MAX ? SIZE_MAX : n_max + 1;
    if (mode == SearchMode::Exact) {
        if (g.order() > exact_cap)
            throw Error(ErrorKind::ExactCapExceeded, "exact partition search is capped at |G| <= " + std::to_string(exact_cap));
        const auto subgroups = abelian_subgroups(g);
        auto rest_of = [&](const Subgroup& a) {
            Bitset rest(g.order());
            rest.set();
            for (auto x : a.elements) rest.reset(x);
            return rest;
        };
        // Pass 1: the optimum, visiting large A first for early pruning.
        std::vector<const Subgroup*> by_size;
        for (const auto& a : subgroups) by_size.push_back(&a);
        std::stable_sort(by_size.begin(), by_size.end(), [](auto* a, auto* b) { return a->order() > b->order(); });
        std::size_t best = limit;
        for (const auto* a : by_size) {
            if (auto blocks = CliqueCover(g, rest_of(*a)).solve(best, true)) best = blocks->size();
        }
        if (best == limit) return result;
        // Pass 2: the first A in canonical order attaining it.
        for (const auto& a : subgroups) {
            if (auto blocks = CliqueCover(g, rest_of(a)).solve(best + 1, false)) {
                PartitionCertificate cert;
                cert.A = a.elements;
                cert.blocks = std::move(*blocks);
                result.certificate = finish(g, std::move(cert));
                return result;
            }
        }
        throw Error(ErrorKind::BadParams, "internal: optimum not reproduced");
    }

    const auto mas = maximal_abelian_subgroups(g);
    std::vector<Bitset> pieces;
    for (const auto& m : mas) pieces.push_back(to_bits(g, m.elements));
    // One candidate A per distinct subgroup size, plus the center.
    std::vector<Subgroup> candidates;
    std::set<std::size_t> sizes;
    for (const auto& m : mas)
        if (sizes.insert(m.order()).second) candidates.push_back(m);
    candidates.push_back(center(g));
    std::optional<PartitionCertificate> best;
    for (const auto& a : candidates) {
        auto cert = greedy_cover(g, a, pieces);
        if (cert && cert->n() <= n_max && (!best || cert->n() < best->n())) best = std::move(cert);
    }
    if (best) {
        result.certificate = finish(g, std::move(*best));
    } else {
        result.conclusive = false;
    }
    return result;
}

std::optional<TwoAbelianWitness> classify_2_abelian(const GroupTable& g) {
    if (g.is_abelian()) throw Error(ErrorKind::AbelianInput, g.name() + " is abelian");
    if (g.order() % 2 != 0) return std::nullopt;
    const Subgroup p = sylow_subgroups(g, 2).front();
    std::vector<ElementIndex> odd;
    for (std::size_t x = 0; x < g.order(); ++x)
        if (element_order(g, static_cast<ElementIndex>(x)) % 2 == 1) odd.push_back(static_cast<ElementIndex>(x));
    if (odd.size() * p.order() != g.order() || !is_subgroup(g, odd) || !is_abelian_set(g, odd)) return std::nullopt;
    const Subgroup q = make_subgroup(g, odd);
    if (!q.normal || !p.normal) return std::nullopt;
    const GroupTable pt = subgroup_table(g, p);
    const GroupTable pz = quotient(pt, center(pt));
    if (pz.order() != 4 || !is_isomorphic_small(pz, SmallGroup::Z2xZ2)) return std::nullopt;

    const Subgroup z = center(g);
    ElementIndex t = 0;
    while (z.contains(t)) ++t;
    const Subgroup a = closure_with(g, z.elements, t);
    PartitionCertificate cert;
    cert.A = a.elements;
    Bitset seen = to_bits(g, a.elements);
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (seen.test(x)) continue;
        std::vector<ElementIndex> coset;
        for (auto c : z.elements) {
            coset.push_back(g.mul(c, x));
            seen.set(coset.back());
        }
        cert.blocks.push_back(std::move(coset));
    }
    return TwoAbelianWitness{p, q, finish(g, std::move(cert))};
}

std::string case_tag(ThreeAbelianCase c) {
    switch (c) {
        case ThreeAbelianCase::Klein: return "a";
        case ThreeAbelianCase::Z3xZ3: return "b";
        case ThreeAbelianCase::S3: return "c";
    }
    return "?";
}

std::optional<ThreeAbelianWitness> classify_3_abelian(const GroupTable& g) {
    if (g.is_abelian()) throw Error(ErrorKind::AbelianInput, g.name() + " is abelian");
    const Subgroup z = center(g);
    if (z.order() < 2) return std::nullopt;
    const std::size_t index = g.order() / z.order();
    if (index != 4 && index != 9 && index != 6) return std::nullopt;
    const GroupTable gz = quotient(g, z);
    ThreeAbelianCase kind;
    if (is_isomorphic_small(gz, SmallGroup::Z2xZ2))
        kind = ThreeAbelianCase::Klein;
    else if (is_isomorphic_small(gz, SmallGroup::Z3xZ3))
        kind = ThreeAbelianCase::Z3xZ3;
    else if (is_isomorphic_small(gz, SmallGroup::S3))
        kind = ThreeAbelianCase::S3;
    else
        return std::nullopt;

    // A = Z, or <Z, x> for the first noncentral x whose coset has order 3.
    Subgroup a = z;
    if (kind != ThreeAbelianCase::Klein) {
        ElementIndex x = 1;
        while (z.contains(x) || !z.contains(g.mul(g.mul(x, x), x))) ++x;
        a = closure_with(g, z.elements, x);
    }
    // Remaining blocks: <Z, y> \ Z for the first uncovered y.
    PartitionCertificate cert;
    cert.A = a.elements;
    Bitset seen = to_bits(g, a.elements);
    const Bitset zb = to_bits(g, z.elements);
    for (std::size_t y = 0; y < g.order(); ++y) {
        if (seen.test(y)) continue;
        const Bitset block = to_bits(g, closure_with(g, z.elements, static_cast<ElementIndex>(y)).elements) - zb;
        seen |= block;
        cert.blocks.push_back(from_bits(block));
    }
    return ThreeAbelianWitness{kind, finish(g, std::move(cert))};
}

std::optional<FrobeniusWitness> frobenius_empty_complement(const GroupTable& g) {
    if (g.is_abelian()) return std::nullopt;
    std::vector<ElementIndex> odd;
    for (std::size_t x = 0; x < g.order(); ++x)
        if (element_order(g, static_cast<ElementIndex>(x)) % 2 == 1) odd.push_back(static_cast<ElementIndex>(x));
    if (2 * odd.size() != g.order() || !is_subgroup(g, odd)) return std::nullopt;
    const Bitset h = to_bits(g, odd);
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (h.test(x)) continue;
        if ((g.centralizer_set(x) - h).count() != 1) return std::nullopt;  // C(G\H) has an edge
    }
    // Consequences of the classification, checked rather than assumed.
    if (!is_abelian_set(g, odd)) return std::nullopt;
    for (std::size_t x = 0; x < g.order(); ++x)
        if (!h.test(x) && g.mul(x, x) != 0) return std::nullopt;
    // C(G) = K1 v (K_{h-1} + E_h): identity universal, H\1 a clique, the rest
    // adjacent only to the identity.
    for (std::size_t x = 1; x < g.order(); ++x) {
        const Bitset expect = h.test(x) ? h : [&] {
            Bitset b(g.order());
            b.set(0);
            b.set(x);
            return b;
        }();
        if (g.centralizer_set(x) != expect) return std::nullopt;
    }
    FrobeniusWitness w;
    w.H = make_subgroup(g, odd);
    const std::uint64_t k = odd.size();
    w.kappa = k >= 2 ? BigNat::pow(BigNat(k), k - 2) : BigNat(1UL);
    return w;
}

BigNat partition_kappa_bound(const PartitionCertificate& cert) {
    const std::uint64_t a = cert.A.size();
    BigNat v = a >= 2 ? BigNat::pow(BigNat(a), a - 2) : BigNat(1UL);
    for (const auto& b : cert.blocks) v *= BigNat::pow(BigNat(b.size() + 1), b.size() - 1);
    return v;
}

}  // namespace commkappa
