#include "commkappa/graph.hpp"

#include <algorithm>
#include <numeric>

namespace commkappa {

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    adj_[u].set(v);
    adj_[v].set(u);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

std::size_t Graph::component_count() const {
    const std::size_t n = order();
    Bitset unseen(n);
    unseen.set();
    std::size_t comps = 0;
    for (auto start = unseen.find_first(); start != Bitset::npos; start = unseen.find_first()) {
        ++comps;
        Bitset frontier(n);
        frontier.set(start);
        unseen.reset(start);
        while (frontier.any()) {
            Bitset next(n);
            for (auto v = frontier.find_first(); v != Bitset::npos; v = frontier.find_next(v)) next |= adj_[v];
            next &= unseen;
            unseen -= next;
            frontier = std::move(next);
        }
    }
    return comps;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < order(); ++u)
        for (auto v = adj_[u].find_next(u); v != Bitset::npos; v = adj_[u].find_next(v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u) {
        g.adj_[u].set();
        g.adj_[u].reset(u);
    }
    return g;
}

Graph Graph::complement() const {
    Graph c(order());
    for (std::size_t u = 0; u < order(); ++u) {
        c.adj_[u] = ~adj_[u];
        c.adj_[u].reset(u);
    }
    return c;
}

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(std::vector<Bitset> adj) : adj_(std::move(adj)) {}

    std::vector<std::size_t> run() {
        Bitset all(adj_.size());
        all.set();
        expand(all);
        return best_;
    }

private:
    void expand(Bitset candidates) {
        std::vector<std::size_t> order;
        std::vector<std::size_t> colour;
        colour_sort(candidates, order, colour);
        for (std::size_t k = order.size(); k-- > 0;) {
            if (current_.size() + colour[k] <= best_.size()) return;
            const std::size_t v = order[k];
            current_.push_back(v);
            Bitset next = candidates & adj_[v];
            if (next.none()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            candidates.reset(v);
        }
    }

    // Greedy sequential colouring; colour[k] bounds the clique size among order[0..k].
    void colour_sort(const Bitset& candidates, std::vector<std::size_t>& order, std::vector<std::size_t>& colour) const {
        Bitset uncoloured = candidates;
        std::size_t c = 0;
        while (uncoloured.any()) {
            ++c;
            Bitset q = uncoloured;
            for (auto v = q.find_first(); v != Bitset::npos; v = q.find_next(v)) {
                q -= adj_[v];
                uncoloured.reset(v);
                order.push_back(v);
                colour.push_back(c);
            }
        }
    }

    std::vector<Bitset> adj_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
};

}  // namespace

std::vector<std::size_t> maximum_independent_set(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) return {};
    // Relabel so that low-degree vertices (high complement degree) come first.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return g.degree(a) < g.degree(b); });
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;
    std::vector<Bitset> comp(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !g.adjacent(perm[i], perm[j])) comp[i].set(j);
    auto clique = CliqueSearch(std::move(comp)).run();
    std::vector<std::size_t> out;
    for (auto v : clique) out.push_back(perm[v]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> greedy_independent_set(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g.degree(a) < g.degree(b); });
    Bitset blocked(n);
    std::vector<std::size_t> out;
    for (auto v : order) {
        if (blocked.test(v)) continue;
        out.push_back(v);
        blocked.set(v);
        blocked |= g.neighbors(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace commkappa
