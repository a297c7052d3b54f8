#include "commkappa/group_table.hpp"

#include <random>

namespace commkappa {

GroupTable::GroupTable(std::size_t order, std::vector<ElementIndex> table, std::vector<std::string> labels,
                       std::vector<ElementIndex> generators, std::string name)
    : n_(order),
      table_(std::move(table)),
      inv_(order),
      labels_(std::move(labels)),
      generators_(std::move(generators)),
      name_(std::move(name)) {
    if (n_ == 0 || n_ > kDefaultOrderCap) throw Error(ErrorKind::OrderCapExceeded, "group order " + std::to_string(n_));
    if (table_.size() != n_ * n_ || labels_.size() != n_) throw Error(ErrorKind::BadParams, "table shape mismatch");

    for (std::size_t a = 0; a < n_; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a) throw Error(ErrorKind::BadParams, "element 0 is not the identity");
    }
    std::vector<std::uint32_t> seen_row(n_, 0), seen_col(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
        const std::uint32_t stamp = static_cast<std::uint32_t>(a + 1);
        for (std::size_t b = 0; b < n_; ++b) {
            const ElementIndex r = mul(a, b);
            const ElementIndex c = mul(b, a);
            if (r >= n_ || c >= n_ || seen_row[r] == stamp || seen_col[c] == stamp)
                throw Error(ErrorKind::BadParams, "table is not a Latin square at row/column " + std::to_string(a));
            seen_row[r] = stamp;
            seen_col[c] = stamp;
            if (r == 0) inv_[a] = static_cast<ElementIndex>(b);
        }
    }

    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw Error(ErrorKind::BadParams, "associativity fails for (" + std::to_string(a) + "," +
                                                  std::to_string(b) + "," + std::to_string(c) + ")");
    };
    if (n_ <= 128) {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                for (std::size_t c = 0; c < n_; ++c) assoc(a, b, c);
    } else {
        std::mt19937_64 rng(0x5eed'c0ffeeULL ^ n_);
        std::uniform_int_distribution<std::size_t> pick(0, n_ - 1);
        // 10 n random pairs (a, b), each checked against every c: 10 n^2 triples
        // with row-contiguous reads.
        for (std::size_t s = 0; s < 10 * n_; ++s) {
            const std::size_t a = pick(rng);
            const std::size_t b = pick(rng);
            const ElementIndex* ab = &table_[mul(a, b) * n_];
            const ElementIndex* row_a = &table_[a * n_];
            const ElementIndex* row_b = &table_[b * n_];
            for (std::size_t c = 0; c < n_; ++c)
                if (ab[c] != row_a[row_b[c]]) assoc(a, b, c);
        }
    }

    centralizers_.assign(n_, Bitset(n_));
    for (std::size_t a = 0; a < n_; ++a) {
        centralizers_[a].set(a);
        for (std::size_t b = a + 1; b < n_; ++b) {
            if (mul(a, b) == mul(b, a)) {
                centralizers_[a].set(b);
                centralizers_[b].set(a);
            }
        }
    }
    center_ = Bitset(n_);
    for (std::size_t a = 0; a < n_; ++a)
        if (centralizers_[a].count() == n_) center_.set(a);
}

}  // namespace commkappa
