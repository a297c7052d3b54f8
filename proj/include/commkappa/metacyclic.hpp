#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace commkappa {

/// Rewrite rules for <x, y | x^a = 1, y^b = x^c, y x y^-1 = x^u>. Every
/// element has the normal form x^i y^j with 0 <= i < a, 0 <= j < b.
/// Covers cyclic, dihedral, generalized quaternion, semidihedral, the
/// modular p^3 groups and split metacyclic groups.
struct MetacyclicRules {
    std::uint32_t a = 1;
    std::uint32_t b = 1;
    std::uint32_t c = 0;
    std::uint32_t u = 1;
    std::vector<std::uint32_t> u_pow;  // u^j mod a for j < b

    /// Throws BadParams unless gcd(u, a) = 1, u^b = 1 (mod a) and c*u = c (mod a).
    static std::shared_ptr<const MetacyclicRules> make(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                                                       std::uint32_t u);
};

class MetacyclicElement {
public:
    MetacyclicElement(std::shared_ptr<const MetacyclicRules> rules, std::uint32_t i, std::uint32_t j);

    std::uint32_t x_exponent() const noexcept { return i_; }
    std::uint32_t y_exponent() const noexcept { return j_; }
    const MetacyclicRules& rules() const noexcept { return *rules_; }
    const std::shared_ptr<const MetacyclicRules>& rules_ptr() const noexcept { return rules_; }

    friend bool operator==(const MetacyclicElement& x, const MetacyclicElement& y) {
        return x.rules_ == y.rules_ && x.i_ == y.i_ && x.j_ == y.j_;
    }
    friend std::strong_ordering operator<=>(const MetacyclicElement& x, const MetacyclicElement& y) {
        if (auto c = x.j_ <=> y.j_; c != 0) return c;
        return x.i_ <=> y.i_;
    }

private:
    std::shared_ptr<const MetacyclicRules> rules_;
    std::uint32_t i_;
    std::uint32_t j_;
};

MetacyclicElement compose(const MetacyclicElement& g, const MetacyclicElement& h);
MetacyclicElement inverse(const MetacyclicElement& g);
MetacyclicElement identity_like(const MetacyclicElement& g);
std::string to_string(const MetacyclicElement& g);

}  // namespace commkappa
