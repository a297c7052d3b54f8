#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace commkappa {

/// Arbitrary-precision nonnegative integer. Thin value wrapper over GMP that
/// enforces the sign invariant at construction.
class BigNat {
public:
    BigNat() = default;
    BigNat(unsigned long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    explicit BigNat(const mpz_class& v);

    static BigNat from_decimal(const std::string& s);
    static BigNat pow(const BigNat& base, std::uint64_t exponent);

    std::string to_string() const { return v_.get_str(10); }
    const mpz_class& mpz() const noexcept { return v_; }
    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool divisible_by(const BigNat& d) const;
    std::size_t bit_length() const;

    BigNat& operator*=(const BigNat& o) { v_ *= o.v_; return *this; }
    BigNat& operator+=(const BigNat& o) { v_ += o.v_; return *this; }
    friend BigNat operator*(BigNat a, const BigNat& b) { a *= b; return a; }
    friend BigNat operator+(BigNat a, const BigNat& b) { a += b; return a; }
    /// Exact division; throws NonIntegerResult when d does not divide.
    BigNat exact_div(const BigNat& d) const;

    friend bool operator==(const BigNat& a, const BigNat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpz_class v_;
};

/// Prime-power factorization, sorted by prime, exponents positive.
using Factorization = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

/// Trial-division factorization. Only ever applied to bases bounded by a group
/// order, so cost is negligible.
Factorization factor_small(std::uint64_t n);

/// Accumulates base^exponent terms with arbitrary (possibly composite) bases
/// into a canonical prime factorization.
class FactorAccumulator {
public:
    void add(std::uint64_t base, std::uint64_t exponent);
    Factorization result() const;

private:
    std::vector<std::pair<std::uint64_t, std::uint64_t>> terms_;
};

BigNat evaluate(const Factorization& f);

/// "2^20*3^10*5^18" style rendering; "1" for the empty product.
std::string format_factorization(const Factorization& f);

}  // namespace commkappa
