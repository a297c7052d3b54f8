#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace commkappa {

/// Field elements are encoded as integers in [0, q): residues for GF(p),
/// bit-packed polynomial-basis coefficients for GF(2^n).
using FieldElem = std::uint32_t;

/// GF(p) for primes p <= 251, or GF(2^n) for 2 <= n <= 16, in polynomial basis
/// over the lexicographically least irreducible modulus. Copies share the
/// immutable arithmetic tables.
class Field {
public:
    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return n_; }
    std::uint32_t order() const noexcept { return q_; }
    /// Bit-encoded modulus polynomial (bit i = coefficient of x^i); 0 for prime fields.
    std::uint32_t modulus() const noexcept { return modulus_; }

    FieldElem zero() const noexcept { return 0; }
    FieldElem one() const noexcept { return 1; }
    /// Image of the integer k under Z -> GF(q).
    FieldElem from_int(long long k) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    /// Multiplicative inverse; throws BadParams on zero.
    FieldElem inv(FieldElem a) const;
    FieldElem pow(FieldElem a, std::uint64_t e) const;
    /// A generator of the multiplicative group (smallest encoding).
    FieldElem primitive_element() const noexcept { return exp_[1]; }

    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.modulus_ == b.modulus_;
    }

private:
    friend Field build_field(unsigned p, unsigned n);
    Field() = default;

    unsigned p_ = 0;
    unsigned n_ = 0;
    std::uint32_t q_ = 0;
    std::uint32_t modulus_ = 0;
    // exp_[i] = g^i for i in [0, 2(q-1)); log_[a] for a != 0.
    std::shared_ptr<const std::vector<FieldElem>> exp_table_;
    std::shared_ptr<const std::vector<std::uint32_t>> log_table_;
    const FieldElem* exp_ = nullptr;
    const std::uint32_t* log_ = nullptr;
};

/// Builds GF(p^n). Throws NonPrimeCharacteristic or UnsupportedSize.
Field build_field(unsigned p, unsigned n);

/// Whether the bit-encoded polynomial is irreducible over GF(2) (degree <= 31).
bool is_irreducible_gf2(std::uint32_t poly);

bool is_prime(std::uint64_t n);

}  // namespace commkappa
