#include "commkappa/bignat.hpp"

#include <algorithm>
#include <map>

#include "commkappa/errors.hpp"

namespace commkappa {

BigNat::BigNat(const mpz_class& v) : v_(v) {
    if (sgn(v_) < 0) throw Error(ErrorKind::BadParams, "BigNat from negative value " + v.get_str());
}

BigNat BigNat::from_decimal(const std::string& s) {
    mpz_class v;
    if (s.empty() || s[0] == '-' || v.set_str(s, 10) != 0)
        throw Error(ErrorKind::ParseError, "not a nonnegative decimal integer: '" + s + "'");
    return BigNat(v);
}

BigNat BigNat::pow(const BigNat& base, std::uint64_t exponent) {
    mpz_class r;
    // mpz_pow_ui takes unsigned long, which is 64 bits on every supported target.
    mpz_pow_ui(r.get_mpz_t(), base.v_.get_mpz_t(), static_cast<unsigned long>(exponent));
    return BigNat(r);
}

bool BigNat::divisible_by(const BigNat& d) const {
    if (d.is_zero()) return is_zero();
    return mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()) != 0;
}

std::size_t BigNat::bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
}

BigNat BigNat::exact_div(const BigNat& d) const {
    if (!divisible_by(d))
        throw Error(ErrorKind::NonIntegerResult, v_.get_str() + " is not divisible by " + d.v_.get_str());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
    return BigNat(q);
}

Factorization factor_small(std::uint64_t n) {
    Factorization out;
    if (n < 2) return out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        std::uint64_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

void FactorAccumulator::add(std::uint64_t base, std::uint64_t exponent) {
    if (base == 0) throw Error(ErrorKind::BadParams, "zero base in factored product");
    if (exponent > 0 && base > 1) terms_.emplace_back(base, exponent);
}

Factorization FactorAccumulator::result() const {
    std::map<std::uint64_t, std::uint64_t> acc;
    for (const auto& [base, exponent] : terms_)
        for (const auto& [p, e] : factor_small(base)) acc[p] += e * exponent;
    return {acc.begin(), acc.end()};
}

BigNat evaluate(const Factorization& f) {
    BigNat r(1UL);
    for (const auto& [p, e] : f) r *= BigNat::pow(BigNat(p), e);
    return r;
}

std::string format_factorization(const Factorization& f) {
    if (f.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : f) {
        if (!s.empty()) s += '*';
        s += std::to_string(p);
        if (e != 1) s += '^' + std::to_string(e);
    }
    return s;
}

}  // namespace commkappa
