#include "commkappa/field.hpp"

#include <bit>

#include "commkappa/errors.hpp"

namespace commkappa {

namespace {

int poly_degree(std::uint32_t f) { return f == 0 ? -1 : 31 - std::countl_zero(f); }

std::uint32_t poly_mod_gf2(std::uint32_t a, std::uint32_t m) {
    const int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
    return a;
}

std::uint32_t mul_mod_gf2(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned n) {
    std::uint32_t r = 0;
    while (b != 0) {
        if (b & 1U) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (1U << n)) a ^= modulus;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_gf2(std::uint32_t poly) {
    const int d = poly_degree(poly);
    if (d < 1) return false;
    // Any factorization has a factor of degree <= d/2; try them all.
    for (int k = 1; 2 * k <= d; ++k)
        for (std::uint32_t g = 1U << k; g < (2U << k); ++g)
            if (poly_mod_gf2(poly, g) == 0) return false;
    return true;
}

Field build_field(unsigned p, unsigned n) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrimeCharacteristic, "characteristic " + std::to_string(p));
    if (n == 0) throw Error(ErrorKind::UnsupportedSize, "degree must be >= 1");
    if (n == 1 && p > 251) throw Error(ErrorKind::UnsupportedSize, "prime fields limited to p <= 251");
    if (n > 1 && p != 2)
        throw Error(ErrorKind::UnsupportedSize, "extension fields only supported in characteristic 2");
    if (n > 16) throw Error(ErrorKind::UnsupportedSize, "q = 2^" + std::to_string(n) + " exceeds 2^16");

    Field f;
    f.p_ = p;
    f.n_ = n;
    f.q_ = n == 1 ? p : (1U << n);
    if (n > 1) {
        for (std::uint32_t m = 1U << n; m < (2U << n); ++m) {
            if (is_irreducible_gf2(m)) {
                f.modulus_ = m;
                break;
            }
        }
    }

    auto raw_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        if (n == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
        return mul_mod_gf2(a, b, f.modulus_, n);
    };

    const std::uint32_t units = f.q_ - 1;
    auto exp_table = std::make_shared<std::vector<FieldElem>>(2 * std::size_t{units} + 1);
    auto log_table = std::make_shared<std::vector<std::uint32_t>>(f.q_, 0);
    for (std::uint32_t g = (f.q_ == 2 ? 1U : 2U); g < f.q_; ++g) {
        std::uint32_t x = 1;
        std::uint32_t k = 0;
        do {
            (*exp_table)[k] = x;
            x = raw_mul(x, g);
            ++k;
        } while (x != 1 && k <= units);
        if (k == units) break;
    }
    for (std::uint32_t k = 0; k < units; ++k) {
        (*log_table)[(*exp_table)[k]] = k;
        (*exp_table)[k + units] = (*exp_table)[k];
    }
    f.exp_table_ = exp_table;
    f.log_table_ = log_table;
    f.exp_ = exp_table->data();
    f.log_ = log_table->data();
    return f;
}

FieldElem Field::from_int(long long k) const {
    const long long r = ((k % p_) + p_) % p_;
    return static_cast<FieldElem>(r);
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
    if (n_ > 1) return a ^ b;
    return (a + b) % p_;
}

FieldElem Field::sub(FieldElem a, FieldElem b) const {
    if (n_ > 1) return a ^ b;
    return (a + p_ - b) % p_;
}

FieldElem Field::neg(FieldElem a) const {
    if (n_ > 1) return a;
    return (p_ - a) % p_;
}

FieldElem Field::mul(FieldElem a, FieldElem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

FieldElem Field::inv(FieldElem a) const {
    if (a == 0) throw Error(ErrorKind::BadParams, "inverse of zero in " + name());
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(log_[a] * (e % (q_ - 1))) % (q_ - 1)];
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

}  // namespace commkappa
