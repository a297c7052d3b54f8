#include "commkappa/metacyclic.hpp"

#include <numeric>

#include "commkappa/errors.hpp"

namespace commkappa {

std::shared_ptr<const MetacyclicRules> MetacyclicRules::make(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                                                             std::uint32_t u) {
    if (a == 0 || b == 0) throw Error(ErrorKind::BadParams, "metacyclic: a and b must be positive");
    auto r = std::make_shared<MetacyclicRules>();
    r->a = a;
    r->b = b;
    r->c = c % a;
    r->u = u % a;
    if (a > 1 && std::gcd(r->u, a) != 1)
        throw Error(ErrorKind::BadParams, "metacyclic: u=" + std::to_string(u) + " is not a unit mod " + std::to_string(a));
    r->u_pow.resize(b);
    std::uint64_t w = 1 % a;
    for (std::uint32_t j = 0; j < b; ++j) {
        r->u_pow[j] = static_cast<std::uint32_t>(w);
        w = (w * r->u) % a;
    }
    if (w != 1 % a)
        throw Error(ErrorKind::BadParams, "metacyclic: u^b != 1 mod a (u=" + std::to_string(u) +
                                              ", b=" + std::to_string(b) + ", a=" + std::to_string(a) + ")");
    if ((std::uint64_t{r->c} * r->u) % a != r->c)
        throw Error(ErrorKind::BadParams, "metacyclic: x^c must be fixed by conjugation");
    return r;
}

MetacyclicElement::MetacyclicElement(std::shared_ptr<const MetacyclicRules> rules, std::uint32_t i, std::uint32_t j)
    : rules_(std::move(rules)), i_(i % rules_->a), j_(j % rules_->b) {}

MetacyclicElement compose(const MetacyclicElement& g, const MetacyclicElement& h) {
    if (g.rules_ptr() != h.rules_ptr())
        throw Error(ErrorKind::CarrierMismatch, "normal-form elements from different presentations");
    const MetacyclicRules& r = g.rules();
    // x^i y^j x^k y^l = x^(i + k u^j) y^(j + l), folding y^b back into x^c.
    std::uint64_t i = g.x_exponent() + std::uint64_t{h.x_exponent()} * r.u_pow[g.y_exponent()];
    std::uint32_t j = g.y_exponent() + h.y_exponent();
    if (j >= r.b) {
        j -= r.b;
        i += r.c;
    }
    return MetacyclicElement(g.rules_ptr(), static_cast<std::uint32_t>(i % r.a), j);
}

MetacyclicElement identity_like(const MetacyclicElement& g) { return MetacyclicElement(g.rules_ptr(), 0, 0); }

MetacyclicElement inverse(const MetacyclicElement& g) {
    const MetacyclicElement e = identity_like(g);
    MetacyclicElement prev = e;
    MetacyclicElement cur = g;
    while (!(cur == e)) {
        prev = cur;
        cur = compose(cur, g);
    }
    return prev;
}

std::string to_string(const MetacyclicElement& g) {
    return "x^" + std::to_string(g.x_exponent()) + " y^" + std::to_string(g.y_exponent());
}

}  // namespace commkappa
