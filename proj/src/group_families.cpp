#include <algorithm>

#include "commkappa/field_matrix.hpp"
#include "commkappa/group.hpp"
#include "commkappa/metacyclic.hpp"
#include "commkappa/perm.hpp"

namespace commkappa {

namespace {

// Element of a direct product, multiplied through the factor tables.
struct TablePair {
    const GroupTable* left;
    const GroupTable* right;
    ElementIndex a;
    ElementIndex b;

    friend bool operator==(const TablePair& x, const TablePair& y) { return x.a == y.a && x.b == y.b; }
    friend auto operator<=>(const TablePair& x, const TablePair& y) {
        return std::pair(x.a, x.b) <=> std::pair(y.a, y.b);
    }
};

TablePair compose(const TablePair& x, const TablePair& y) {
    return {x.left, x.right, x.left->mul(x.a, y.a), x.right->mul(x.b, y.b)};
}
TablePair inverse(const TablePair& x) { return {x.left, x.right, x.left->inv(x.a), x.right->inv(x.b)}; }
TablePair identity_like(const TablePair& x) { return {x.left, x.right, 0, 0}; }
std::string to_string(const TablePair& x) {
    return "(" + x.left->label(x.a) + ", " + x.right->label(x.b) + ")";
}

long long need(const FamilySpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw Error(ErrorKind::BadParams, family_name(spec.family) + " requires parameter '" + key + "'");
    return it->second;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::BadParams, what);
}

GroupTable from_rules(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t u, std::string name) {
    auto rules = MetacyclicRules::make(a, b, c, u);
    std::vector<MetacyclicElement> gens{MetacyclicElement(rules, 1, 0)};
    if (b > 1) gens.emplace_back(rules, 0, 1);
    return generate_group(gens, kDefaultOrderCap, std::move(name));
}

void check_order(const GroupTable& g, std::size_t expected) {
    if (g.order() != expected)
        throw Error(ErrorKind::OrderMismatch, g.name() + " has order " + std::to_string(g.order()) + ", expected " +
                                                  std::to_string(expected));
}

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

Family parse_family(const std::string& name) {
    static const std::map<std::string, Family> names{
        {"cyclic", Family::Cyclic},
        {"dihedral", Family::Dihedral},
        {"generalized_quaternion", Family::GeneralizedQuaternion},
        {"quaternion", Family::GeneralizedQuaternion},
        {"semidihedral", Family::Semidihedral},
        {"symmetric", Family::Symmetric},
        {"alternating", Family::Alternating},
        {"heisenberg", Family::Heisenberg},
        {"modular_p3", Family::ModularP3},
        {"L2", Family::L2},
        {"GL2", Family::GL2},
        {"metacyclic", Family::Metacyclic},
        {"direct_product", Family::DirectProduct},
    };
    auto it = names.find(name);
    if (it == names.end()) throw Error(ErrorKind::BadParams, "unknown family '" + name + "'");
    return it->second;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Cyclic: return "cyclic";
        case Family::Dihedral: return "dihedral";
        case Family::GeneralizedQuaternion: return "generalized_quaternion";
        case Family::Semidihedral: return "semidihedral";
        case Family::Symmetric: return "symmetric";
        case Family::Alternating: return "alternating";
        case Family::Heisenberg: return "heisenberg";
        case Family::ModularP3: return "modular_p3";
        case Family::L2: return "L2";
        case Family::GL2: return "GL2";
        case Family::Metacyclic: return "metacyclic";
        case Family::DirectProduct: return "direct_product";
    }
    return "?";
}

std::string FamilySpec::describe() const {
    std::string s = family_name(family) + "(";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) s += ",";
        s += k + "=" + std::to_string(v);
        first = false;
    }
    for (const auto& f : factors) {
        if (!first) s += ",";
        s += f.describe();
        first = false;
    }
    return s + ")";
}

namespace families {

GroupTable cyclic(long long n) {
    require(n >= 1 && n <= static_cast<long long>(kDefaultOrderCap), "cyclic: need 1 <= n <= 8192");
    return from_rules(static_cast<std::uint32_t>(n), 1, 0, 1, "Z" + std::to_string(n));
}

GroupTable dihedral(long long k) {
    require(k >= 3 && 2 * k <= static_cast<long long>(kDefaultOrderCap), "dihedral: need k >= 3");
    auto g = from_rules(static_cast<std::uint32_t>(k), 2, 0, static_cast<std::uint32_t>(k - 1),
                        "D" + std::to_string(2 * k));
    check_order(g, static_cast<std::size_t>(2 * k));
    return g;
}

GroupTable quaternion(long long k) {
    require(k >= 2 && 4 * k <= static_cast<long long>(kDefaultOrderCap), "generalized_quaternion: need k >= 2");
    auto g = from_rules(static_cast<std::uint32_t>(2 * k), 2, static_cast<std::uint32_t>(k),
                        static_cast<std::uint32_t>(2 * k - 1), "Q" + std::to_string(4 * k));
    check_order(g, static_cast<std::size_t>(4 * k));
    return g;
}

GroupTable semidihedral(long long k) {
    require(k >= 4 && k <= 13, "semidihedral: need 4 <= k <= 13");
    const long long a = pow_ll(2, static_cast<int>(k - 1));
    const long long u = pow_ll(2, static_cast<int>(k - 2)) - 1;
    auto g = from_rules(static_cast<std::uint32_t>(a), 2, 0, static_cast<std::uint32_t>(u),
                        "SD" + std::to_string(2 * a));
    check_order(g, static_cast<std::size_t>(2 * a));
    return g;
}

GroupTable symmetric(long long d) {
    require(d >= 1 && d <= 7, "symmetric: need 1 <= d <= 7");
    const auto deg = static_cast<std::size_t>(d);
    if (d == 1) return generate_group(std::vector<Perm>{Perm::identity(1)}, kDefaultOrderCap, "S1");
    std::vector<int> cycle(deg);
    for (std::size_t i = 0; i < deg; ++i) cycle[i] = static_cast<int>(i);
    std::vector<Perm> gens{Perm::from_cycles(deg, {{0, 1}}), Perm::from_cycles(deg, {cycle})};
    return generate_group(gens, kDefaultOrderCap, "S" + std::to_string(d));
}

GroupTable alternating(long long d) {
    require(d >= 3 && d <= 7, "alternating: need 3 <= d <= 7");
    const auto deg = static_cast<std::size_t>(d);
    std::vector<int> cycle;
    for (std::size_t i = (d % 2 == 1 ? 0 : 1); i < deg; ++i) cycle.push_back(static_cast<int>(i));
    std::vector<Perm> gens{Perm::from_cycles(deg, {cycle}), Perm::from_cycles(deg, {{0, 1, 2}})};
    auto g = generate_group(gens, kDefaultOrderCap, "A" + std::to_string(d));
    long long fact = 1;
    for (long long i = 2; i <= d; ++i) fact *= i;
    check_order(g, static_cast<std::size_t>(fact / 2));
    return g;
}

GroupTable heisenberg(long long p) {
    require(p >= 2 && p <= 19 && is_prime(static_cast<std::uint64_t>(p)), "heisenberg: need prime p <= 19");
    const Field f = build_field(static_cast<unsigned>(p), 1);
    std::vector<Mat3> gens{Mat3(f, {1, 1, 0, 0, 1, 0, 0, 0, 1}), Mat3(f, {1, 0, 0, 0, 1, 1, 0, 0, 1})};
    auto g = generate_group(gens, kDefaultOrderCap, "Heis(" + std::to_string(p) + ")");
    check_order(g, static_cast<std::size_t>(p * p * p));
    return g;
}

GroupTable modular_p3(long long p) {
    require(p >= 2 && p <= 19 && is_prime(static_cast<std::uint64_t>(p)), "modular_p3: need prime p <= 19");
    auto g = from_rules(static_cast<std::uint32_t>(p * p), static_cast<std::uint32_t>(p), 0,
                        static_cast<std::uint32_t>(1 + p), "M(" + std::to_string(p) + "^3)");
    check_order(g, static_cast<std::size_t>(p * p * p));
    return g;
}

GroupTable l2(long long k) {
    require(k >= 2 && k <= 4, "L2: need 2 <= k <= 4 (q = 2^k)");
    const Field f = build_field(2, static_cast<unsigned>(k));
    const FieldElem w = f.primitive_element();
    std::vector<Mat2> gens{Mat2(f, {1, 1, 0, 1}), Mat2(f, {1, 0, 1, 1}), Mat2(f, {w, 0, 0, f.inv(w)})};
    const long long q = 1LL << k;
    auto g = generate_group(gens, kDefaultOrderCap, "L2(" + std::to_string(q) + ")");
    check_order(g, static_cast<std::size_t>(q * (q * q - 1)));
    return g;
}

GroupTable gl2(long long q) {
    const bool prime = q >= 2 && q <= 251 && is_prime(static_cast<std::uint64_t>(q));
    const bool two_power = q >= 4 && (q & (q - 1)) == 0;
    require(prime || two_power, "GL2: q must be prime or a power of 2");
    unsigned p = prime ? static_cast<unsigned>(q) : 2;
    unsigned n = 1;
    if (!prime)
        while ((1LL << n) < q) ++n;
    const Field f = build_field(p, n);
    const FieldElem w = f.primitive_element();
    std::vector<Mat2> gens{Mat2(f, {1, 1, 0, 1}), Mat2(f, {1, 0, 1, 1})};
    if (w != 1) gens.push_back(Mat2(f, {w, 0, 0, 1}));
    auto g = generate_group(gens, kDefaultOrderCap, "GL2(" + std::to_string(q) + ")");
    check_order(g, static_cast<std::size_t>((q * q - 1) * (q * q - q)));
    return g;
}

GroupTable metacyclic(long long a, long long b, long long u) {
    require(a >= 1 && b >= 1 && a * b <= static_cast<long long>(kDefaultOrderCap) && u >= 0,
            "metacyclic: need a, b >= 1, a*b <= 8192, u >= 0");
    auto g = from_rules(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), 0, static_cast<std::uint32_t>(u),
                        "Meta(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(u) + ")");
    check_order(g, static_cast<std::size_t>(a * b));
    return g;
}

}  // namespace families

GroupTable direct_product(const GroupTable& left, const GroupTable& right) {
    if (left.order() * right.order() > kDefaultOrderCap)
        throw Error(ErrorKind::OrderCapExceeded, "direct product of order " +
                                                     std::to_string(left.order() * right.order()));
    std::vector<TablePair> gens;
    for (auto g : left.generators()) gens.push_back({&left, &right, g, 0});
    for (auto h : right.generators()) gens.push_back({&left, &right, 0, h});
    if (gens.empty()) gens.push_back({&left, &right, 0, 0});
    auto g = generate_group(gens, kDefaultOrderCap, left.name() + "x" + right.name());
    check_order(g, left.order() * right.order());
    return g;
}

GroupTable make_family(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Cyclic: return families::cyclic(need(spec, "n"));
        case Family::Dihedral: return families::dihedral(need(spec, "k"));
        case Family::GeneralizedQuaternion: return families::quaternion(need(spec, "k"));
        case Family::Semidihedral: return families::semidihedral(need(spec, "k"));
        case Family::Symmetric: return families::symmetric(need(spec, "d"));
        case Family::Alternating: return families::alternating(need(spec, "d"));
        case Family::Heisenberg: return families::heisenberg(need(spec, "p"));
        case Family::ModularP3: return families::modular_p3(need(spec, "p"));
        case Family::L2: return families::l2(need(spec, "k"));
        case Family::GL2: return families::gl2(need(spec, "q"));
        case Family::Metacyclic: return families::metacyclic(need(spec, "a"), need(spec, "b"), need(spec, "u"));
        case Family::DirectProduct: {
            require(spec.factors.size() == 2, "direct_product needs exactly two factors");
            const GroupTable l = make_family(spec.factors[0]);
            const GroupTable r = make_family(spec.factors[1]);
            return direct_product(l, r);
        }
    }
    throw Error(ErrorKind::BadParams, "unhandled family");
}

}  // namespace commkappa
