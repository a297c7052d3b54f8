#include "commkappa/spectra.hpp"

#include <cctype>

#include "commkappa/errors.hpp"

namespace commkappa {

CliqueExpr CliqueExpr::complete(std::size_t s) {
    if (s == 0) throw Error(ErrorKind::BadParams, "K_0 is not a graph");
    return CliqueExpr(std::make_shared<const Node>(Node{Kind::Complete, s, s, {}}));
}

CliqueExpr CliqueExpr::empty(std::size_t s) {
    if (s == 0) throw Error(ErrorKind::BadParams, "E_0 is not a graph");
    return CliqueExpr(std::make_shared<const Node>(Node{Kind::Empty, s, s, {}}));
}

CliqueExpr CliqueExpr::disjoint_union(std::vector<CliqueExpr> parts) {
    if (parts.empty()) throw Error(ErrorKind::BadParams, "empty union");
    std::size_t v = 0;
    for (const auto& p : parts) v += p.vertex_count();
    return CliqueExpr(std::make_shared<const Node>(Node{Kind::Union, 0, v, std::move(parts)}));
}

CliqueExpr CliqueExpr::join(CliqueExpr left, CliqueExpr right) {
    const std::size_t v = left.vertex_count() + right.vertex_count();
    return CliqueExpr(
        std::make_shared<const Node>(Node{Kind::Join, 0, v, {std::move(left), std::move(right)}}));
}

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    CliqueExpr parse_all() {
        CliqueExpr e = parse_expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    std::size_t number() {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a size");
        std::size_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = 10 * v + static_cast<std::size_t>(s_[pos_++] - '0');
            if (v > 100000) fail("size too large");
        }
        if (v == 0) fail("size must be positive");
        return v;
    }
    CliqueExpr parse_expr() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_++];
        switch (c) {
            case 'K': return CliqueExpr::complete(number());
            case 'E': return CliqueExpr::empty(number());
            case 'U': {
                expect('(');
                std::vector<CliqueExpr> parts{parse_expr()};
                for (skip(); pos_ < s_.size() && s_[pos_] == ','; skip()) {
                    ++pos_;
                    parts.push_back(parse_expr());
                }
                expect(')');
                return CliqueExpr::disjoint_union(std::move(parts));
            }
            case 'J': {
                expect('(');
                CliqueExpr l = parse_expr();
                expect(',');
                CliqueExpr r = parse_expr();
                expect(')');
                return CliqueExpr::join(std::move(l), std::move(r));
            }
            default: --pos_; fail("expected K, E, U or J");
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

void realize_into(const CliqueExpr& e, Graph& g, std::size_t offset) {
    const std::size_t n = e.vertex_count();
    switch (e.kind()) {
        case CliqueExpr::Kind::Complete:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) g.add_edge(offset + i, offset + j);
            break;
        case CliqueExpr::Kind::Empty: break;
        case CliqueExpr::Kind::Union: {
            std::size_t at = offset;
            for (const auto& c : e.children()) {
                realize_into(c, g, at);
                at += c.vertex_count();
            }
            break;
        }
        case CliqueExpr::Kind::Join: {
            const auto& l = e.children()[0];
            const auto& r = e.children()[1];
            realize_into(l, g, offset);
            realize_into(r, g, offset + l.vertex_count());
            for (std::size_t i = 0; i < l.vertex_count(); ++i)
                for (std::size_t j = 0; j < r.vertex_count(); ++j) g.add_edge(offset + i, offset + l.vertex_count() + j);
            break;
        }
    }
}

void drop_one_zero(LapSpectrum& s) {
    auto it = s.multiplicity.find(0);
    if (it == s.multiplicity.end()) throw Error(ErrorKind::BadParams, "spectrum has no zero eigenvalue");
    if (--it->second == 0) s.multiplicity.erase(it);
    --s.n;
}

}  // namespace

CliqueExpr CliqueExpr::parse(std::string_view text) { return ExprParser(text).parse_all(); }

std::string CliqueExpr::to_string() const {
    switch (kind()) {
        case Kind::Complete: return "K" + std::to_string(leaf_size());
        case Kind::Empty: return "E" + std::to_string(leaf_size());
        case Kind::Union: {
            std::string s = "U(";
            for (std::size_t i = 0; i < children().size(); ++i) s += (i ? "," : "") + children()[i].to_string();
            return s + ")";
        }
        case Kind::Join: return "J(" + children()[0].to_string() + "," + children()[1].to_string() + ")";
    }
    return {};
}

Graph CliqueExpr::realize() const {
    Graph g(vertex_count());
    realize_into(*this, g, 0);
    return g;
}

std::uint64_t LapSpectrum::zero_multiplicity() const {
    auto it = multiplicity.find(0);
    return it == multiplicity.end() ? 0 : it->second;
}

std::uint64_t LapSpectrum::largest() const { return multiplicity.empty() ? 0 : multiplicity.begin()->first; }

std::string LapSpectrum::to_string() const {
    std::string s;
    for (const auto& [v, m] : multiplicity) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v) + "^" + std::to_string(m);
    }
    return s;
}

std::vector<std::uint64_t> LapSpectrum::values() const {
    std::vector<std::uint64_t> out;
    for (const auto& [v, m] : multiplicity) out.insert(out.end(), m, v);
    return out;
}

LapSpectrum make_spectrum(const std::vector<std::uint64_t>& values) {
    LapSpectrum s;
    for (auto v : values) ++s.multiplicity[v];
    s.n = values.size();
    return s;
}

LapSpectrum spectrum(const CliqueExpr& e) {
    LapSpectrum s;
    switch (e.kind()) {
        case CliqueExpr::Kind::Complete:
            s.n = e.leaf_size();
            if (s.n > 1) s.multiplicity[s.n] = s.n - 1;
            s.multiplicity[0] = 1;
            return s;
        case CliqueExpr::Kind::Empty:
            s.n = e.leaf_size();
            s.multiplicity[0] = s.n;
            return s;
        case CliqueExpr::Kind::Union:
            for (const auto& c : e.children()) {
                const LapSpectrum cs = spectrum(c);
                for (const auto& [v, m] : cs.multiplicity) s.multiplicity[v] += m;
                s.n += cs.n;
            }
            return s;
        case CliqueExpr::Kind::Join: {
            LapSpectrum l = spectrum(e.children()[0]);
            LapSpectrum r = spectrum(e.children()[1]);
            const std::uint64_t m = l.n;
            const std::uint64_t n = r.n;
            drop_one_zero(l);
            drop_one_zero(r);
            s.n = m + n;
            s.multiplicity[m + n] += 1;
            for (const auto& [v, k] : l.multiplicity) s.multiplicity[v + n] += k;
            for (const auto& [v, k] : r.multiplicity) s.multiplicity[v + m] += k;
            s.multiplicity[0] += 1;
            return s;
        }
    }
    return s;
}

BigNat kappa_from_spectrum(const LapSpectrum& s) {
    if (s.n == 0 || s.zero_multiplicity() != 1) return BigNat(0UL);
    BigNat prod(1UL);
    for (const auto& [v, m] : s.multiplicity)
        if (v != 0) prod *= BigNat::pow(BigNat(v), m);
    return prod.exact_div(BigNat(s.n));
}

SigmaValue sigma_eval(const LapSpectrum& s, std::uint64_t m) {
    if (m == 0) throw Error(ErrorKind::BadParams, "sigma_eval needs m >= 1");
    LapSpectrum rest = s;
    drop_one_zero(rest);
    BigNat prod(1UL);
    for (const auto& [v, k] : rest.multiplicity) prod *= BigNat::pow(BigNat(v + m), k);
    SigmaValue out{mpz_class(prod.mpz() * m), prod, prod * BigNat(m)};
    if (s.n % 2 == 1) out.sigma = -out.sigma;
    return out;
}

BigNat kappa_centerless(const LapSpectrum& delta) { return sigma_eval(delta, 1).shifted_product; }

BigNat kappa_with_center(const LapSpectrum& delta, std::uint64_t m) {
    if (m == 0) throw Error(ErrorKind::BadParams, "center size must be >= 1");
    const std::uint64_t n = m + delta.n;
    return BigNat::pow(BigNat(n), m - 1) * sigma_eval(delta, m).shifted_product;
}

}  // namespace commkappa
