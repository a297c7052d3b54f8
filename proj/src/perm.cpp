#include "commkappa/perm.hpp"

#include <cctype>

#include "commkappa/errors.hpp"

namespace commkappa {

Perm::Perm(std::vector<std::uint16_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
        if (v >= images_.size() || seen[v])
            throw Error(ErrorKind::InvalidGenerator, "image array is not a bijection");
        seen[v] = true;
    }
}

Perm Perm::identity(std::size_t degree) {
    std::vector<std::uint16_t> im(degree);
    for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<std::uint16_t>(i);
    return Perm(std::move(im));
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<std::uint16_t> im(degree);
    for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<std::uint16_t>(i);
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const int a = cyc[k];
            const int b = cyc[(k + 1) % cyc.size()];
            if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= degree || static_cast<std::size_t>(b) >= degree)
                throw Error(ErrorKind::InvalidGenerator,
                            "cycle point out of range for degree " + std::to_string(degree));
            if (used[a]) throw Error(ErrorKind::InvalidGenerator, "cycles are not disjoint");
            used[a] = true;
            im[a] = static_cast<std::uint16_t>(b);
        }
    }
    return Perm(std::move(im));
}

Perm Perm::parse(std::size_t degree, const std::string& text) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw Error(ErrorKind::ParseError, "expected '(' at offset " + std::to_string(i) + " in \"" + text + "\"");
        ++i;
        std::vector<int> cyc;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw Error(ErrorKind::ParseError,
                            "expected point or ')' at offset " + std::to_string(i) + " in \"" + text + "\"");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = 10 * v + (text[i++] - '0');
            cyc.push_back(v);
        }
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    return from_cycles(degree, cycles);
}

bool Perm::is_even() const {
    std::vector<bool> seen(images_.size(), false);
    std::size_t transpositions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
        throw Error(ErrorKind::CarrierMismatch, "permutations of degree " + std::to_string(a.degree()) + " and " +
                                                    std::to_string(b.degree()));
    std::vector<std::uint16_t> im(a.degree());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = b[a[i]];
    return Perm(std::move(im));
}

Perm inverse(const Perm& a) {
    std::vector<std::uint16_t> im(a.degree());
    for (std::size_t i = 0; i < im.size(); ++i) im[a[i]] = static_cast<std::uint16_t>(i);
    return Perm(std::move(im));
}

Perm identity_like(const Perm& a) { return Perm::identity(a.degree()); }

std::string to_string(const Perm& a) {
    std::string s;
    std::vector<bool> seen(a.degree(), false);
    for (std::size_t i = 0; i < a.degree(); ++i) {
        if (seen[i] || a[i] == i) continue;
        s += '(';
        for (std::size_t j = i; !seen[j]; j = a[j]) {
            if (s.back() != '(') s += ' ';
            s += std::to_string(j);
            seen[j] = true;
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

}  // namespace commkappa
