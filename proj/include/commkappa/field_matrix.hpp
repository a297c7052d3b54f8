#pragma once

#include <array>
#include <compare>
#include <string>
#include <tuple>

#include "commkappa/errors.hpp"
#include "commkappa/field.hpp"

namespace commkappa {

/// Square D x D matrix over a finite field, row-major. Only D = 2, 3 are used
/// as group carriers (GL/SL and unitriangular constructions).
template <int D>
class FieldMatrix {
    static_assert(D == 2 || D == 3, "only 2x2 and 3x3 carriers are supported");

public:
    using Entries = std::array<FieldElem, D * D>;

    FieldMatrix(Field field, const Entries& entries) : field_(std::move(field)), a_(entries) {
        for (auto v : a_)
            if (v >= field_.order())
                throw Error(ErrorKind::InvalidGenerator,
                            "entry " + std::to_string(v) + " is not an element of " + field_.name());
    }

    static FieldMatrix identity(const Field& f) {
        Entries e{};
        for (int i = 0; i < D; ++i) e[i * D + i] = 1;
        return FieldMatrix(f, e);
    }

    const Field& field() const noexcept { return field_; }
    FieldElem operator()(int r, int c) const { return a_[r * D + c]; }
    const Entries& entries() const noexcept { return a_; }

    FieldElem determinant() const {
        const Field& f = field_;
        if constexpr (D == 2) {
            return f.sub(f.mul(a_[0], a_[3]), f.mul(a_[1], a_[2]));
        } else {
            FieldElem det = 0;
            for (int c = 0; c < 3; ++c) {
                const FieldElem minor = f.sub(f.mul((*this)(1, (c + 1) % 3), (*this)(2, (c + 2) % 3)),
                                              f.mul((*this)(1, (c + 2) % 3), (*this)(2, (c + 1) % 3)));
                det = f.add(det, f.mul((*this)(0, c), minor));
            }
            return det;
        }
    }

    friend bool operator==(const FieldMatrix& x, const FieldMatrix& y) {
        return x.field_ == y.field_ && x.a_ == y.a_;
    }
    friend std::strong_ordering operator<=>(const FieldMatrix& x, const FieldMatrix& y) {
        if (auto c = x.a_ <=> y.a_; c != 0) return c;
        return std::tuple(x.field_.characteristic(), x.field_.degree(), x.field_.modulus()) <=>
               std::tuple(y.field_.characteristic(), y.field_.degree(), y.field_.modulus());
    }

private:
    Field field_;
    Entries a_;
};

using Mat2 = FieldMatrix<2>;
using Mat3 = FieldMatrix<3>;

template <int D>
FieldMatrix<D> compose(const FieldMatrix<D>& x, const FieldMatrix<D>& y) {
    if (!(x.field() == y.field()))
        throw Error(ErrorKind::CarrierMismatch, "matrices over " + x.field().name() + " and " + y.field().name());
    const Field& f = x.field();
    typename FieldMatrix<D>::Entries r{};
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
            FieldElem s = 0;
            for (int k = 0; k < D; ++k) s = f.add(s, f.mul(x(i, k), y(k, j)));
            r[i * D + j] = s;
        }
    return FieldMatrix<D>(f, r);
}

/// Inverse via the adjugate. Throws InvalidGenerator for singular input.
template <int D>
FieldMatrix<D> inverse(const FieldMatrix<D>& x) {
    const Field& f = x.field();
    const FieldElem det = x.determinant();
    if (det == 0) throw Error(ErrorKind::InvalidGenerator, "singular matrix has no inverse");
    const FieldElem dinv = f.inv(det);
    typename FieldMatrix<D>::Entries r{};
    if constexpr (D == 2) {
        r = {x(1, 1), f.neg(x(0, 1)), f.neg(x(1, 0)), x(0, 0)};
    } else {
        // adj(x)[j][i] = cofactor(i, j)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
                r[j * 3 + i] = f.sub(f.mul(x(r0, c0), x(r1, c1)), f.mul(x(r0, c1), x(r1, c0)));
            }
    }
    for (auto& v : r) v = f.mul(v, dinv);
    return FieldMatrix<D>(f, r);
}

template <int D>
FieldMatrix<D> identity_like(const FieldMatrix<D>& x) {
    return FieldMatrix<D>::identity(x.field());
}

template <int D>
std::string to_string(const FieldMatrix<D>& x) {
    std::string s = "[";
    for (int i = 0; i < D; ++i) {
        s += i == 0 ? "[" : ",[";
        for (int j = 0; j < D; ++j) {
            if (j) s += ',';
            s += std::to_string(x(i, j));
        }
        s += ']';
    }
    return s + "]";
}

}  // namespace commkappa
