#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace commkappa {

/// Permutation of the points 0..d-1 stored as its image array.
class Perm {
public:
    Perm() = default;
    /// Throws InvalidGenerator when the images are not a bijection.
    explicit Perm(std::vector<std::uint16_t> images);

    static Perm identity(std::size_t degree);
    /// Builds from disjoint cycles on `degree` points, e.g. {{0,1},{2,3,4}}.
    static Perm from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);
    /// Parses cycle notation "(0 1)(2 3 4)"; "()" is the identity.
    static Perm parse(std::size_t degree, const std::string& text);

    std::size_t degree() const noexcept { return images_.size(); }
    std::uint16_t operator[](std::size_t i) const { return images_[i]; }
    std::span<const std::uint16_t> images() const noexcept { return images_; }
    bool is_even() const;

    friend auto operator<=>(const Perm&, const Perm&) = default;
    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::vector<std::uint16_t> images_;
};

/// Left-to-right composition: compose(a, b) maps i to b[a[i]].
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
Perm identity_like(const Perm& a);
/// Cycle notation with fixed points omitted; "()" for the identity.
std::string to_string(const Perm& a);

}  // namespace commkappa
