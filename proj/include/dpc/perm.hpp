#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "dpc/errors.hpp"

namespace dpc {

// Permutation of the color set [k] = {1..k}, k <= 4. Stored as an image
// word: word()[i] is the image of color i+1. Composition is right-to-left:
// (f.compose(g))(x) = f(g(x)).
class Perm {
public:
    Perm() = default;

    static Perm identity(int k);
    static Perm from_word(std::string_view word); // e.g. "231": 1->2, 2->3, 3->1
    static Perm transposition(int k, int a, int b);

    int k() const { return k_; }
    int apply(int color) const { return img_[color - 1]; }

    Perm compose(const Perm& g) const; // *this after g
    Perm inverse() const;
    bool is_identity() const;

    std::string word() const;

    // Lexicographic rank among the k! permutations of [k].
    int rank() const;
    static Perm unrank(int k, int r);
    static int factorial(int k);

    bool operator==(const Perm&) const = default;

private:
    std::array<std::uint8_t, 4> img_{};
    int k_ = 0;
};

} // namespace dpc
