// Fiber parameter combinatorics: the A/B word of a coprime pair and the
// mod-5 residue class of a fiber.
//
// A pair (alpha, beta) of positive coprime integers factors uniquely as a
// word in the two moves
//
//     A: (x, y) -> (x, x + y)        B: (x, y) -> (x + y, y)
//
// applied to the seed (1, 1).  Running the subtractive Euclid algorithm
// backwards from (alpha, beta) recovers the word; (1, 1) itself is the
// empty word.  The residue class lives in (Z5 x Z5 \ {0}) / +-, with the
// lexicographically smaller of the two sign representatives stored.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tinv {

enum class Letter : std::uint8_t { A, B };

using FiberWord = std::vector<Letter>;

inline char letter_char(Letter l) { return l == Letter::A ? 'A' : 'B'; }

/// Word of (alpha, beta) in application order (first letter acts on (1,1)).
/// Requires alpha, beta >= 1 and gcd(alpha, beta) = 1.
inline FiberWord fiber_word(std::int64_t alpha, std::int64_t beta) {
    if (alpha < 1 || beta < 1)
        throw std::domain_error("fiber_word: parameters must be positive");
    if (std::gcd(alpha, beta) != 1)
        throw std::domain_error("fiber_word: parameters must be coprime");
    FiberWord reversed;
    while (alpha != beta) {
        if (alpha > beta) {
            reversed.push_back(Letter::B);
            alpha -= beta;
        } else {
            reversed.push_back(Letter::A);
            beta -= alpha;
        }
    }
    // alpha == beta == 1 here since the inputs were coprime.
    return {reversed.rbegin(), reversed.rend()};
}

/// Applies a word to the seed (1, 1).  Inverse of fiber_word.
inline std::pair<std::int64_t, std::int64_t> apply_word(const FiberWord& word) {
    std::int64_t x = 1, y = 1;
    for (Letter l : word) {
        if (l == Letter::A) y += x;
        else x += y;
    }
    return {x, y};
}

inline std::string word_string(const FiberWord& word) {
    std::string s;
    s.reserve(word.size());
    for (Letter l : word) s += letter_char(l);
    return s;
}

/// A fiber parameter pair modulo 5 and overall sign.  The stored (lambda, mu)
/// is the lexicographic minimum of the two sign representatives, so lambda is
/// always one of 0, 1, 2 (and mu in {1, 2} when lambda = 0).
struct FiberClass {
    int lambda = 0;
    int mu = 0;

    friend constexpr bool operator==(const FiberClass&, const FiberClass&) = default;
    friend constexpr auto operator<=>(const FiberClass&, const FiberClass&) = default;

    std::string to_string() const {
        return "±(" + std::to_string(lambda) + "," + std::to_string(mu) + ")";
    }
};

inline FiberClass class_of(std::int64_t alpha, std::int64_t beta) {
    const int l = static_cast<int>(((alpha % 5) + 5) % 5);
    const int m = static_cast<int>(((beta % 5) + 5) % 5);
    if (l == 0 && m == 0)
        throw std::domain_error("class_of: both parameters vanish mod 5");
    const int ln = (5 - l) % 5, mn = (5 - m) % 5;
    if (std::pair{ln, mn} < std::pair{l, m}) return {ln, mn};
    return {l, m};
}

/// The 12 classes in canonical (lexicographic) order.
inline const std::array<FiberClass, 12>& all_classes() {
    static const std::array<FiberClass, 12> classes = {{{0, 1},
                                                        {0, 2},
                                                        {1, 0},
                                                        {1, 1},
                                                        {1, 2},
                                                        {1, 3},
                                                        {1, 4},
                                                        {2, 0},
                                                        {2, 1},
                                                        {2, 2},
                                                        {2, 3},
                                                        {2, 4}}};
    return classes;
}

inline int class_index(FiberClass c) {
    const auto& cs = all_classes();
    for (int i = 0; i < 12; ++i)
        if (cs[static_cast<std::size_t>(i)] == c) return i;
    throw std::logic_error("class_index: not a canonical class");
}

/// Fixed integer representative of a class: the lexicographically smallest
/// positive coprime pair whose class matches.  Class ±(1,1) gets (1,1), the
/// seed pair with the empty word.
inline std::pair<std::int64_t, std::int64_t> class_representative(FiberClass c) {
    static const std::array<std::pair<std::int64_t, std::int64_t>, 12> reps = [] {
        std::array<std::pair<std::int64_t, std::int64_t>, 12> out{};
        for (int i = 0; i < 12; ++i) {
            const FiberClass target = all_classes()[static_cast<std::size_t>(i)];
            bool found = false;
            for (std::int64_t a = 1; a <= 12 && !found; ++a)
                for (std::int64_t b = 1; b <= 12 && !found; ++b)
                    if (std::gcd(a, b) == 1 && class_of(a, b) == target) {
                        out[static_cast<std::size_t>(i)] = {a, b};
                        found = true;
                    }
        }
        return out;
    }();
    return reps[static_cast<std::size_t>(class_index(c))];
}

}  // namespace tinv
