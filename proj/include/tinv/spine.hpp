// The constant vector, matrices and cubic matrix of the elementary spine
// pieces, and the exact contraction operations over the golden ring.
//
// All objects are indexed by the five simple subgraphs of a theta-curve, in
// the fixed order
//
//     0: empty subgraph
//     1: theta minus edge 1
//     2: theta minus edge 2
//     3: theta minus edge 3
//     4: the full theta-curve
//
// (0-based here; the order itself is never permuted implicitly).

#pragma once

#include <array>
#include <stdexcept>

#include "tinv/golden.hpp"

namespace tinv {

struct Vec5 {
    std::array<GoldenNum, 5> e{};

    GoldenNum& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
    const GoldenNum& operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Vec5&, const Vec5&) = default;
    friend auto operator<=>(const Vec5&, const Vec5&) = default;

    friend Vec5 operator+(const Vec5& x, const Vec5& y) {
        Vec5 r;
        for (int i = 0; i < 5; ++i) r[i] = x[i] + y[i];
        return r;
    }
    friend Vec5 operator-(const Vec5& x, const Vec5& y) {
        Vec5 r;
        for (int i = 0; i < 5; ++i) r[i] = x[i] - y[i];
        return r;
    }
    friend Vec5 operator*(const GoldenNum& s, const Vec5& v) {
        Vec5 r;
        for (int i = 0; i < 5; ++i) r[i] = s * v[i];
        return r;
    }
};

struct Mat5 {
    std::array<std::array<GoldenNum, 5>, 5> m{};

    GoldenNum& at(int i, int j) {
        return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const GoldenNum& at(int i, int j) const {
        return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    friend bool operator==(const Mat5&, const Mat5&) = default;

    static Mat5 identity() {
        Mat5 r;
        for (int i = 0; i < 5; ++i) r.at(i, i) = GoldenNum{1};
        return r;
    }
};

struct Cubic5 {
    std::array<std::array<std::array<GoldenNum, 5>, 5>, 5> t{};

    GoldenNum& at(int i, int j, int k) {
        return t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                [static_cast<std::size_t>(k)];
    }
    const GoldenNum& at(int i, int j, int k) const {
        return t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                [static_cast<std::size_t>(k)];
    }

    friend bool operator==(const Cubic5&, const Cubic5&) = default;
};

/// The five constants: vector Phi_E, matrix Phi_J, cubic matrix Phi_T, and
/// the two permutation matrices Phi_23 and Phi_13.
struct SpineConstants {
    Vec5 phi_e;
    Mat5 phi_j;
    Cubic5 phi_t;
    Mat5 phi_23;  // swaps components 2 and 3 (subgraphs "minus edge 2/3")
    Mat5 phi_13;  // swaps components 1 and 3
};

namespace detail {

inline SpineConstants build_constants() {
    SpineConstants k;
    const GoldenNum one{1};

    k.phi_e = Vec5{{one, {}, {}, one, eps_pow(1)}};

    k.phi_j = Mat5::identity();
    k.phi_j.at(3, 3) = eps_pow(-2);   //  e^-1
    k.phi_j.at(3, 4) = eps_pow(-1);   //  e^-1/2
    k.phi_j.at(4, 3) = eps_pow(-1);   //  e^-1/2
    k.phi_j.at(4, 4) = -eps_pow(-2);  // -e^-1

    k.phi_23 = Mat5::identity();
    k.phi_23.at(2, 2) = {};
    k.phi_23.at(3, 3) = {};
    k.phi_23.at(2, 3) = one;
    k.phi_23.at(3, 2) = one;

    k.phi_13 = Mat5::identity();
    k.phi_13.at(1, 1) = {};
    k.phi_13.at(3, 3) = {};
    k.phi_13.at(1, 3) = one;
    k.phi_13.at(3, 1) = one;

    // Phi_T, transcribed as its five square slices t[i][*][*].
    Cubic5& t = k.phi_t;
    t.at(0, 0, 0) = one;
    t.at(0, 1, 1) = one;

    t.at(1, 0, 1) = one;
    t.at(1, 1, 0) = one;
    t.at(1, 1, 1) = one;

    t.at(2, 2, 3) = eps_pow(-2);
    t.at(2, 3, 2) = eps_pow(-2);
    t.at(2, 4, 4) = eps_pow(-2);

    t.at(3, 2, 2) = eps_pow(-2);
    t.at(3, 3, 3) = eps_pow(-4);
    t.at(3, 3, 4) = eps_pow(-3);
    t.at(3, 4, 3) = eps_pow(-3);
    t.at(3, 4, 4) = -eps_pow(-4);

    t.at(4, 2, 4) = eps_pow(-2);
    t.at(4, 3, 3) = eps_pow(-3);
    t.at(4, 3, 4) = -eps_pow(-4);
    t.at(4, 4, 2) = eps_pow(-2);
    t.at(4, 4, 3) = -eps_pow(-4);
    t.at(4, 4, 4) = -eps_pow(-7);

    return k;
}

}  // namespace detail

inline const SpineConstants& constants() {
    static const SpineConstants k = detail::build_constants();
    return k;
}

inline Vec5 mat_vec(const Mat5& m, const Vec5& v) {
    Vec5 r;
    for (int i = 0; i < 5; ++i) {
        GoldenNum acc;
        for (int j = 0; j < 5; ++j) acc += m.at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

/// Full contraction sum_{i,j,k} t[i,j,k] v1[i] v2[j] v3[k].
inline GoldenNum contract3(const Cubic5& t, const Vec5& v1, const Vec5& v2,
                           const Vec5& v3) {
    GoldenNum acc;
    for (int i = 0; i < 5; ++i) {
        if (v1[i].is_zero()) continue;
        for (int j = 0; j < 5; ++j) {
            if (v2[j].is_zero()) continue;
            const GoldenNum v12 = v1[i] * v2[j];
            for (int k = 0; k < 5; ++k) {
                const GoldenNum& c = t.at(i, j, k);
                if (c.is_zero() || v3[k].is_zero()) continue;
                acc += c * v12 * v3[k];
            }
        }
    }
    return acc;
}

/// Exact squared Euclidean distance between the numeric embeddings of two
/// vectors; sums of squares stay inside the ring.
inline GoldenNum sq_distance(const Vec5& u, const Vec5& v) {
    GoldenNum acc;
    for (int i = 0; i < 5; ++i) {
        const GoldenNum d = u[i] - v[i];
        acc += d * d;
    }
    return acc;
}

}  // namespace tinv
