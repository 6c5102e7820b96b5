// The orbit of the fiber vectors and its icosahedral geometry.
//
// A singular fiber (alpha, beta) contributes the vector obtained by reading
// its A/B word left to right: the first letter pastes onto Phi_E, each later
// letter pastes through one copy of Phi_J,
//
//     v = (P_n J) ... (P_2 J) (P_1 Phi_E),     P_i = Phi_23 for A, Phi_13 for B.
//
// Iterating the two generators Phi_23 Phi_J and Phi_13 Phi_J from the seeds
// Phi_23 Phi_E and Phi_13 Phi_E closes after exactly 12 vectors, one per
// residue class of (alpha, beta) mod 5 up to sign.  The closure is computed
// here together with the class labels, which are carried along the word
// transitions rather than assumed.

#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "tinv/fiber.hpp"
#include "tinv/spine.hpp"

namespace tinv {

struct LabeledVec {
    FiberClass cls;
    Vec5 vec;
};

namespace detail {

inline Vec5 seed_vector(Letter l) {
    const SpineConstants& k = constants();
    return mat_vec(l == Letter::A ? k.phi_23 : k.phi_13, k.phi_e);
}

inline Vec5 step_vector(Letter l, const Vec5& v) {
    const SpineConstants& k = constants();
    return mat_vec(l == Letter::A ? k.phi_23 : k.phi_13, mat_vec(k.phi_j, v));
}

inline std::array<LabeledVec, 12> build_orbit() {
    struct Node {
        std::int64_t alpha, beta;
        Vec5 vec;
    };
    std::map<FiberClass, Vec5> found;
    std::vector<Node> work{{1, 2, seed_vector(Letter::A)},
                           {2, 1, seed_vector(Letter::B)}};
    int steps = 0;
    while (!work.empty()) {
        if (++steps > 256)
            throw std::logic_error("orbit: closure failed to stabilize");
        const Node n = work.back();
        work.pop_back();
        const FiberClass c = class_of(n.alpha, n.beta);
        auto [it, inserted] = found.emplace(c, n.vec);
        if (!inserted) {
            if (it->second != n.vec)
                throw std::logic_error("orbit: one class reached two vectors");
            continue;
        }
        if (found.size() > 12)
            throw std::logic_error("orbit: closure exceeded 12 vectors");
        // A: (x,y) -> (x, x+y),  B: (x,y) -> (x+y, y); reduce mod 5 to keep
        // the tracked pairs small (only the class matters).
        const std::int64_t x = n.alpha % 5, y = n.beta % 5;
        work.push_back({x, x + y, step_vector(Letter::A, n.vec)});
        work.push_back({x + y, y, step_vector(Letter::B, n.vec)});
    }
    if (found.size() != 12)
        throw std::logic_error("orbit: closure has wrong size");

    std::array<LabeledVec, 12> out{};
    for (int i = 0; i < 12; ++i) {
        const FiberClass c = all_classes()[static_cast<std::size_t>(i)];
        const auto it = found.find(c);
        if (it == found.end()) throw std::logic_error("orbit: missing class");
        out[static_cast<std::size_t>(i)] = {c, it->second};
    }
    return out;
}

}  // namespace detail

/// The 12 labeled fiber vectors, in canonical class order.
inline const std::array<LabeledVec, 12>& orbit() {
    static const std::array<LabeledVec, 12> o = detail::build_orbit();
    return o;
}

/// Vector of the class, by lookup into the orbit.
inline const Vec5& class_vector(FiberClass c) {
    return orbit()[static_cast<std::size_t>(class_index(c))].vec;
}

/// Vector of a fiber computed directly from its word.  The empty word (the
/// non-singular fiber (1,1)) falls back to the orbit vector of class ±(1,1).
inline Vec5 fiber_vector(std::int64_t alpha, std::int64_t beta) {
    const FiberWord word = fiber_word(alpha, beta);
    if (word.empty()) return class_vector(FiberClass{1, 1});
    Vec5 v = detail::seed_vector(word.front());
    for (std::size_t i = 1; i < word.size(); ++i) v = detail::step_vector(word[i], v);
    return v;
}

enum class DistanceTier { Max, Medial, Min };

inline const char* tier_name(DistanceTier t) {
    switch (t) {
        case DistanceTier::Max: return "max";
        case DistanceTier::Medial: return "medial";
        case DistanceTier::Min: return "min";
    }
    return "?";
}

struct PairGeometry {
    int det_mod5;        // |lambda1*mu2 - lambda2*mu1| mod 5, in {0, 1, 2}
    DistanceTier tier;   // bucketed from the exact squared distance
    GoldenNum sq_dist;
};

namespace detail {

// The three squared distances realized between distinct orbit vectors,
// sorted descending by numeric value (Max, Medial, Min).
inline const std::array<GoldenNum, 3>& distance_levels() {
    static const std::array<GoldenNum, 3> levels = [] {
        std::vector<GoldenNum> ds;
        const auto& o = orbit();
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j) {
                const GoldenNum d = sq_distance(o[static_cast<std::size_t>(i)].vec,
                                                o[static_cast<std::size_t>(j)].vec);
                bool known = false;
                for (const GoldenNum& x : ds) known = known || x == d;
                if (!known) ds.push_back(d);
            }
        if (ds.size() != 3)
            throw std::logic_error("orbit geometry: expected exactly 3 distances");
        std::array<GoldenNum, 3> out{ds[0], ds[1], ds[2]};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (out[static_cast<std::size_t>(i)].to_real() <
                    out[static_cast<std::size_t>(j)].to_real())
                    std::swap(out[static_cast<std::size_t>(i)],
                              out[static_cast<std::size_t>(j)]);
        return out;
    }();
    return levels;
}

}  // namespace detail

inline PairGeometry pair_geometry(const LabeledVec& u, const LabeledVec& v) {
    if (u.cls == v.cls)
        throw std::domain_error("pair_geometry: classes must be distinct");
    int det = (u.cls.lambda * v.cls.mu - u.cls.mu * v.cls.lambda) % 5;
    det = (det + 5) % 5;
    if (det > 2) det = 5 - det;

    const GoldenNum d2 = sq_distance(u.vec, v.vec);
    const auto& levels = detail::distance_levels();
    DistanceTier tier;
    if (d2 == levels[0]) tier = DistanceTier::Max;
    else if (d2 == levels[1]) tier = DistanceTier::Medial;
    else if (d2 == levels[2]) tier = DistanceTier::Min;
    else throw std::logic_error("pair_geometry: distance not one of the 3 levels");
    return {det, tier, d2};
}

/// Class quadruple with v(c1) - v(c2) = e * (v(c3) - v(c4)); the two trapezium
/// bases of the icosahedron, discovered by exhaustive search.
struct Trapezoid {
    FiberClass c1, c2, c3, c4;

    friend bool operator==(const Trapezoid&, const Trapezoid&) = default;
};

inline std::vector<Trapezoid> find_trapezoids() {
    std::vector<Trapezoid> out;
    const auto& o = orbit();
    const GoldenNum e = GoldenNum::eps();
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j)
            for (int k = 0; k < 12; ++k)
                for (int l = 0; l < 12; ++l) {
                    if (i == j || k == l || (i == k && j == l)) continue;
                    const auto& vi = o[static_cast<std::size_t>(i)];
                    const auto& vj = o[static_cast<std::size_t>(j)];
                    const auto& vk = o[static_cast<std::size_t>(k)];
                    const auto& vl = o[static_cast<std::size_t>(l)];
                    if (vi.vec - vj.vec == e * (vk.vec - vl.vec))
                        out.push_back({vi.cls, vj.cls, vk.cls, vl.cls});
                }
    return out;
}

}  // namespace tinv
