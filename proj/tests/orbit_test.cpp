#include "tinv/orbit.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

using namespace tinv;

namespace {

// The published 12 vectors in display order, with their published labels.
struct Published {
    FiberClass cls;
    Vec5 vec;
};

std::vector<Published> published() {
    const GoldenNum one{1}, eps{0, 1};
    const GoldenNum half = eps_pow(1);
    const GoldenNum neg_inv_half = -eps_pow(-1);
    const GoldenNum neg_inv = -eps_pow(-2);
    const GoldenNum inv32 = eps_pow(-3);
    return {
        {class_of(1, 1), Vec5{{one, {}, {}, eps, {}}}},
        {class_of(1, 0), Vec5{{one, {}, eps, {}, {}}}},
        {class_of(0, 1), Vec5{{one, eps, {}, {}, {}}}},
        {class_of(1, 2), Vec5{{one, {}, one, {}, half}}},
        {class_of(2, 1), Vec5{{one, one, {}, {}, half}}},
        {class_of(1, -1), Vec5{{one, {}, {}, one, half}}},
        {class_of(1, -2), Vec5{{one, {}, one, one, neg_inv_half}}},
        {class_of(2, -1), Vec5{{one, one, {}, one, neg_inv_half}}},
        {class_of(2, -2), Vec5{{one, one, one, {}, neg_inv_half}}},
        {class_of(2, 0), Vec5{{one, one, neg_inv, one, inv32}}},
        {class_of(0, 2), Vec5{{one, neg_inv, one, one, inv32}}},
        {class_of(2, 2), Vec5{{one, one, one, neg_inv, inv32}}},
    };
}

TEST(Orbit, HasTwelveDistinctVectors) {
    const auto& o = orbit();
    std::set<Vec5> vs;
    for (const LabeledVec& lv : o) vs.insert(lv.vec);
    EXPECT_EQ(vs.size(), 12u);
}

TEST(Orbit, EqualsPublishedSetWithPublishedLabels) {
    const auto& o = orbit();
    for (const Published& p : published()) {
        const Vec5& derived = class_vector(p.cls);
        EXPECT_EQ(derived, p.vec) << "label " << p.cls.to_string();
    }
    // and nothing else
    std::set<Vec5> pub;
    for (const Published& p : published()) pub.insert(p.vec);
    for (const LabeledVec& lv : o) EXPECT_TRUE(pub.count(lv.vec)) << lv.cls.to_string();
}

TEST(Orbit, ClosedUnderBothGenerators) {
    const auto& o = orbit();
    std::set<Vec5> vs;
    for (const LabeledVec& lv : o) vs.insert(lv.vec);
    for (const LabeledVec& lv : o) {
        EXPECT_TRUE(vs.count(detail::step_vector(Letter::A, lv.vec)));
        EXPECT_TRUE(vs.count(detail::step_vector(Letter::B, lv.vec)));
    }
}

TEST(FiberVector, SmallCases) {
    // (2,1) is the single letter B: phi_13 phi_E
    EXPECT_EQ(fiber_vector(2, 1),
              mat_vec(constants().phi_13, constants().phi_e));
    // (7,3) and (2,3) share the class ±(2,3)
    EXPECT_EQ(fiber_vector(7, 3), fiber_vector(2, 3));
    // (5,1) lands on the ±(0,1) orbit vector
    EXPECT_EQ(fiber_vector(5, 1), class_vector({0, 1}));
    // the empty word falls back to the ±(1,1) vector
    EXPECT_EQ(fiber_vector(1, 1), class_vector({1, 1}));
    EXPECT_EQ(fiber_vector(6, 1), class_vector({1, 1}));
}

TEST(FiberVector, AgreesWithClassVectorOnRandomPairs) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> dist(1, 400);
    int done = 0;
    while (done < 200) {
        const std::int64_t a = dist(rng), b = dist(rng);
        if (std::gcd(a, b) != 1) continue;
        ++done;
        EXPECT_EQ(fiber_vector(a, b), class_vector(class_of(a, b))) << a << "," << b;
    }
}

TEST(FiberVector, AlwaysInOrbit) {
    std::set<Vec5> vs;
    for (const LabeledVec& lv : orbit()) vs.insert(lv.vec);
    for (std::int64_t a = 1; a <= 25; ++a)
        for (std::int64_t b = 1; b <= 25; ++b) {
            if (std::gcd(a, b) != 1) continue;
            EXPECT_TRUE(vs.count(fiber_vector(a, b))) << a << "," << b;
        }
}

TEST(PairGeometry, DeterminantExamples) {
    const auto at = [](FiberClass c) {
        return orbit()[static_cast<std::size_t>(class_index(c))];
    };
    const PairGeometry max = pair_geometry(at({1, 0}), at({2, 0}));
    EXPECT_EQ(max.det_mod5, 0);
    EXPECT_EQ(max.tier, DistanceTier::Max);

    const PairGeometry min = pair_geometry(at({1, 0}), at({0, 2}));
    EXPECT_EQ(min.det_mod5, 2);
    EXPECT_EQ(min.tier, DistanceTier::Min);

    const PairGeometry med = pair_geometry(at({1, 0}), at({0, 1}));
    EXPECT_EQ(med.det_mod5, 1);
    EXPECT_EQ(med.tier, DistanceTier::Medial);

    EXPECT_THROW(pair_geometry(at({1, 0}), at({1, 0})), std::domain_error);
}

TEST(PairGeometry, TierIsAFunctionOfTheDeterminant) {
    const auto& o = orbit();
    int count[3] = {0, 0, 0};
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j) {
            const PairGeometry g = pair_geometry(o[static_cast<std::size_t>(i)],
                                                 o[static_cast<std::size_t>(j)]);
            ++count[g.det_mod5];
            switch (g.det_mod5) {
                case 0: EXPECT_EQ(g.tier, DistanceTier::Max); break;
                case 1: EXPECT_EQ(g.tier, DistanceTier::Medial); break;
                default: EXPECT_EQ(g.tier, DistanceTier::Min); break;
            }
        }
    EXPECT_EQ(count[0], 6);   // antipodal pairs
    EXPECT_EQ(count[1], 30);
    EXPECT_EQ(count[2], 30);  // icosahedron edges
}

TEST(Orbit, OppositePairSumsAreConstant) {
    std::set<Vec5> sums;
    for (const LabeledVec& lv : orbit()) {
        const FiberClass doubled = class_of(2 * lv.cls.lambda, 2 * lv.cls.mu);
        sums.insert(lv.vec + class_vector(doubled));
    }
    EXPECT_EQ(sums.size(), 1u);
}

TEST(Trapezoids, FoundAndIncludesKnownQuadruple) {
    const auto traps = find_trapezoids();
    EXPECT_FALSE(traps.empty());
    // v(0,1) - v(1,1) = e (v(2,1) - v(1,4))
    const Trapezoid known{{0, 1}, {1, 1}, {2, 1}, {1, 4}};
    bool present = false;
    for (const Trapezoid& t : traps) present = present || t == known;
    EXPECT_TRUE(present);
    // each quadruple actually satisfies the relation
    const GoldenNum e = GoldenNum::eps();
    for (const Trapezoid& t : traps)
        EXPECT_EQ(class_vector(t.c1) - class_vector(t.c2),
                  e * (class_vector(t.c3) - class_vector(t.c4)));
}

}  // namespace
