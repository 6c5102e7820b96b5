#include "tinv/seifert.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace tinv;

namespace {

SeifertPresentation pres(std::int64_t b, Fiber f1, Fiber f2, Fiber f3) {
    SeifertPresentation p;
    p.b = b;
    p.fibers = {f1, f2, f3};
    return p;
}

// Lens value computed the long way round, through its own degenerate
// presentation; used as the independent factor in the multiplicativity test.
GoldenNum lens_value(Fiber f) {
    return t_invariant(pres(-1, f, {0, 1}, {1, 1}));
}

TEST(Parse, AcceptsCanonicalAndPaddedForms) {
    const SeifertPresentation p = parse_presentation("-1; (2,1) (2,1) (3,2)");
    EXPECT_EQ(p.b, -1);
    EXPECT_EQ(p.fibers[2], (Fiber{3, 2}));
    EXPECT_EQ(p.to_string(), "-1; (2,1) (2,1) (3,2)");

    const SeifertPresentation two = parse_presentation("0; (2,1) (2,1)");
    EXPECT_EQ(two.fibers[2], (Fiber{1, 0}));

    // round trip on the canonical rendering
    EXPECT_EQ(parse_presentation(p.to_string()).to_string(), p.to_string());
    // whitespace is free
    EXPECT_EQ(parse_presentation(" -1 ;( 2 , 1 )  (2,1)(3,2) "), p);
}

TEST(Parse, ReportsColumnAndFiber) {
    try {
        parse_presentation("-1: (2,1) (2,1) (3,2)");
        FAIL() << "expected syntax error";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("column 3"), std::string::npos) << e.what();
    }
    try {
        parse_presentation("-1; (2,2) (2,1) (3,2)");
        FAIL() << "expected coprimality error";
    } catch (const std::domain_error& e) {
        EXPECT_NE(std::string(e.what()).find("fiber 1"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_presentation("-1; (2,1)"), std::invalid_argument);
    EXPECT_THROW(parse_presentation("-1; (2,1) (2,1) (2,1) (2,1)"),
                 std::invalid_argument);
    EXPECT_THROW(parse_presentation("-1; (0,0) (2,1) (2,1)"), std::domain_error);
}

TEST(Normalize, Examples) {
    EXPECT_EQ(normalize(pres(0, {2, 1}, {3, 1}, {5, 4})),
              pres(-1, {2, 1}, {3, 1}, {5, 9}));
    EXPECT_EQ(normalize(pres(-1, {2, 1}, {2, 1}, {2, 1})),
              pres(-1, {2, 1}, {2, 1}, {2, 1}));
    EXPECT_EQ(normalize(pres(-2, {3, 2}, {4, 3}, {5, 1})),
              pres(-1, {3, 2}, {4, 3}, {5, -4}));
    // negative alpha flips; alpha = 0 passes through, b lands in a real fiber
    EXPECT_EQ(normalize(pres(1, {-2, 1}, {0, 1}, {3, 1})),
              pres(-1, {2, -1}, {0, 1}, {3, 7}));
}

TEST(Normalize, PreservesTheEulerNumber) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> ad(1, 9), bd(-9, 9), b0(-6, 6);
    int done = 0;
    while (done < 500) {
        SeifertPresentation p;
        p.b = b0(rng);
        bool ok = true;
        for (Fiber& f : p.fibers) {
            f.alpha = ad(rng);
            f.beta = bd(rng);
            ok = ok && std::gcd(std::llabs(f.alpha), std::llabs(f.beta)) == 1;
        }
        if (!ok) continue;
        ++done;
        const SeifertPresentation n = normalize(p);
        EXPECT_EQ(n.b, -1);
        EXPECT_EQ(euler_number(p), euler_number(n));
    }
}

TEST(TInvariant, ComparisonTableValues) {
    EXPECT_EQ(t_invariant(parse_presentation("-1; (2,1) (2,1) (2,1)")), GoldenNum(3, 1));
    EXPECT_EQ(t_invariant(parse_presentation("-1; (2,1) (2,1) (4,1)")), GoldenNum(1));
    EXPECT_EQ(t_invariant(parse_presentation("-1; (2,1) (2,1) (3,1)")), GoldenNum(3, 1));
    EXPECT_EQ(t_invariant(parse_presentation("-1; (2,1) (2,1) (5,1)")), GoldenNum(2, 3));
    EXPECT_EQ(t_invariant(parse_presentation("-1; (2,1) (2,1) (3,2)")), GoldenNum(3, 2));
    EXPECT_EQ(t_invariant(parse_presentation("-1; (2,1) (2,1) (5,2)")), GoldenNum(2, -1));
    // lens anchor through the degenerate presentation
    EXPECT_EQ(t_invariant(pres(-1, {5, 2}, {0, 1}, {1, 1})), GoldenNum(0));
}

TEST(TInvariant, InvariantUnderPresentationMoves) {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::int64_t> ad(1, 9), bd(-9, 9), b0(-4, 4);
    std::uniform_int_distribution<std::int64_t> kd(-3, 3);
    std::uniform_int_distribution<int> fd(0, 2), coin(0, 1);
    int done = 0;
    while (done < 500) {
        SeifertPresentation p;
        p.b = b0(rng);
        bool ok = true;
        for (Fiber& f : p.fibers) {
            f.alpha = ad(rng);
            f.beta = bd(rng);
            ok = ok && std::gcd(std::llabs(f.alpha), std::llabs(f.beta)) == 1;
        }
        if (!ok) continue;
        ++done;

        SeifertPresentation q = p;
        for (int move = 0; move < 6; ++move) {
            const int i = fd(rng);
            Fiber& f = q.fibers[static_cast<std::size_t>(i)];
            if (coin(rng)) {
                const std::int64_t k = kd(rng);
                f.beta += k * f.alpha;
                q.b -= k;
            } else {
                f.alpha = -f.alpha;
                f.beta = -f.beta;
            }
        }
        std::shuffle(q.fibers.begin(), q.fibers.end(), rng);

        EXPECT_EQ(t_invariant(p), t_invariant(q));
        EXPECT_EQ(t_invariant(p), t_invariant(normalize(p)));
    }
}

TEST(TInvariant, ClosedManifoldValuesLieInZEps) {
    const SweepResult s = sweep_all_classes();
    for (const auto& [triple, v] : s.table) EXPECT_TRUE(v.in_z_eps());
}

TEST(TInvariant, MultiplicativeOnConnectedSums) {
    // third fiber in class ±(0,1): the value splits as the product of the
    // two lens values, computed independently fiber by fiber
    const auto& classes = all_classes();
    for (int i = 0; i < 12; ++i)
        for (int j = i; j < 12; ++j) {
            const auto [a1, b1] = class_representative(classes[static_cast<std::size_t>(i)]);
            const auto [a2, b2] = class_representative(classes[static_cast<std::size_t>(j)]);
            const GoldenNum whole =
                t_invariant(pres(-1, {a1, b1}, {a2, b2}, {5, 1}));
            const GoldenNum split = lens_value({a1, b1}) * lens_value({a2, b2});
            EXPECT_EQ(whole, split)
                << classes[static_cast<std::size_t>(i)].to_string() << " # "
                << classes[static_cast<std::size_t>(j)].to_string();
        }
}

TEST(LensReduce, Examples) {
    EXPECT_EQ(lens_reduce(0, {2, 1}, {2, 1}).p, 4);
    const LensParams s3 = lens_reduce(0, {1, 0}, {3, 1});
    EXPECT_EQ(s3.p, 1);
    EXPECT_EQ(s3.q, 3);
    const LensParams l5 = lens_reduce(0, {2, 1}, {3, 1});
    EXPECT_EQ(l5.p, 5);
    EXPECT_EQ(l5.q, -1);
    EXPECT_THROW(lens_reduce(0, {2, 2}, {3, 1}), std::domain_error);
}

TEST(H1, TableRows) {
    const auto grp = [](std::vector<std::int64_t> t) { return AbelianGroup{std::move(t), 0}; };
    EXPECT_EQ(h1(parse_presentation("-1; (2,1) (2,1) (2,1)")), grp({2, 2}));
    EXPECT_EQ(h1(parse_presentation("-1; (2,1) (2,1) (4,1)")), grp({2, 2}));
    EXPECT_EQ(h1(parse_presentation("-1; (2,1) (2,1) (3,1)")), grp({4}));
    EXPECT_EQ(h1(parse_presentation("-1; (2,1) (2,1) (5,1)")), grp({4}));
    EXPECT_EQ(h1(parse_presentation("-1; (2,1) (2,1) (3,2)")), grp({8}));
    EXPECT_EQ(h1(parse_presentation("-1; (2,1) (2,1) (5,2)")), grp({8}));
    EXPECT_EQ(h1(parse_presentation("-1; (2,1) (2,1) (5,2)")).to_string(), "Z8");
    // a free factor: (0,1) fibers force rank
    EXPECT_EQ(h1(pres(0, {0, 1}, {0, 1}, {0, 1})).free_rank, 2);
}

TEST(Sweep, CensusMatchesTheFrozenGoldenFile) {
    const SweepResult s = sweep_all_classes();
    EXPECT_EQ(s.table.size(), 364u);
    ASSERT_EQ(s.census.size(), 12u);

    std::ifstream golden(std::string(TINV_SOURCE_DIR) +
                         "/tests/golden/sweep_distinct_values.txt");
    ASSERT_TRUE(golden.is_open());
    std::string line;
    std::size_t row = 0;
    while (std::getline(golden, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::int64_t a, b, c, d;
        int count;
        ASSERT_TRUE(static_cast<bool>(is >> a >> b >> c >> d >> count));
        ASSERT_LT(row, s.census.size());
        EXPECT_EQ(s.census[row].first, GoldenNum(a, b, c, d)) << "row " << row;
        EXPECT_EQ(s.census[row].second, count) << "row " << row;
        ++row;
    }
    EXPECT_EQ(row, 12u);
}

TEST(Sweep, TableIsKeyedByUnorderedTriples) {
    const SweepResult s = sweep_all_classes();
    const ClassTriple t = ClassTriple::of({2, 1}, {0, 1}, {1, 1});
    EXPECT_EQ(ClassTriple::of({0, 1}, {1, 1}, {2, 1}), t);
    EXPECT_EQ(sweep_value(s, t), GoldenNum(1, 1));  // t(RP^3)
}

}  // namespace
