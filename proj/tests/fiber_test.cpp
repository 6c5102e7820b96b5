#include "tinv/fiber.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace tinv;

namespace {

// Sum of the continued fraction partial quotients of alpha/beta.
std::int64_t cf_quotient_sum(std::int64_t a, std::int64_t b) {
    std::int64_t sum = 0;
    while (b != 0) {
        sum += a / b;
        const std::int64_t r = a % b;
        a = b;
        b = r;
    }
    return sum;
}

TEST(FiberWord, Examples) {
    EXPECT_TRUE(fiber_word(1, 1).empty());
    EXPECT_EQ(fiber_word(2, 1), (FiberWord{Letter::B}));
    EXPECT_EQ(fiber_word(5, 2), (FiberWord{Letter::A, Letter::B, Letter::B}));
    EXPECT_EQ(word_string(fiber_word(5, 2)), "ABB");
}

TEST(FiberWord, RejectsBadInput) {
    EXPECT_THROW(fiber_word(2, 4), std::domain_error);
    EXPECT_THROW(fiber_word(0, 1), std::domain_error);
    EXPECT_THROW(fiber_word(-3, 2), std::domain_error);
}

TEST(FiberWord, RoundTripOnAllCoprimePairs) {
    for (std::int64_t a = 1; a <= 500; ++a)
        for (std::int64_t b = 1; b <= 500; ++b) {
            if (std::gcd(a, b) != 1) continue;
            EXPECT_EQ(apply_word(fiber_word(a, b)), std::make_pair(a, b));
        }
}

TEST(FiberWord, LengthMatchesContinuedFraction) {
    for (std::int64_t a = 1; a <= 80; ++a)
        for (std::int64_t b = 1; b <= 80; ++b) {
            if (std::gcd(a, b) != 1) continue;
            EXPECT_EQ(static_cast<std::int64_t>(fiber_word(a, b).size()),
                      cf_quotient_sum(a, b) - 1)
                << a << "/" << b;
        }
}

TEST(FiberClass, Canonicalization) {
    EXPECT_EQ(class_of(7, 3), (FiberClass{2, 3}));
    EXPECT_EQ(class_of(4, 1), (FiberClass{1, 4}));
    EXPECT_EQ(class_of(0, 7), (FiberClass{0, 2}));
    EXPECT_EQ(class_of(-1, 2), (FiberClass{1, 3}));
    EXPECT_EQ(class_of(6, 1), (FiberClass{1, 1}));
}

TEST(FiberClass, NegationInvariance) {
    for (int l = -10; l <= 10; ++l)
        for (int m = -10; m <= 10; ++m) {
            if (l % 5 == 0 && m % 5 == 0) continue;
            EXPECT_EQ(class_of(l, m), class_of(-l, -m));
            const FiberClass c = class_of(l, m);
            EXPECT_GE(c.lambda, 0);
            EXPECT_LE(c.lambda, 2);
        }
}

TEST(FiberClass, RejectsZeroClass) {
    EXPECT_THROW(class_of(0, 0), std::domain_error);
    EXPECT_THROW(class_of(5, 10), std::domain_error);
}

TEST(FiberClass, CanonicalListAndRepresentatives) {
    EXPECT_EQ(all_classes().size(), 12u);
    for (int i = 0; i < 12; ++i) {
        const FiberClass c = all_classes()[static_cast<std::size_t>(i)];
        EXPECT_EQ(class_index(c), i);
        const auto [a, b] = class_representative(c);
        EXPECT_EQ(std::gcd(a, b), 1);
        EXPECT_EQ(class_of(a, b), c);
    }
    const auto rep = [](int l, int m) { return class_representative(FiberClass{l, m}); };
    EXPECT_EQ(rep(0, 1), (std::pair<std::int64_t, std::int64_t>{5, 1}));
    EXPECT_EQ(rep(0, 2), (std::pair<std::int64_t, std::int64_t>{5, 2}));
    EXPECT_EQ(rep(1, 1), (std::pair<std::int64_t, std::int64_t>{1, 1}));
    EXPECT_EQ(rep(2, 1), (std::pair<std::int64_t, std::int64_t>{2, 1}));
}

}  // namespace
