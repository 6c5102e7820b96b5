// Exact arithmetic in the ring Z[e, s] with e^2 = e + 1 and s^2 = e,
// i.e. e is the golden ratio and s its positive square root.
//
// Every element has a unique normal form
//
//     a + b*e + (c + d*e)*s        a, b, c, d integers
//
// over the basis {1, e, s, e*s}, so equality is componentwise and hashing
// is trivial.  All coefficients stay tiny in this project; arithmetic is
// checked and an overflow throws std::overflow_error (it indicates a logic
// error, not a need for big integers).

#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tinv {

namespace detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("golden ring: integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("golden ring: integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("golden ring: integer overflow in multiplication");
    return r;
}

}  // namespace detail

class GoldenNum {
public:
    constexpr GoldenNum() = default;
    constexpr GoldenNum(std::int64_t a, std::int64_t b = 0, std::int64_t c = 0,
                        std::int64_t d = 0)
        : a_(a), b_(b), c_(c), d_(d) {}

    static constexpr GoldenNum eps() { return {0, 1, 0, 0}; }
    static constexpr GoldenNum sqrt_eps() { return {0, 0, 1, 0}; }

    constexpr std::int64_t a() const { return a_; }
    constexpr std::int64_t b() const { return b_; }
    constexpr std::int64_t c() const { return c_; }
    constexpr std::int64_t d() const { return d_; }

    constexpr bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }

    /// True when the s-components vanish, i.e. the value lies in Z[e].
    constexpr bool in_z_eps() const { return c_ == 0 && d_ == 0; }

    friend constexpr bool operator==(const GoldenNum&, const GoldenNum&) = default;

    // Lexicographic order on the coefficient quadruple.  This is an arbitrary
    // total order (not the numeric one); it exists so values can key std::map.
    friend constexpr auto operator<=>(const GoldenNum&, const GoldenNum&) = default;

    friend GoldenNum operator+(const GoldenNum& x, const GoldenNum& y) {
        using detail::checked_add;
        return {checked_add(x.a_, y.a_), checked_add(x.b_, y.b_),
                checked_add(x.c_, y.c_), checked_add(x.d_, y.d_)};
    }

    friend GoldenNum operator-(const GoldenNum& x, const GoldenNum& y) {
        using detail::checked_sub;
        return {checked_sub(x.a_, y.a_), checked_sub(x.b_, y.b_),
                checked_sub(x.c_, y.c_), checked_sub(x.d_, y.d_)};
    }

    friend GoldenNum operator-(const GoldenNum& x) {
        using detail::checked_sub;
        return {checked_sub(0, x.a_), checked_sub(0, x.b_), checked_sub(0, x.c_),
                checked_sub(0, x.d_)};
    }

    // Write x = x1 + y1*s and y = x2 + y2*s with x1, y1, x2, y2 in Z[e].
    // Since s^2 = e,
    //     x*y = (x1*x2 + y1*y2*e) + (x1*y2 + x2*y1)*s,
    // and products in Z[e] reduce by e^2 = e + 1.
    friend GoldenNum operator*(const GoldenNum& x, const GoldenNum& y) {
        const ZEps x1{x.a_, x.b_}, y1{x.c_, x.d_};
        const ZEps x2{y.a_, y.b_}, y2{y.c_, y.d_};
        const ZEps r1 = zadd(zmul(x1, x2), zmul_eps(zmul(y1, y2)));
        const ZEps r2 = zadd(zmul(x1, y2), zmul(x2, y1));
        return {r1.a, r1.b, r2.a, r2.b};
    }

    GoldenNum& operator+=(const GoldenNum& y) { return *this = *this + y; }
    GoldenNum& operator-=(const GoldenNum& y) { return *this = *this - y; }
    GoldenNum& operator*=(const GoldenNum& y) { return *this = *this * y; }

    /// Numeric embedding with e -> (1+sqrt 5)/2 and s -> its positive root.
    double to_real() const {
        static const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        static const double sqrt_phi = std::sqrt(phi);
        return static_cast<double>(a_) + static_cast<double>(b_) * phi +
               (static_cast<double>(c_) + static_cast<double>(d_) * phi) * sqrt_phi;
    }

    /// Human format "a + b·e + (c + d·e)·s" with zero terms suppressed.
    std::string to_string() const;

    /// Machine format: the raw coefficient quadruple "(a,b,c,d)".
    std::string machine() const {
        std::ostringstream os;
        os << '(' << a_ << ',' << b_ << ',' << c_ << ',' << d_ << ')';
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const GoldenNum& x) {
        return os << x.to_string();
    }

private:
    struct ZEps {
        std::int64_t a, b;  // a + b*e
    };
    static ZEps zadd(ZEps p, ZEps q) {
        return {detail::checked_add(p.a, q.a), detail::checked_add(p.b, q.b)};
    }
    // (a + b e)(c + d e) = (ac + bd) + (ad + bc + bd) e
    static ZEps zmul(ZEps p, ZEps q) {
        using detail::checked_add;
        using detail::checked_mul;
        const std::int64_t ac = checked_mul(p.a, q.a);
        const std::int64_t bd = checked_mul(p.b, q.b);
        const std::int64_t ad = checked_mul(p.a, q.b);
        const std::int64_t bc = checked_mul(p.b, q.a);
        return {checked_add(ac, bd), checked_add(checked_add(ad, bc), bd)};
    }
    static ZEps zmul_eps(ZEps p) { return zmul(p, ZEps{0, 1}); }

    std::int64_t a_{0}, b_{0}, c_{0}, d_{0};
};

/// e^(half_steps/2), exact for any sign.  Negative powers use the unit
/// inverse e^-1 = e - 1; odd exponents pick up one factor of s, with
/// e^(-1/2) = (e - 1)*s.
inline GoldenNum eps_pow(int half_steps) {
    GoldenNum r{1};
    if (half_steps >= 0) {
        const GoldenNum e = GoldenNum::eps();
        for (int i = 0; i < half_steps / 2; ++i) r *= e;
        if (half_steps % 2 != 0) r *= GoldenNum::sqrt_eps();
    } else {
        const GoldenNum e_inv{-1, 1};
        const int n = -half_steps;
        for (int i = 0; i < n / 2; ++i) r *= e_inv;
        if (n % 2 != 0) r *= e_inv * GoldenNum::sqrt_eps();
    }
    return r;
}

inline std::string GoldenNum::to_string() const {
    // Renders a Z[e] pair as a signed term list; used for both halves.
    auto zeps = [](std::int64_t u, std::int64_t v) {
        std::string out;
        if (u != 0) out += std::to_string(u);
        if (v != 0) {
            if (!out.empty()) out += (v > 0) ? " + " : " - ";
            else if (v < 0) out += "-";
            const std::int64_t av = (v > 0) ? v : -v;
            if (av != 1) out += std::to_string(av) + "·";
            out += "e";
        }
        return out;
    };

    const std::string head = zeps(a_, b_);
    std::string tail;
    if (c_ != 0 || d_ != 0) {
        if (c_ == 1 && d_ == 0) tail = "s";
        else if (c_ == -1 && d_ == 0) tail = "-s";
        else tail = "(" + zeps(c_, d_) + ")·s";
    }
    if (head.empty() && tail.empty()) return "0";
    if (head.empty()) return tail;
    if (tail.empty()) return head;
    if (tail.front() == '-') return head + " - " + tail.substr(1);
    return head + " + " + tail;
}

}  // namespace tinv
