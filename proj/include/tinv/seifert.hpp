// Seifert presentations over the 2-sphere with three exceptional fibers:
// the data model, the normalization moves, the tensor-route invariant, the
// lens-space reduction, and first homology via Smith normal form.
//
// A presentation is an integer b plus three coprime pairs (alpha_i, beta_i).
// The moves
//
//     beta_i -> beta_i + k*alpha_i,   b -> b - k
//
// preserve the manifold (they keep the rational Euler number
// b + sum beta_i/alpha_i fixed), as does flipping one fiber's overall sign.
// Normalizing to b = -1 and reducing each fiber mod 5 up to sign turns the
// invariant into a single contraction of the cubic constant against the
// three class vectors.

#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tinv/orbit.hpp"
#include "tinv/smith.hpp"

namespace tinv {

struct Fiber {
    std::int64_t alpha = 0;
    std::int64_t beta = 0;

    friend bool operator==(const Fiber&, const Fiber&) = default;
};

struct SeifertPresentation {
    std::int64_t b = 0;
    std::array<Fiber, 3> fibers{};

    friend bool operator==(const SeifertPresentation&, const SeifertPresentation&) = default;

    /// Checks the fiber invariants: gcd(|alpha|, |beta|) = 1 (so (0, ±1) is
    /// the only alpha = 0 form) and no fiber entirely zero.
    void validate() const {
        for (int i = 0; i < 3; ++i) {
            const Fiber& f = fibers[static_cast<std::size_t>(i)];
            if (f.alpha == 0 && f.beta == 0)
                throw std::domain_error("fiber " + std::to_string(i + 1) + " is zero");
            if (std::gcd(std::llabs(f.alpha), std::llabs(f.beta)) != 1)
                throw std::domain_error("fiber " + std::to_string(i + 1) + " not coprime");
        }
    }

    std::string to_string() const {
        std::ostringstream os;
        os << b << ';';
        for (const Fiber& f : fibers) os << " (" << f.alpha << ',' << f.beta << ')';
        return os.str();
    }
};

/// Parses "b; (a1,b1) (a2,b2) (a3,b3)" with optional whitespace.  A two-fiber
/// form "b; (a1,b1) (a2,b2)" is padded with the trivial fiber (1,0).  Syntax
/// errors carry the 1-based column position; coprimality violations name the
/// offending fiber.
inline SeifertPresentation parse_presentation(std::string_view s) {
    std::size_t pos = 0;
    const auto fail = [&](const std::string& what) {
        throw std::invalid_argument("syntax error at column " + std::to_string(pos + 1) +
                                    ": " + what);
    };
    const auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    const auto read_int = [&]() -> std::int64_t {
        skip_ws();
        const std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = 0;
        std::int64_t value = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            value = detail::checked_add(detail::checked_mul(value, 10), s[pos] - '0');
            ++pos;
            ++digits;
        }
        if (digits == 0) {
            pos = start;
            fail("expected integer");
        }
        return s[start] == '-' ? -value : value;
    };
    const auto expect = [&](char ch, const char* what) {
        skip_ws();
        if (pos >= s.size() || s[pos] != ch) fail(what);
        ++pos;
    };

    SeifertPresentation p;
    p.b = read_int();
    expect(';', "expected ';'");

    std::vector<Fiber> fibers;
    while (true) {
        skip_ws();
        if (pos >= s.size()) break;
        expect('(', "expected '('");
        Fiber f;
        f.alpha = read_int();
        expect(',', "expected ','");
        f.beta = read_int();
        expect(')', "expected ')'");
        fibers.push_back(f);
        if (fibers.size() > 3) fail("more than three fibers");
    }
    if (fibers.size() < 2) fail("expected at least two fibers");
    if (fibers.size() == 2) fibers.push_back({1, 0});
    for (int i = 0; i < 3; ++i) p.fibers[static_cast<std::size_t>(i)] = fibers[static_cast<std::size_t>(i)];
    p.validate();
    return p;
}

/// Rational Euler number b + sum beta_i/alpha_i as a reduced fraction;
/// fibers with alpha = 0 are skipped (they have no Euler contribution).
inline std::pair<std::int64_t, std::int64_t> euler_number(const SeifertPresentation& p) {
    std::int64_t num = p.b, den = 1;
    for (const Fiber& f : p.fibers) {
        if (f.alpha == 0) continue;
        num = detail::checked_add(detail::checked_mul(num, f.alpha),
                                  detail::checked_mul(f.beta, den));
        den = detail::checked_mul(den, f.alpha);
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(std::llabs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

/// Equivalent presentation with b = -1: fibers with alpha < 0 are sign
/// flipped, then b is absorbed into the last fiber with alpha != 0 by a
/// beta shift.  Fibers with alpha = 0 pass through unchanged; if no fiber
/// can absorb b (all alpha = 0, a connected sum of sphere bundles whose
/// manifold does not depend on b), b is left as is.
inline SeifertPresentation normalize(const SeifertPresentation& p) {
    p.validate();
    SeifertPresentation r = p;
    for (Fiber& f : r.fibers)
        if (f.alpha < 0) {
            f.alpha = -f.alpha;
            f.beta = -f.beta;
        }
    for (int i = 2; i >= 0; --i) {
        Fiber& f = r.fibers[static_cast<std::size_t>(i)];
        if (f.alpha != 0) {
            const std::int64_t k = detail::checked_add(r.b, 1);
            f.beta = detail::checked_add(f.beta, detail::checked_mul(k, f.alpha));
            r.b = -1;
            break;
        }
    }
    return r;
}

/// The three fiber classes of the normalized presentation.
inline std::array<FiberClass, 3> presentation_classes(const SeifertPresentation& p) {
    const SeifertPresentation n = normalize(p);
    std::array<FiberClass, 3> cs{};
    for (int i = 0; i < 3; ++i) {
        const Fiber& f = n.fibers[static_cast<std::size_t>(i)];
        cs[static_cast<std::size_t>(i)] = class_of(f.alpha, f.beta);
    }
    return cs;
}

/// The invariant by the tensor route: normalize, take the class vector of
/// each fiber, contract against the cubic constant.  This is the reference
/// path for every value, including the degenerate lens and connected-sum
/// presentations.
inline GoldenNum t_invariant(const SeifertPresentation& p) {
    const auto cs = presentation_classes(p);
    const SpineConstants& k = constants();
    return contract3(k.phi_t, class_vector(cs[0]), class_vector(cs[1]),
                     class_vector(cs[2]));
}

struct LensParams {
    std::int64_t p = 0;
    std::int64_t q = 0;

    friend bool operator==(const LensParams&, const LensParams&) = default;
};

namespace detail {

/// (lambda, mu) with a*lambda + b*mu = gcd(a, b) >= 0.
inline std::pair<std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_s, old_t};
}

}  // namespace detail

/// Lens parameters of the two-fiber presentation (b, f1, f2): b is first
/// absorbed into fiber 2, then
///
///     p = alpha1*beta2' + beta1*alpha2
///     q = alpha2*lambda - beta2'*mu      with alpha1*lambda + beta1*mu = 1.
///
/// q is well defined modulo p, which is all the lens space retains.
inline LensParams lens_reduce(std::int64_t b, Fiber f1, Fiber f2) {
    if (std::gcd(std::llabs(f1.alpha), std::llabs(f1.beta)) != 1 ||
        std::gcd(std::llabs(f2.alpha), std::llabs(f2.beta)) != 1)
        throw std::domain_error("lens_reduce: fibers must be coprime pairs");
    using detail::checked_add;
    using detail::checked_mul;
    const std::int64_t beta2 = checked_add(f2.beta, checked_mul(b, f2.alpha));
    const std::int64_t p =
        checked_add(checked_mul(f1.alpha, beta2), checked_mul(f1.beta, f2.alpha));
    const auto [lambda, mu] = detail::extended_gcd(f1.alpha, f1.beta);
    const std::int64_t q =
        checked_add(checked_mul(f2.alpha, lambda), -checked_mul(beta2, mu));
    return {p, q};
}

struct AbelianGroup {
    std::vector<std::int64_t> torsion;  // invariant factors >= 2, each dividing the next
    int free_rank = 0;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

    std::string to_string() const {
        std::string out;
        for (std::int64_t t : torsion) {
            if (!out.empty()) out += " x ";
            out += "Z" + std::to_string(t);
        }
        for (int i = 0; i < free_rank; ++i) {
            if (!out.empty()) out += " x ";
            out += "Z";
        }
        return out.empty() ? "0" : out;
    }
};

/// First homology from the 4x4 relation matrix
///
///     [ alpha1   0       0      beta1 ]
///     [ 0        alpha2  0      beta2 ]
///     [ 0        0       alpha3 beta3 ]
///     [ 1        1       1      -b    ]
///
/// (generators q1, q2, q3, h; each fiber gives alpha_i q_i + beta_i h = 0 and
/// the section gives q1 + q2 + q3 = b h).
inline AbelianGroup h1(const SeifertPresentation& p) {
    p.validate();
    IntMatrix m = {{p.fibers[0].alpha, 0, 0, p.fibers[0].beta},
                   {0, p.fibers[1].alpha, 0, p.fibers[1].beta},
                   {0, 0, p.fibers[2].alpha, p.fibers[2].beta},
                   {1, 1, 1, -p.b}};
    const std::vector<std::int64_t> diag = smith_normal_form(std::move(m));
    AbelianGroup g;
    for (std::int64_t d : diag) {
        if (d == 0) ++g.free_rank;
        else if (d > 1) g.torsion.push_back(d);
    }
    return g;
}

/// Unordered class triple, stored sorted; key of the sweep table.
struct ClassTriple {
    std::array<FiberClass, 3> c{};

    static ClassTriple of(FiberClass a, FiberClass b, FiberClass d) {
        std::array<FiberClass, 3> t{a, b, d};
        if (t[0] > t[1]) std::swap(t[0], t[1]);
        if (t[1] > t[2]) std::swap(t[1], t[2]);
        if (t[0] > t[1]) std::swap(t[0], t[1]);
        return {t};
    }

    friend bool operator==(const ClassTriple&, const ClassTriple&) = default;
    friend auto operator<=>(const ClassTriple&, const ClassTriple&) = default;

    std::string to_string() const {
        return c[0].to_string() + " " + c[1].to_string() + " " + c[2].to_string();
    }
};

struct SweepResult {
    std::vector<std::pair<ClassTriple, GoldenNum>> table;  // canonical key order
    std::vector<std::pair<GoldenNum, int>> census;         // value -> multiplicity,
                                                           // ascending numeric value
    std::size_t distinct_count() const { return census.size(); }
};

/// Evaluates the contraction over all 364 unordered class triples.
inline SweepResult sweep_all_classes() {
    SweepResult out;
    std::map<GoldenNum, int> census;
    const SpineConstants& k = constants();
    const auto& classes = all_classes();
    for (int i = 0; i < 12; ++i)
        for (int j = i; j < 12; ++j)
            for (int l = j; l < 12; ++l) {
                const FiberClass ci = classes[static_cast<std::size_t>(i)];
                const FiberClass cj = classes[static_cast<std::size_t>(j)];
                const FiberClass cl = classes[static_cast<std::size_t>(l)];
                const GoldenNum v = contract3(k.phi_t, class_vector(ci),
                                              class_vector(cj), class_vector(cl));
                out.table.emplace_back(ClassTriple::of(ci, cj, cl), v);
                ++census[v];
            }
    out.census.assign(census.begin(), census.end());
    std::sort(out.census.begin(), out.census.end(),
              [](const auto& x, const auto& y) {
                  return x.first.to_real() < y.first.to_real();
              });
    return out;
}

/// Sweep-table lookup helper.
inline const GoldenNum& sweep_value(const SweepResult& s, const ClassTriple& t) {
    for (const auto& [key, v] : s.table)
        if (key == t) return v;
    throw std::logic_error("sweep_value: triple not in table");
}

}  // namespace tinv
