// Closed-form evaluation of the invariant: the four-case classification of a
// presentation by its fiber classes, the lens-space value table, and the
// reconciliation of both against the tensor route.
//
// The value of a presentation depends only on the multiset of its three
// fiber classes (after normalizing b to -1).  Working at the class level,
// with the canonical sign representative of each class (lambda in {0,1,2}):
//
//   UnitFiber     some class (1, mu):  the manifold is a lens space; reduce
//                 and look the value up in the lens table.
//   ZeroOneFiber  some class (0, 1):   connected sum; the value is the
//                 product of the two lens values of the other fibers.
//   ZeroTwoFibers n >= 1 classes (0, 2), the rest lambda = 2:
//                 value 2-e, 3-e, 5 for n = 1, 2, 3.
//   AllTwos       all classes (2, mu): value depends on
//                 k = -(1 + 2*(mu1+mu2+mu3)) mod 5 only:
//                 e+2 (k=0), 2e+3 (k=+-1), e+3 (k=+-2).
//
// The shipped lens table is the one forced by the cross-checked anchor
// values t(S^3) = 1, t(RP^3) = e+1, t(S^2 x S^1) = e+2, t(L_{5,2}) = 0; an
// alternative published table disagrees with those anchors, and the
// discrepancy report below records the difference with witnesses.
//
// The UnitFiber reduction formula admits several sign/orientation readings;
// they are enumerated as Convention values, scored against the tensor route
// by reconcile(), and the single fully-agreeing one is frozen as the
// default.

#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tinv/seifert.hpp"

namespace tinv {

enum class TheoremCaseTag { UnitFiber, ZeroOneFiber, AllTwos, ZeroTwoFibers };

inline const char* case_name(TheoremCaseTag t) {
    switch (t) {
        case TheoremCaseTag::UnitFiber: return "UnitFiber";
        case TheoremCaseTag::ZeroOneFiber: return "ZeroOneFiber";
        case TheoremCaseTag::AllTwos: return "AllTwos";
        case TheoremCaseTag::ZeroTwoFibers: return "ZeroTwoFibers";
    }
    return "?";
}

/// Sign/orientation readings of the UnitFiber lens reduction.  With the
/// distinguished fiber replaced by its class representative (1, m3) and
/// b = -1, the candidate formulas for the lens parameter p are
///
///   FoldPlus          p = a1*b2 + a2*b1 + a1*a2*(b3 + b)   q from the
///                     two-fiber reduction after absorbing b + b3 (the
///                     step-by-step composition of the presentation moves)
///   TheoremLiteral    p = a1*b2 - a2*b1 + a1*a2*(b3 - b)   q = a1*l + b1*m,
///                     a2*l + b2*m = 1
///   TheoremSignFlip   as TheoremLiteral but with + a2*b1
///   TheoremOrientFlip as TheoremLiteral but with (b3 + b)
enum class Convention { FoldPlus, TheoremLiteral, TheoremSignFlip, TheoremOrientFlip };

inline constexpr std::array<Convention, 4> all_conventions() {
    return {Convention::FoldPlus, Convention::TheoremLiteral,
            Convention::TheoremSignFlip, Convention::TheoremOrientFlip};
}

inline const char* convention_name(Convention c) {
    switch (c) {
        case Convention::FoldPlus: return "fold-plus";
        case Convention::TheoremLiteral: return "theorem-literal";
        case Convention::TheoremSignFlip: return "theorem-sign-flip";
        case Convention::TheoremOrientFlip: return "theorem-orient-flip";
    }
    return "?";
}

inline std::optional<Convention> convention_from_name(std::string_view name) {
    for (Convention c : all_conventions())
        if (name == convention_name(c)) return c;
    return std::nullopt;
}

// Selected by reconcile() against the tensor route: fold-plus is the only
// reading that agrees on every class triple of the sweep (see the
// discrepancy report emitted by the sweep command).
inline constexpr Convention kFrozenConvention = Convention::FoldPlus;

/// Lens-space value of L_{p,q}.  Depends only on the residues of p (and of
/// q when 5 | p) up to sign:
///
///     p = +-1 (mod 5)            -> 1
///     p = +-2 (mod 5)            -> e + 1
///     p =   0 (mod 5), q = +-1   -> e + 2
///     p =   0 (mod 5), q = +-2   -> 0
inline GoldenNum lens_t(std::int64_t p, std::int64_t q) {
    auto residue = [](std::int64_t x) {
        int r = static_cast<int>(((x % 5) + 5) % 5);
        return r > 2 ? 5 - r : r;
    };
    const int pr = residue(p);
    if (pr == 1) return GoldenNum{1};
    if (pr == 2) return GoldenNum{1, 1};
    const int qr = residue(q);
    if (qr == 1) return GoldenNum{2, 1};
    if (qr == 2) return GoldenNum{0};
    throw std::domain_error("lens_t: p and q both divisible by 5");
}

struct TheoremCase {
    TheoremCaseTag tag{};
    std::array<FiberClass, 3> classes{};  // canonical classes, sorted
    int distinguished = -1;               // index of the case-defining fiber, if any
    int n = 0;                            // ZeroTwoFibers: count of (0,2) classes
    int k = 0;                            // AllTwos: residue in {0, 1, 2}
    LensParams lens{};                    // UnitFiber: reduced lens parameters
};

namespace detail {

inline LensParams unit_fiber_lens(const std::array<FiberClass, 3>& cs, int i3,
                                  Convention conv) {
    const FiberClass c3 = cs[static_cast<std::size_t>(i3)];
    std::array<FiberClass, 2> rest{};
    int w = 0;
    for (int i = 0; i < 3; ++i)
        if (i != i3) rest[static_cast<std::size_t>(w++)] = cs[static_cast<std::size_t>(i)];

    const auto [a1, b1] = class_representative(rest[0]);
    const auto [a2, b2] = class_representative(rest[1]);
    const std::int64_t b3 = c3.mu;  // representative fiber (1, mu)
    const std::int64_t b = -1;

    if (conv == Convention::FoldPlus)
        return lens_reduce(b + b3, Fiber{a1, b1}, Fiber{a2, b2});

    std::int64_t p = a1 * b2 + (conv == Convention::TheoremSignFlip ? a2 * b1 : -a2 * b1);
    p += a1 * a2 * (conv == Convention::TheoremOrientFlip ? b3 + b : b3 - b);
    const auto [l, m] = extended_gcd(a2, b2);
    const std::int64_t q = a1 * l + b1 * m;
    return {p, q};
}

}  // namespace detail

/// Case selection on the class multiset, in priority order UnitFiber >
/// ZeroOneFiber > ZeroTwoFibers > AllTwos (exhaustive: a canonical class has
/// lambda in {0, 1, 2}, and lambda = 0 forces mu in {1, 2}).
inline TheoremCase classify_classes(std::array<FiberClass, 3> cs,
                                    Convention conv = kFrozenConvention) {
    std::sort(cs.begin(), cs.end());
    TheoremCase out;
    out.classes = cs;

    for (int i = 2; i >= 0; --i)
        if (cs[static_cast<std::size_t>(i)].lambda == 1) {
            out.tag = TheoremCaseTag::UnitFiber;
            out.distinguished = i;
            out.lens = detail::unit_fiber_lens(cs, i, conv);
            return out;
        }
    for (int i = 2; i >= 0; --i)
        if (cs[static_cast<std::size_t>(i)] == FiberClass{0, 1}) {
            out.tag = TheoremCaseTag::ZeroOneFiber;
            out.distinguished = i;
            return out;
        }
    int n = 0;
    for (const FiberClass& c : cs)
        if (c == FiberClass{0, 2}) ++n;
    if (n >= 1) {
        out.tag = TheoremCaseTag::ZeroTwoFibers;
        out.n = n;
        return out;
    }
    out.tag = TheoremCaseTag::AllTwos;
    int k = -(1 + 2 * (cs[0].mu + cs[1].mu + cs[2].mu)) % 5;
    k = (k + 5) % 5;
    out.k = k > 2 ? 5 - k : k;
    return out;
}

inline TheoremCase classify(const SeifertPresentation& p,
                            Convention conv = kFrozenConvention) {
    return classify_classes(presentation_classes(p), conv);
}

/// Closed-form value of a class multiset.
inline GoldenNum t_closed_classes(const std::array<FiberClass, 3>& classes,
                                  Convention conv = kFrozenConvention) {
    const TheoremCase tc = classify_classes(classes, conv);
    switch (tc.tag) {
        case TheoremCaseTag::UnitFiber:
            return lens_t(tc.lens.p, tc.lens.q);
        case TheoremCaseTag::ZeroOneFiber: {
            std::array<FiberClass, 2> rest{};
            int w = 0;
            for (int i = 0; i < 3; ++i)
                if (i != tc.distinguished)
                    rest[static_cast<std::size_t>(w++)] = tc.classes[static_cast<std::size_t>(i)];
            const auto [a1, b1] = class_representative(rest[0]);
            const auto [a2, b2] = class_representative(rest[1]);
            return lens_t(a1, b1) * lens_t(a2, b2);
        }
        case TheoremCaseTag::ZeroTwoFibers:
            switch (tc.n) {
                case 1: return GoldenNum{2, -1};
                case 2: return GoldenNum{3, -1};
                default: return GoldenNum{5};
            }
        case TheoremCaseTag::AllTwos:
            switch (tc.k) {
                case 0: return GoldenNum{2, 1};
                case 1: return GoldenNum{3, 2};
                default: return GoldenNum{3, 1};
            }
    }
    throw std::logic_error("t_closed_classes: unreachable");
}

/// Closed-form value of a presentation: the fast path cross-validated
/// against t_invariant.
inline GoldenNum t_closed(const SeifertPresentation& p,
                          Convention conv = kFrozenConvention) {
    return t_closed_classes(presentation_classes(p), conv);
}

// ---------------------------------------------------------------------------
// Reconciliation of the closed form against the tensor route.

struct ConventionMismatch {
    ClassTriple triple;
    GoldenNum tensor;
    std::optional<GoldenNum> closed;  // empty: formula produced impossible residues
};

struct ConventionStats {
    Convention convention{};
    int total = 0;
    int matched = 0;
    int unit_total = 0;
    int unit_matched = 0;
    std::vector<ConventionMismatch> examples;  // first few mismatches

    bool full_match() const { return matched == total; }
};

/// One row of the published lens table that the shipped table replaces,
/// with a concrete witness lens space and its tensor-route value.
struct LensTableDeviation {
    std::string residue;     // e.g. "p = +-2 (mod 5)"
    GoldenNum published;     // the value printed in the source table
    GoldenNum shipped;       // the anchor-derived value used here
    std::string witness;     // e.g. "L(2,1)"
    GoldenNum tensor_value;  // tensor route on the witness presentation
};

struct ReconcileReport {
    std::vector<ConventionStats> stats;      // one per convention
    std::optional<Convention> selected;      // first fully matching convention
    bool frozen_is_selected = false;
    std::vector<LensTableDeviation> lens_table_deviations;
};

namespace detail {

inline GoldenNum lens_tensor_value(std::int64_t p, std::int64_t q) {
    // L_{p,q} as the degenerate presentation (-1, (p,q), (0,1), (1,1)).
    SeifertPresentation s;
    s.b = -1;
    s.fibers = {Fiber{p, q}, Fiber{0, 1}, Fiber{1, 1}};
    return t_invariant(s);
}

}  // namespace detail

/// Compares every sweep triple against the closed form under each
/// convention, selects the fully agreeing one, and records how the shipped
/// lens table differs from the published one.  Throws std::logic_error when
/// no convention reaches full agreement.
inline ReconcileReport reconcile(const SweepResult& sweep) {
    ReconcileReport report;
    for (Convention conv : all_conventions()) {
        ConventionStats st;
        st.convention = conv;
        for (const auto& [triple, tensor] : sweep.table) {
            const TheoremCase tc = classify_classes(triple.c, conv);
            const bool unit = tc.tag == TheoremCaseTag::UnitFiber;
            std::optional<GoldenNum> closed;
            try {
                closed = t_closed_classes(triple.c, conv);
            } catch (const std::domain_error&) {
                closed = std::nullopt;
            }
            ++st.total;
            if (unit) ++st.unit_total;
            if (closed && *closed == tensor) {
                ++st.matched;
                if (unit) ++st.unit_matched;
            } else if (st.examples.size() < 5) {
                st.examples.push_back({triple, tensor, closed});
            }
        }
        if (st.full_match() && !report.selected) report.selected = conv;
        report.stats.push_back(std::move(st));
    }
    report.frozen_is_selected = report.selected == kFrozenConvention;

    // The published table rows that the anchors overturn.  Residue classes
    // p = +-1 agree; the three below do not.
    const GoldenNum eps = GoldenNum::eps();
    report.lens_table_deviations = {
        {"p = 0, q = +-1 (mod 5)", GoldenNum{0}, GoldenNum{2, 1}, "L(5,1)",
         detail::lens_tensor_value(5, 1)},
        {"p = +-2 (mod 5)", eps, GoldenNum{1, 1}, "L(2,1) = RP^3",
         detail::lens_tensor_value(2, 1)},
        {"p = 0, q = +-2 (mod 5)", GoldenNum{2, 1}, GoldenNum{0}, "L(5,2)",
         detail::lens_tensor_value(5, 2)},
    };

    if (!report.selected)
        throw std::logic_error(
            "reconcile: no convention matches the tensor route on all triples");
    return report;
}

inline std::string report_text(const ReconcileReport& r) {
    std::ostringstream os;
    os << "closed form vs tensor route, per convention:\n";
    for (const ConventionStats& st : r.stats) {
        os << "  " << convention_name(st.convention) << ": " << st.matched << "/"
           << st.total << " triples match (UnitFiber: " << st.unit_matched << "/"
           << st.unit_total << ")";
        if (st.full_match()) os << "  <- full agreement";
        os << "\n";
        for (const ConventionMismatch& m : st.examples) {
            os << "      mismatch " << m.triple.to_string() << ": tensor "
               << m.tensor.to_string() << ", closed ";
            if (m.closed) os << m.closed->to_string();
            else os << "(impossible residues)";
            os << "\n";
        }
    }
    if (r.selected)
        os << "selected convention: " << convention_name(*r.selected)
           << (r.frozen_is_selected ? " (the frozen default)" : " (DIFFERS from frozen default)")
           << "\n";
    os << "\nlens table rows where the published table disagrees with the anchors:\n";
    for (const LensTableDeviation& d : r.lens_table_deviations) {
        os << "  " << d.residue << ": published " << d.published.to_string()
           << ", shipped " << d.shipped.to_string() << "; witness " << d.witness
           << " has tensor value " << d.tensor_value.to_string() << "\n";
    }
    return os.str();
}

}  // namespace tinv
