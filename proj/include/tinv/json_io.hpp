// JSON views of the core types (nlohmann::json adapters).  Values carry the
// exact coefficient quadruple plus a convenience float embedding.

#pragma once

#include <json.hpp>

#include "tinv/closed_form.hpp"
#include "tinv/selfcheck.hpp"

namespace tinv {

inline void to_json(nlohmann::json& j, const GoldenNum& x) {
    j = nlohmann::json{
        {"a", x.a()}, {"b", x.b()}, {"c", x.c()}, {"d", x.d()}, {"float", x.to_real()}};
}

inline void to_json(nlohmann::json& j, const Vec5& v) {
    j = nlohmann::json::array();
    for (int i = 0; i < 5; ++i) j.push_back(v[i]);
}

inline void to_json(nlohmann::json& j, const Mat5& m) {
    j = nlohmann::json::array();
    for (int i = 0; i < 5; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < 5; ++k) row.push_back(m.at(i, k));
        j.push_back(row);
    }
}

inline void to_json(nlohmann::json& j, const Cubic5& t) {
    j = nlohmann::json::array();
    for (int i = 0; i < 5; ++i) {
        nlohmann::json slice = nlohmann::json::array();
        for (int k = 0; k < 5; ++k) {
            nlohmann::json row = nlohmann::json::array();
            for (int l = 0; l < 5; ++l) row.push_back(t.at(i, k, l));
            slice.push_back(row);
        }
        j.push_back(slice);
    }
}

inline void to_json(nlohmann::json& j, const FiberClass& c) {
    j = nlohmann::json{{"lambda", c.lambda}, {"mu", c.mu}};
}

inline void to_json(nlohmann::json& j, const LabeledVec& lv) {
    j = nlohmann::json{{"class", lv.cls}, {"vector", lv.vec}};
}

inline void to_json(nlohmann::json& j, const Fiber& f) {
    j = nlohmann::json{{"alpha", f.alpha}, {"beta", f.beta}};
}

inline void to_json(nlohmann::json& j, const SeifertPresentation& p) {
    j = nlohmann::json{{"b", p.b}, {"fibers", p.fibers}, {"text", p.to_string()}};
}

inline void to_json(nlohmann::json& j, const AbelianGroup& g) {
    j = nlohmann::json{
        {"torsion", g.torsion}, {"free_rank", g.free_rank}, {"text", g.to_string()}};
}

inline void to_json(nlohmann::json& j, const TheoremCase& c) {
    j = nlohmann::json{{"case", case_name(c.tag)}, {"classes", c.classes}};
    switch (c.tag) {
        case TheoremCaseTag::UnitFiber:
            j["lens"] = {{"p", c.lens.p}, {"q", c.lens.q}};
            break;
        case TheoremCaseTag::ZeroTwoFibers:
            j["n"] = c.n;
            break;
        case TheoremCaseTag::AllTwos:
            j["k"] = c.k;
            break;
        default:
            break;
    }
}

inline void to_json(nlohmann::json& j, const ConventionStats& st) {
    j = nlohmann::json{{"convention", convention_name(st.convention)},
                       {"matched", st.matched},
                       {"total", st.total},
                       {"unit_fiber_matched", st.unit_matched},
                       {"unit_fiber_total", st.unit_total},
                       {"full_match", st.full_match()}};
    nlohmann::json ex = nlohmann::json::array();
    for (const ConventionMismatch& m : st.examples) {
        nlohmann::json o{{"classes", m.triple.c}, {"tensor", m.tensor}};
        if (m.closed) o["closed"] = *m.closed;
        else o["closed"] = nullptr;
        ex.push_back(o);
    }
    j["mismatches"] = ex;
}

inline void to_json(nlohmann::json& j, const ReconcileReport& r) {
    j = nlohmann::json{{"conventions", r.stats},
                       {"frozen_convention", convention_name(kFrozenConvention)},
                       {"frozen_is_selected", r.frozen_is_selected}};
    if (r.selected) j["selected"] = convention_name(*r.selected);
    nlohmann::json devs = nlohmann::json::array();
    for (const LensTableDeviation& d : r.lens_table_deviations)
        devs.push_back(nlohmann::json{{"residue", d.residue},
                                      {"published", d.published},
                                      {"shipped", d.shipped},
                                      {"witness", d.witness},
                                      {"tensor_value", d.tensor_value}});
    j["lens_table_deviations"] = devs;
}

inline void to_json(nlohmann::json& j, const CriterionResult& r) {
    j = nlohmann::json{{"id", r.id},
                       {"name", r.name},
                       {"passed", r.passed},
                       {"detail", r.detail},
                       {"millis", r.millis}};
}

}  // namespace tinv
