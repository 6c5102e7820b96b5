// tinv — exact calculator for the order-5 integer-color Turaev-Viro
// invariant of lens spaces and small Seifert fibered spaces.
//
// Every value is computed twice: by contracting the spine tensor constants
// against the fiber class vectors, and by the closed-form case table; the
// tool exits nonzero if the two routes ever disagree.
//
// Exit codes: 0 success, 1 invalid input, 2 internal inconsistency.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tinv/json_io.hpp"

namespace {

using namespace tinv;

struct Options {
    std::string format = "text";
    std::string output;
    std::string convention = convention_name(kFrozenConvention);
    std::uint64_t seed = kDefaultSelfcheckSeed;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.output);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.output);
    f << text;
}

Convention convention_of(const Options& opt) {
    if (auto c = convention_from_name(opt.convention)) return *c;
    throw std::invalid_argument("unknown convention: " + opt.convention);
}

std::string csv_class(const FiberClass& c) {
    std::ostringstream os;
    os << "\"±(" << c.lambda << ',' << c.mu << ")\"";
    return os.str();
}

std::string rational_string(std::pair<std::int64_t, std::int64_t> r) {
    if (r.second == 1) return std::to_string(r.first);
    return std::to_string(r.first) + "/" + std::to_string(r.second);
}

std::string case_summary(const TheoremCase& tc) {
    std::ostringstream os;
    os << case_name(tc.tag);
    switch (tc.tag) {
        case TheoremCaseTag::UnitFiber:
            os << " (lens p=" << tc.lens.p << ", q=" << tc.lens.q << ")";
            break;
        case TheoremCaseTag::ZeroTwoFibers:
            os << " (n=" << tc.n << ")";
            break;
        case TheoremCaseTag::AllTwos:
            os << " (k=±" << tc.k << ")";
            break;
        default:
            break;
    }
    return os.str();
}

int cmd_compute(const Options& opt, const std::string& input) {
    const SeifertPresentation p = parse_presentation(input);
    const SeifertPresentation n = normalize(p);
    const auto classes = presentation_classes(p);
    const Convention conv = convention_of(opt);
    const GoldenNum t_tensor = t_invariant(p);
    const GoldenNum t_fast = t_closed(p, conv);
    const TheoremCase tc = classify(p, conv);
    const AbelianGroup g = h1(p);
    const bool agree = t_tensor == t_fast;

    if (opt.format == "json") {
        nlohmann::json j{{"presentation", p},
                         {"normalized", n},
                         {"classes", classes},
                         {"t", t_tensor},
                         {"t_float", t_tensor.to_real()},
                         {"t_closed", t_fast},
                         {"routes_agree", agree},
                         {"case", tc},
                         {"h1", g}};
        const auto e = euler_number(p);
        j["euler"] = {{"num", e.first}, {"den", e.second}};
        emit(opt, j.dump(2) + "\n");
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "presentation,t_a,t_b,t_float,t_closed_a,t_closed_b,routes_agree,h1\n";
        os << '"' << p.to_string() << "\"," << t_tensor.a() << ',' << t_tensor.b()
           << ',' << t_tensor.to_real() << ',' << t_fast.a() << ',' << t_fast.b()
           << ',' << (agree ? 1 : 0) << ",\"" << g.to_string() << "\"\n";
        emit(opt, os.str());
    } else {
        std::ostringstream os;
        os << "presentation:  " << p.to_string() << "\n";
        os << "normalized:    " << n.to_string() << "\n";
        os << "euler number:  " << rational_string(euler_number(p)) << "\n";
        os << "classes:       ";
        for (const FiberClass& c : classes) os << c.to_string() << ' ';
        os << "\n";
        os << "case:          " << case_summary(tc) << "\n";
        os << "t (tensor):    " << t_tensor.to_string() << "   = "
           << t_tensor.to_real() << "\n";
        os << "t (closed):    " << t_fast.to_string() << "\n";
        os << "routes agree:  " << (agree ? "yes" : "NO") << "\n";
        os << "H1:            " << g.to_string() << "\n";
        emit(opt, os.str());
    }
    if (!agree) {
        std::cerr << "error: tensor and closed-form routes disagree\n";
        return 2;
    }
    return 0;
}

int cmd_classify(const Options& opt, const std::string& input) {
    // A bare "(a,b)" or "a,b" classifies a single fiber pair.
    SeifertPresentation p;
    bool single = false;
    Fiber pair{};
    try {
        p = parse_presentation(input);
    } catch (const std::invalid_argument&) {
        std::istringstream is(input);
        char ch = 0;
        is >> ch;
        std::int64_t a = 0, b = 0;
        if (ch == '(') is >> a >> ch >> b >> ch;
        else {
            is.putback(ch);
            is >> a >> ch >> b;
        }
        if (!is) throw;
        pair = {a, b};
        single = true;
    }

    const auto describe = [](Fiber f) {
        nlohmann::json j{{"fiber", f}};
        const FiberClass c = class_of(f.alpha, f.beta);
        j["class"] = c;
        j["vector"] = class_vector(c);
        if (f.alpha >= 1 && f.beta >= 1) {
            const FiberWord w = fiber_word(f.alpha, f.beta);
            j["word"] = word_string(w);
        }
        return j;
    };

    if (single) {
        const nlohmann::json j = describe(pair);
        if (opt.format == "json") {
            emit(opt, j.dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << "fiber:  (" << pair.alpha << ',' << pair.beta << ")\n";
            if (j.contains("word"))
                os << "word:   " << (j["word"].get<std::string>().empty()
                                         ? "(empty)"
                                         : j["word"].get<std::string>())
                   << "\n";
            const FiberClass c = class_of(pair.alpha, pair.beta);
            os << "class:  " << c.to_string() << "\n";
            os << "vector: ";
            for (int i = 0; i < 5; ++i) os << class_vector(c)[i].machine() << ' ';
            os << "\n";
            emit(opt, os.str());
        }
        return 0;
    }

    const TheoremCase tc = classify(p, convention_of(opt));
    if (opt.format == "json") {
        nlohmann::json j{{"presentation", p}, {"case", tc}};
        nlohmann::json fibers = nlohmann::json::array();
        for (const Fiber& f : normalize(p).fibers) fibers.push_back(describe(f));
        j["fibers"] = fibers;
        emit(opt, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "presentation:  " << p.to_string() << "\n";
        os << "normalized:    " << normalize(p).to_string() << "\n";
        int i = 0;
        for (const Fiber& f : normalize(p).fibers) {
            const FiberClass c = class_of(f.alpha, f.beta);
            os << "fiber " << ++i << ":       (" << f.alpha << ',' << f.beta << ")  class "
               << c.to_string();
            if (f.alpha >= 1 && f.beta >= 1)
                os << "  word " << (fiber_word(f.alpha, f.beta).empty()
                                        ? "(empty)"
                                        : word_string(fiber_word(f.alpha, f.beta)));
            os << "\n";
        }
        os << "case:          " << case_summary(tc) << "\n";
        emit(opt, os.str());
    }
    return 0;
}

int cmd_sweep(const Options& opt, const std::string& report_base) {
    const SweepResult s = sweep_all_classes();
    const ReconcileReport rep = reconcile(s);

    if (!report_base.empty()) {
        nlohmann::json rj = rep;
        std::ofstream jf(report_base + ".json");
        jf << rj.dump(2) << "\n";
        std::ofstream tf(report_base + ".txt");
        tf << report_text(rep);
    }

    const Convention conv = convention_of(opt);
    if (opt.format == "csv") {
        std::ostringstream os;
        os << "class1,class2,class3,t_a,t_b,t_float\n";
        for (const auto& [triple, v] : s.table)
            os << csv_class(triple.c[0]) << ',' << csv_class(triple.c[1]) << ','
               << csv_class(triple.c[2]) << ',' << v.a() << ',' << v.b() << ','
               << v.to_real() << "\n";
        emit(opt, os.str());
    } else if (opt.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [triple, v] : s.table)
            rows.push_back(nlohmann::json{{"classes", triple.c}, {"t", v}});
        nlohmann::json census = nlohmann::json::array();
        for (const auto& [v, n] : s.census)
            census.push_back(nlohmann::json{{"value", v}, {"count", n}});
        nlohmann::json j{{"rows", rows},
                         {"census", census},
                         {"distinct", s.census.size()},
                         {"report", rep}};
        emit(opt, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "sweep over all " << s.table.size() << " unordered class triples\n\n";
        os << "distinct values (" << s.census.size() << "):\n";
        for (const auto& [v, n] : s.census)
            os << "  " << v.to_string() << "  = " << v.to_real() << "   ("
               << n << " triples)\n";
        os << "\n" << report_text(rep);
        emit(opt, os.str());
    }

    bool ok = s.census.size() == 12 && rep.selected.has_value();
    for (const ConventionStats& st : rep.stats)
        if (st.convention == conv) ok = ok && st.full_match();
    if (!ok) {
        std::cerr << "error: sweep census or route reconciliation failed\n";
        return 2;
    }
    return 0;
}

int cmd_table(const Options& opt) {
    struct Row {
        SeifertPresentation p;
        GoldenNum t;
        AbelianGroup g;
    };
    std::vector<Row> rows;
    for (const char* s :
         {"-1; (2,1) (2,1) (2,1)", "-1; (2,1) (2,1) (4,1)", "-1; (2,1) (2,1) (3,1)",
          "-1; (2,1) (2,1) (5,1)", "-1; (2,1) (2,1) (3,2)", "-1; (2,1) (2,1) (5,2)"}) {
        const SeifertPresentation p = parse_presentation(s);
        rows.push_back({p, t_invariant(p), h1(p)});
    }

    if (opt.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const Row& r : rows)
            j.push_back(nlohmann::json{{"presentation", r.p}, {"h1", r.g}, {"t", r.t}});
        emit(opt, j.dump(2) + "\n");
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "presentation,h1,t_a,t_b,t_float\n";
        for (const Row& r : rows)
            os << '"' << r.p.to_string() << "\",\"" << r.g.to_string() << "\","
               << r.t.a() << ',' << r.t.b() << ',' << r.t.to_real() << "\n";
        emit(opt, os.str());
    } else {
        std::ostringstream os;
        os << "presentation              H1         t\n";
        for (const Row& r : rows) {
            std::string p = r.p.to_string();
            p.resize(26, ' ');
            std::string g = r.g.to_string();
            g.resize(11, ' ');
            os << p << g << r.t.to_string() << "\n";
        }
        emit(opt, os.str());
    }
    return 0;
}

int cmd_selfcheck(const Options& opt) {
    const auto results = run_acceptance(opt.seed);
    bool all = true;
    if (opt.format == "json") {
        nlohmann::json j = results;
        emit(opt, j.dump(2) + "\n");
        for (const CriterionResult& r : results) all = all && r.passed;
    } else {
        std::ostringstream os;
        for (const CriterionResult& r : results) {
            all = all && r.passed;
            os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name
               << " (" << r.millis << " ms): " << r.detail << "\n";
        }
        os << (all ? "selfcheck passed" : "selfcheck FAILED") << "\n";
        emit(opt, os.str());
    }
    return all ? 0 : 2;
}

int cmd_dump_constants(const Options& opt) {
    const SpineConstants& k = constants();
    if (opt.format == "text") {
        std::ostringstream os;
        os << "phi_E: ";
        for (int i = 0; i < 5; ++i) os << k.phi_e[i].machine() << ' ';
        os << "\nphi_J:\n";
        for (int i = 0; i < 5; ++i) {
            os << "  ";
            for (int j = 0; j < 5; ++j) os << k.phi_j.at(i, j).machine() << ' ';
            os << "\n";
        }
        os << "phi_T slices:\n";
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                os << "  ";
                for (int l = 0; l < 5; ++l) os << k.phi_t.at(i, j, l).machine() << ' ';
                os << "\n";
            }
            os << "\n";
        }
        os << "orbit:\n";
        for (const LabeledVec& lv : orbit()) {
            os << "  " << lv.cls.to_string() << "  ";
            for (int i = 0; i < 5; ++i) os << lv.vec[i].machine() << ' ';
            os << "\n";
        }
        emit(opt, os.str());
        return 0;
    }
    nlohmann::json j{{"phi_e", k.phi_e},   {"phi_j", k.phi_j}, {"phi_t", k.phi_t},
                     {"phi_23", k.phi_23}, {"phi_13", k.phi_13}, {"orbit", orbit()}};
    emit(opt, j.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact t-invariant calculator for lens spaces and small Seifert "
                 "fibered spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output", opt.output, "write output to a file");
    app.add_option("--convention", opt.convention,
                   "closed-form convention (expert override)")
        ->check(CLI::IsMember({"fold-plus", "theorem-literal", "theorem-sign-flip",
                               "theorem-orient-flip"}));
    app.add_option("--seed", opt.seed, "seed for randomized selfcheck subsets");

    std::string input;
    std::string report_base;

    CLI::App* compute = app.add_subcommand(
        "compute", "invariant of a presentation, by both routes, plus H1");
    compute->add_option("presentation", input, "e.g. \"-1; (2,1) (2,1) (3,2)\"")
        ->required();

    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "fiber words, classes and the closed-form case");
    classify_cmd->add_option("input", input, "a presentation or a single pair (a,b)")
        ->required();

    CLI::App* sweep = app.add_subcommand(
        "sweep", "evaluate all 364 class triples and reconcile both routes");
    sweep->add_option("--report", report_base,
                      "write the discrepancy report to <base>.json and <base>.txt");

    CLI::App* table = app.add_subcommand("table", "the six-row comparison table");
    CLI::App* selfcheck = app.add_subcommand("selfcheck", "run all acceptance checks");
    CLI::App* dump = app.add_subcommand("dump-constants",
                                        "the five constants and the 12 labeled vectors");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(opt, input);
        if (classify_cmd->parsed()) return cmd_classify(opt, input);
        if (sweep->parsed()) return cmd_sweep(opt, report_base);
        if (table->parsed()) return cmd_table(opt);
        if (selfcheck->parsed()) return cmd_selfcheck(opt);
        if (dump->parsed()) return cmd_dump_constants(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
