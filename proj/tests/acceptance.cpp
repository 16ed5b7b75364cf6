// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include "gstruct/verify.hpp"
#include "properties.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

using namespace gstruct;
using Q = Rational;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> problems;
};

// Every listed id must be present and pass; extra conditions go in `more`.
void require_ids(Criterion& c, const std::string& run, const std::vector<CheckResult>& rs,
                 const std::vector<std::string>& ids)
{
    for (const auto& id : ids) {
        auto it = std::find_if(rs.begin(), rs.end(), [&](const CheckResult& r) { return r.id == id; });
        if (it == rs.end()) {
            c.problems.push_back(run + " " + id + ": missing");
        } else if (it->status != Status::pass) {
            c.problems.push_back(run + " " + id + ": " + to_string(it->status) + ", got " + it->lhs +
                                 ", expected " + it->rhs);
        }
    }
}

void require_value(Criterion& c, const std::string& run, const std::vector<CheckResult>& rs,
                   const std::string& id, const std::string& value)
{
    for (const auto& r : rs)
        if (r.id == id && r.lhs != value) c.problems.push_back(run + " " + id + ": " + r.lhs + ", wanted " + value);
}

void require_property(Criterion& c, const std::string& name, const props::Outcome& o, int min_trials)
{
    if (o.trials < min_trials)
        c.problems.push_back(name + ": only " + std::to_string(o.trials) + " trials");
    if (o.failures)
        c.problems.push_back(name + ": " + std::to_string(o.failures) + " of " + std::to_string(o.trials) +
                             " failed; first: " + o.first_failure);
}

std::string param(const char* name, const Q& v)
{
    std::ostringstream s;
    s << name << " = " << v;
    return s.str();
}

} // namespace

int main()
{
    std::vector<Criterion> cs;
    auto add = [&](int n, std::string title) -> Criterion& {
        cs.push_back({n, std::move(title), {}});
        return cs.back();
    };

    const auto nil = run_scenario(nil6(), {"all"});

    require_ids(add(1, "Nil6 structure equations"), "nil6", nil,
                {"in2.dF", "in2.N", "in2.dPsiMinus", "in2.N_PsiMinus", "in2.theta6", "in2.dPsiPlus",
                 "in2.N_PsiPlus"});

    require_ids(add(2, "Nil6 torsion and dT"), "nil6", nil,
                {"torcy.T", "cy2.T", "tor.dT", "tor.dT_star", "partor.dT_quadratic"});

    require_ids(add(3, "Nil6 connections and curvature"), "nil6", nil,
                {"levc.table", "levc.metric_torsion_free", "tor1.table", "tor1.torsion", "parallel.T",
                 "parallel.N", "7curv.values"});

    {
        auto& c = add(4, "Nil6 R and W at (e5, e6, e2, e1)");
        require_ids(c, "nil6", nil, {"rg.5621", "weyl.5621"});
        require_value(c, "nil6", nil, "rg.5621", "-1/4");
    }
    {
        auto& c = add(5, "Nil6 instanton and Bianchi calibration");
        require_ids(c, "nil6", nil,
                    {"6inst.su3", "pont.half_trace", "pont.tilde", "modb.alpha", "modb1.alpha", "modb.sign"});
        require_value(c, "nil6", nil, "modb.sign", "positive");
    }
    {
        auto& c = add(6, "Nil6 scalar curvature");
        require_ids(c, "nil6", nil, {"scal2.formula"});
        require_value(c, "nil6", nil, "scal2.formula", "-3/2");
    }

    require_ids(add(7, "lift coherence SU(3) -> G2 -> Spin(7)"), "nil6", nil,
                {"om.canonical", "sg1.canonical", "thet.theta7", "thet.theta7_formula", "sol7g.condition",
                 "nav.pairing", "tsol7g.T7", "6inst.su3", "7inst.g2", "th51.theta8", "th51.T8", "th51.R8",
                 "8inst.spin7"});

    {
        auto& c = add(8, "S6 nearly Kaehler, t = 1 and t = 2");
        for (const Q& t : {Q(1), Q(2)}) {
            const auto rs = run_scenario(s6_nearly_kaehler(t), {"all"});
            const std::string run = "s6_nk " + param("t", t);
            require_ids(c, run, rs,
                        {"nk.constant_type", "nk.dT", "partor.dT_quadratic", "pont.nabla", "pont.tilde",
                         "modb.sign", "scal.s6"});
            require_value(c, run, rs, "modb.sign", "negative");
        }
    }
    {
        auto& c = add(9, "S7 nearly parallel, lambda = 1 and lambda = 6");
        for (const Q& l : {Q(1), Q(6)}) {
            const auto rs = run_scenario(s7_nearly_parallel(l), {"all"});
            const std::string run = "s7_np " + param("lambda", l);
            require_ids(c, run, rs,
                        {"g2li.theta7", "tsol7g.T", "tor.dT", "partor.dT_quadratic", "pont.nabla", "pont.tilde",
                         "7inst.g2", "modb.sign", "th51.theta8", "th51.T8"});
            require_value(c, run, rs, "modb.sign", "negative");
        }
    }
    {
        auto& c = add(10, "S5 Sasakian and its Hermitian lift");
        const auto rs = run_scenario(s5_sasakian(), {"all"});
        require_ids(c, "s5_sasaki", rs,
                    {"ric1.ricci", "sas2.dF6", "sas2.theta6", "sas1.T5", "sas2.T6", "sas2.dT6", "pont.nabla",
                     "pont.tilde", "modb.sign", "6inst.su3"});
        require_value(c, "s5_sasaki", rs, "modb.sign", "negative");
    }
    {
        auto& c = add(11, "randomized identity properties");
        constexpr int trials = 100;
        props::Gen g(2024);
        require_property(c, "w2", props::w2_identity(g, trials), trials);
        require_property(c, "gamma", props::gamma_identity(g, trials), trials);
        require_property(c, "double star", props::double_star(g, trials), trials);
        require_property(c, "wedge star basis", props::wedge_star_basis(), trials);
        require_property(c, "acy", props::acy_relation(g, trials), trials);
        require_property(c, "bas1", props::bas1_pairing(g, trials), trials);
    }
    {
        auto& c = add(12, "global statements appear only as commentary");
        const auto notes = scenario_commentary("nil6");
        for (const char* key : {"Malcev", "Lee forms", "action"})
            if (std::none_of(notes.begin(), notes.end(),
                             [&](const std::string& n) { return n.find(key) != std::string::npos; }))
                c.problems.push_back(std::string("nil6 commentary lacks '") + key + "'");
        for (const auto& r : nil)
            if (r.group == "commentary") c.problems.push_back("commentary reported as check " + r.id);
    }

    int failed = 0;
    for (const auto& c : cs) {
        const bool ok = c.problems.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << c.number << ". " << c.title << "\n";
        for (const auto& p : c.problems) std::cout << "        " << p << "\n";
    }
    std::cout << cs.size() - failed << " of " << cs.size() << " criteria pass\n";
    return failed ? 1 : 0;
}
