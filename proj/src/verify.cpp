#include "gstruct/verify.hpp"

#include "gstruct/format.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace gstruct {

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    case Status::c0_conflict: return "c0_conflict";
    }
    return "fail";
}

std::string to_string(Sign s)
{
    switch (s) {
    case Sign::positive: return "positive";
    case Sign::negative: return "negative";
    case Sign::undefined: return "undefined";
    }
    return "undefined";
}

std::optional<Rational> ratio_to(const Form& P, const Form& dT)
{
    if (dT.is_zero()) return std::nullopt;
    const auto& [m0, c0] = *dT.terms().begin();
    Rational r = P.coeff(m0) / c0;
    if (P != r * dT) return std::nullopt;
    return r;
}

namespace {

using Q = Rational;

// Solves dT = 2α X. Returns {proportional, α}.
std::pair<bool, std::optional<Q>> solve_alpha(const Form& dT, const Form& X)
{
    if (X.is_zero() || dT.is_zero()) return {true, std::nullopt};
    auto r = ratio_to(X, dT);
    if (!r) return {false, std::nullopt};
    return {true, Q(1) / (2 * *r)};
}

} // namespace

BianchiReport bianchi_calibrate(const Form& dT, const Form& P_A, const Form& P_tilde)
{
    if (dT.degree() != 4 || P_A.degree() != 4 || P_tilde.degree() != 4)
        throw DegreeMismatch("Bianchi calibration compares 4-forms");
    BianchiReport r;
    auto [p1, a1] = solve_alpha(dT, P_A);
    auto [p2, a2] = solve_alpha(dT, P_A - P_tilde);
    r.proportional = p1 && p2;
    r.alpha_modb = a1;
    r.alpha_modb1 = a2;
    std::vector<Q> defined;
    if (a1) defined.push_back(*a1);
    if (a2) defined.push_back(*a2);
    if (!defined.empty() && std::all_of(defined.begin(), defined.end(), [](const Q& a) { return a > 0; }))
        r.sign = Sign::positive;
    else if (!defined.empty() && std::all_of(defined.begin(), defined.end(), [](const Q& a) { return a < 0; }))
        r.sign = Sign::negative;
    return r;
}

const std::vector<std::string>& check_groups()
{
    static const std::vector<std::string> g{"structure", "torsion", "curvature", "instanton", "bianchi", "scalar", "lift"};
    return g;
}

namespace {

class Collector {
public:
    explicit Collector(std::vector<int> labels) : labels_(std::move(labels)) {}

    void group(std::string g) { group_ = std::move(g); }
    void labels(std::vector<int> l) { labels_ = std::move(l); }
    const std::vector<int>& labels() const { return labels_; }

    void text(const std::string& id, bool ok, std::string lhs, std::string rhs, std::string detail = "")
    {
        results.push_back({id, group_, ok ? Status::pass : Status::fail, std::move(lhs), std::move(rhs), std::move(detail)});
    }
    void form(const std::string& id, const Form& lhs, const Form& rhs, std::string detail = "")
    {
        text(id, lhs == rhs, to_string(lhs, labels_), to_string(rhs, labels_), std::move(detail));
    }
    void scalar(const std::string& id, const Q& lhs, const Q& rhs, std::string detail = "")
    {
        text(id, lhs == rhs, to_string(lhs), to_string(rhs), std::move(detail));
    }
    void flag(const std::string& id, bool ok, std::string detail = "")
    {
        text(id, ok, ok ? "true" : "false", "true", std::move(detail));
    }
    // P = expected·dT with the fixed c0; a multiple with another ratio is a c0 conflict.
    void pontrjagin(const std::string& id, const Form& P, const Form& dT, const Q& expected)
    {
        const Form want = expected * dT;
        CheckResult r{id, group_, Status::pass, to_string(P, labels_), to_string(want, labels_), ""};
        auto actual = ratio_to(P, dT);
        r.detail = "P/dT = " + (actual ? to_string(*actual) : std::string("not a multiple")) +
                   ", stated " + to_string(expected);
        if (P != want) {
            r.status = Status::fail;
            if (actual && *actual != 0 && expected != 0) {
                r.status = Status::c0_conflict;
                r.detail += "; would require c0 = " + to_string(Q(expected / *actual * kPontrjaginNormalization));
            }
        }
        results.push_back(std::move(r));
    }
    void guarded(const std::string& id, const std::function<void()>& body)
    {
        try {
            body();
        } catch (const std::exception& e) {
            results.push_back({id, group_, Status::fail, "error", "", e.what()});
        }
    }

    std::vector<CheckResult> results;

private:
    std::vector<int> labels_;
    std::string group_;
};

Form lit(std::string_view s, const std::vector<int>& labels) { return parse_form<Q>(s, labels); }

Curvature embed(const Curvature& r, int at)
{
    const int n = r.dim();
    auto sh = [&](int p) { return p < at ? p : p + 1; };
    Curvature out(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) out(sh(i), sh(j), sh(k), sh(l)) = r(i, j, k, l);
    return out;
}

std::string instanton_detail(const InstantonReport& r, const std::vector<int>& labels)
{
    std::string d = r.crosscheck_agrees ? "" : "coefficient-form cross-check disagrees; ";
    if (r.failing_slot)
        d += "first failing slot (e" + std::to_string(labels[r.failing_slot->first]) + ", e" +
             std::to_string(labels[r.failing_slot->second]) + ")";
    return d;
}

void instanton(Collector& c, const std::string& id, const Curvature& r, const GStructure& s)
{
    auto rep = instanton_check(r, s);
    c.flag(id, rep.member && rep.crosscheck_agrees, instanton_detail(rep, c.labels()));
}

void bianchi_block(Collector& c, const Curvature& rn, const Form& dT, const Q* nabla_ratio, const Q* tilde_ratio,
                   Sign expected_sign, const Q* alpha_modb, const Q* alpha_modb1, const std::string& nabla_id,
                   const std::string& tilde_id)
{
    Curvature rt;
    c.guarded("bas2.pair_symmetry", [&] { c.flag("bas2.pair_symmetry", pair_symmetric(rn)); });
    c.guarded(tilde_id, [&] {
        rt = tilde_curvature(rn, dT);
        c.pontrjagin(tilde_id, pontrjagin(rt), dT, *tilde_ratio);
    });
    const Form pn = pontrjagin(rn);
    c.pontrjagin(nabla_id, pn, dT, *nabla_ratio);
    c.guarded("modb.alpha", [&] {
        auto rep = bianchi_calibrate(dT, pn, rt.dim() ? pontrjagin(rt) : Form(dT.dim(), 4));
        auto show = [](const std::optional<Q>& a) { return a ? to_string(*a) : std::string("undefined"); };
        const std::string detail = "alpha'(modb) = " + show(rep.alpha_modb) + ", alpha'(modb1) = " +
                                   show(rep.alpha_modb1) + ", proportional = " + (rep.proportional ? "true" : "false");
        if (alpha_modb) c.text("modb.alpha", rep.alpha_modb == *alpha_modb, show(rep.alpha_modb), to_string(*alpha_modb), detail);
        if (alpha_modb1)
            c.text("modb1.alpha", rep.alpha_modb1 == *alpha_modb1, show(rep.alpha_modb1), to_string(*alpha_modb1), detail);
        c.text("modb.sign", rep.sign == expected_sign, to_string(rep.sign), to_string(expected_sign), detail);
    });
}

// SU(3) -> G2 -> Spin(7) lifts with the checks shared by all SU(3) models.
void su3_lift_chain(Collector& c, const SU3Structure& s, const Space& m, const Form& N, const Form& T6,
                    const std::optional<Form>& theta7_stated = std::nullopt)
{
    const auto base_labels = c.labels();
    G2Lift g;
    bool have_g2 = false;
    c.guarded("thet.theta7_formula", [&] {
        g = lift_su3_to_g2(s, m, N);
        have_g2 = true;
        c.labels(labels(g.space));
        if (theta7_stated)
            c.form("thet.theta7", g.theta7, *theta7_stated, "computed by -1/3 *(*dω∧ω); stated value");
        c.form("thet.theta7_formula", g.theta7, g.theta7_predicted, "computed vs θ⁶ - ¼(N,Ψ⁻)e7");
    });
    if (!have_g2) return;
    c.flag("sol7g.condition", g.torsion.condition_holds, "d*ω = θ⁷∧*ω");
    c.scalar("nav.pairing", g.pairing, g.pairing_predicted, "(dω,*ω) vs -3/2 (N,Ψ⁺)");
    c.form("tsol7g.T7", g.torsion.T, insert_direction(T6, dim(m)), "T⁷ = T⁶");
    const Curvature r7 = torsion_curvature(g.space, g.torsion.T);
    instanton(c, "7inst.g2", r7, g.structure);
    c.guarded("th51.theta8", [&] {
        auto p = lift_g2_to_spin7(g.structure, g.space);
        c.labels(labels(p.space));
        c.form("th51.theta8", p.theta8, p.theta8_predicted, "computed by -1/7 *(*dΦ∧Φ) vs 6/7 θ⁷ + 1/7 (dω,*ω) e0");
        c.form("th51.T8", p.torsion.T, insert_direction(g.torsion.T, 0), "T⁸ = T⁷");
        const Curvature r8 = torsion_curvature(p.space, p.torsion.T);
        c.flag("th51.R8", r8 == embed(r7, 0), "R of the Spin(7) connection equals the lifted G2 curvature");
        instanton(c, "8inst.spin7", r8, p.structure);
    });
    c.labels(base_labels);
}

std::string table_text(const Frame& f)
{
    std::string s;
    for (int k = 0; k < f.dim(); ++k) {
        if (f.differential(k).is_zero()) continue;
        s += (s.empty() ? "" : "; ") + std::string("d e") + std::to_string(f.labels()[k]) + " = " +
             to_string(f.differential(k), f.labels());
    }
    return s.empty() ? "0" : s;
}

void nil6_checks(Collector& c, const ModelHandle& h)
{
    const Frame& f = std::get<Frame>(h.space);
    const auto& s = std::get<SU3Structure>(h.structure);
    const auto& L = f.labels();
    const Form& N = *h.nijenhuis;

    c.group("structure");
    {
        std::vector<Form> want(6, Form(6, 2));
        want[0] = lit("e36", L);
        want[3] = lit("e26", L);
        want[4] = lit("e23", L);
        c.text("in1.table", f.differentials() == want, table_text(f), table_text(Frame(want)));
        bool d2 = true;
        for (int k = 0; k < 6; ++k) d2 = d2 && exterior_derivative(f, f.differential(k)).is_zero();
        c.flag("in1.d_squared", d2, "d(d e_k) = 0 for every k");
    }
    const auto in = su3_ingredients(s, h.space, N);
    c.form("in2.dF", in.dF, lit("-3*e236", L));
    c.form("in2.N", N, -s.psi_minus, "N = -Ψ⁻");
    c.flag("in2.N_skew", nijenhuis(f, s.J).skew, "g(N(X,Y),Z) totally skew");
    c.form("in2.dPsiMinus", in.dpsi_minus, hodge_star(s.F), "dΨ⁻ = *F");
    c.scalar("in2.N_PsiMinus", in.N_psi_minus, Q(-4));
    c.form("in2.theta6", in.theta6, Form(6, 1));
    c.form("in2.dPsiPlus", in.dpsi_plus, Form(6, 4));
    c.scalar("in2.N_PsiPlus", in.N_psi_plus, Q(0));
    const auto rep = su3_analyze(s, f);
    c.flag("cycon.holds", rep.cycon_holds, "dΨ± = θ⁶∧Ψ± - ¼(N,Ψ±)*F");
    c.flag("halfflat.holds", rep.half_flat, "dΨ⁺ = 0 and θ⁶ = 0");
    c.flag("halfflat.dF_wedge_F", rep.dF_wedge_F_zero, "dF∧F = 0");
    c.scalar("w1.plus", rep.W1plus, Q(0), "*(dΨ⁺∧F)");
    c.scalar("w1.minus", rep.W1minus, Q(3), "*(dΨ⁻∧F)");
    const auto tor = su3_torsion(s, h.space, N);
    c.form("acy.relation", tor.dF_minus, Q(-3, 4) * pullback_endo(s.J, N), "dF⁻ = -¾ J^*N");

    c.group("torsion");
    const Form T_expected = lit("-2*e145 + e136 + e235 - e246", L);
    const Form dT_expected = lit("-2*e1256 - 2*e3456 - 2*e1234", L);
    c.form("torcy.T", tor.T, T_expected);
    c.form("cy2.T", tor.T_complex, T_expected, "-dF(J·,J·,J·) + N");
    const Form dT = exterior_derivative(f, h.torsion);
    c.form("tor.dT", dT, dT_expected);
    c.form("tor.dT_star", dT, Q(2) * hodge_star(s.F), "dT = 2*F");
    c.form("partor.dT_quadratic", dT_quadratic(h.torsion), dT_expected);

    c.group("curvature");
    const auto lc = levi_civita(f);
    const auto conn = add_torsion(lc, h.torsion);
    auto pos = [&](int label) { return label - 1; };
    auto conn_check = [&](const std::string& id, const Connection<Q>& cn, const std::vector<std::array<int, 4>>& rows,
                          const Q& scale) {
        bool ok = true;
        std::string lhs;
        for (const auto& [i, j, k, v] : rows) {
            const Q got = cn.gamma(pos(i), pos(j), pos(k));
            ok = ok && got * scale == v;
            lhs += (lhs.empty() ? "" : ", ") + std::to_string(i) + std::to_string(j) + std::to_string(k) + ":" +
                   to_string(Q(got * scale));
        }
        std::string rhs;
        for (const auto& [i, j, k, v] : rows)
            rhs += (rhs.empty() ? "" : ", ") + std::to_string(i) + std::to_string(j) + std::to_string(k) + ":" + std::to_string(v);
        c.text(id, ok, lhs, rhs);
    };
    // (i, j, k, v): scale·g(∇_{e_i} e_j, e_k) = v.
    conn_check("levc.table", lc,
               {{{6, 3, 1, 1}}, {{2, 3, 5, -1}}, {{6, 2, 4, 1}}, {{3, 6, 1, -1}}, {{3, 2, 5, 1}},
                {{2, 6, 4, -1}}, {{1, 6, 3, -1}}, {{5, 2, 3, 1}}, {{4, 6, 2, -1}}},
               Q(2));
    c.flag("levc.metric_torsion_free", lc.is_metric() && torsion_tensor(f, lc).is_zero());
    conn_check("tor1.table", conn,
               {{{1, 6, 3, -1}}, {{5, 2, 3, 1}}, {{4, 6, 2, -1}}, {{4, 5, 1, -1}}, {{5, 1, 4, -1}}, {{1, 4, 5, -1}}},
               Q(1));
    c.flag("tor1.torsion", [&] {
        auto t = to_form<Q, 3>(torsion_tensor(f, conn));
        return t && *t == h.torsion;
    }(), "torsion of ∇ is the 3-form T");
    c.flag("parallel.T", is_parallel(conn, h.torsion), "∇T = 0");
    c.flag("parallel.N", is_parallel(conn, N), "∇N = 0");
    const Curvature rn = curvature(f, conn);
    {
        const std::vector<std::array<int, 5>> rows{
            {{6, 2, 6, 2, 1}}, {{6, 3, 6, 3, 1}}, {{2, 3, 2, 3, 1}}, {{4, 5, 4, 5, 1}}, {{4, 1, 4, 1, 1}},
            {{5, 1, 5, 1, 1}}, {{2, 6, 5, 1, -1}}, {{3, 6, 4, 5, -1}}, {{2, 3, 1, 4, -1}}};
        bool ok = true;
        std::string lhs, rhs;
        for (const auto& [i, j, k, l, v] : rows) {
            const Q got = rn(pos(i), pos(j), pos(k), pos(l));
            ok = ok && got == v;
            std::string key = std::to_string(i) + std::to_string(j) + std::to_string(k) + std::to_string(l) + ":";
            lhs += (lhs.empty() ? "" : ", ") + key + to_string(got);
            rhs += (rhs.empty() ? "" : ", ") + key + std::to_string(v);
        }
        c.text("7curv.values", ok, lhs, rhs);
    }
    const Curvature rg = curvature(f, lc);
    c.flag("partor.curvature_route", nabla_curvature_from_riemannian(rg, h.torsion) == rn,
           "R^∇ from R^g and T equals the direct curvature");
    c.scalar("rg.5621", rg(pos(5), pos(6), pos(2), pos(1)), Q(-1, 4));
    c.scalar("weyl.5621", weyl(rg)(pos(5), pos(6), pos(2), pos(1)), Q(-1, 4));
    c.scalar("remark.bracket361", f.brackets()(pos(3), pos(6), pos(1)), Q(-1), "g([e3,e6],e1)");

    c.group("instanton");
    instanton(c, "6inst.su3", rn, s);

    c.group("bianchi");
    const Q two(2), minus_one(-1), a1(1, 4), a2(1, 6);
    bianchi_block(c, rn, dT, &two, &minus_one, Sign::positive, &a1, &a2, "pont.half_trace", "pont.tilde");
    c.guarded("bas1.pairing", [&] {
        const Curvature rt = curvature(f, add_torsion(lc, Form(-h.torsion)));
        c.flag("bas1.pairing", tilde_pairing_holds(rn, rt, dT), "R^∇(X,Y,Z,V) = R̃(Z,V,X,Y) + ½dT(X,Y,Z,V)");
        c.flag("bas3.tilde_direct", rt == tilde_curvature(rn, dT), "curvature of ∇^g - ½T equals R^∇ - ½dT");
    });

    c.group("scalar");
    c.guarded("scal2.formula", [&] {
        ScalarIdentityInputs si{&h.space, h.structure, h.torsion, N};
        auto r = scalar_identity_check(ScalarIdentityKind::su3, si);
        c.scalar("scal2.formula", r.trace, r.formula, "curvature trace vs formula with ‖T‖² = 6(T,T)");
    });

    c.group("lift");
    c.guarded("om.canonical", [&] {
        auto g = lift_su3_to_g2(canonical_su3(), Space(Frame::abelian(6)));
        c.labels(labels(g.space));
        c.form("om.canonical", g.structure.omega, canonical_g2().omega);
        auto p = lift_g2_to_spin7(canonical_g2(), Space(Frame::abelian(7)));
        c.labels(labels(p.space));
        c.form("sg1.canonical", p.structure.phi, canonical_spin7().phi);
        c.labels(L);
    });
    su3_lift_chain(c, s, h.space, N, h.torsion, Form(-Form::monomial(7, {6})));
}

void s6_checks(Collector& c, const ModelHandle& h)
{
    const auto& s = std::get<SU3Structure>(h.structure);
    const Q t = h.params.at("t");
    const Q a2 = 2 * t * t;
    const Form& T = h.torsion;
    const Form& N = *h.nijenhuis;
    const int n = 6;

    c.group("structure");
    {
        const auto p = contract_pair(T, T);
        bool ok = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        ok = ok && p(i, j, k, l) == a2 / 2 * (Q(i == k && j == l) - Q(j == k && i == l) -
                                                               s.F({i, k}) * s.F({j, l}) + s.F({j, k}) * s.F({i, l}));
        c.flag("nk.constant_type", ok, "T_ijm T_klm = a²/2 (g_ik g_jl - g_jk g_il - F_ik F_jl + F_jk F_il)");
    }
    c.scalar("nk.N_PsiPlus", inner(N, s.psi_plus), Q(0));
    const auto in = su3_ingredients(s, h.space, N);
    c.flag("cycon.holds", su3_differential_conditions_hold(s, in), "dΨ± = θ⁶∧Ψ± - ¼(N,Ψ±)*F");
    c.form("nk.theta6", in.theta6, Form(n, 1));

    c.group("torsion");
    c.guarded("torcy.T", [&] {
        auto tor = su3_torsion(s, h.space, N);
        c.form("torcy.T", tor.T, T);
        c.form("cy2.T", tor.T_complex, T);
    });
    const Form dT = exterior_derivative(h.space, T);
    c.form("nk.dT", dT, Q(-2 * a2) * hodge_star(s.F), "dT = -2a² *F");
    c.form("partor.dT_quadratic", dT_quadratic(T), dT);

    c.group("curvature");
    const Curvature rg = riemannian_curvature(h.space);
    const Curvature rn = torsion_curvature(h.space, T);
    c.flag("weyl.zero", weyl(rg).is_zero(), "constant curvature is conformally flat");

    c.group("instanton");
    instanton(c, "6inst.su3", rn, s);

    c.group("bianchi");
    const Q rn_ratio = -3 * a2 / 4, rt_ratio = 9 * a2 / 4;
    const Q alpha = Q(1) / (2 * rn_ratio), alpha1 = Q(1) / (2 * (rn_ratio - rt_ratio));
    bianchi_block(c, rn, dT, &rn_ratio, &rt_ratio, Sign::negative, &alpha, &alpha1, "pont.nabla", "pont.tilde");

    c.group("scalar");
    c.scalar("scal.s6", scalar_curvature(rg), Q(15 * a2), "s = 15a²");
    c.guarded("scal2.formula", [&] {
        ScalarIdentityInputs si{&h.space, h.structure, T, N};
        auto r = scalar_identity_check(ScalarIdentityKind::su3, si);
        c.scalar("scal2.formula", r.trace, r.formula);
    });

    c.group("lift");
    su3_lift_chain(c, s, h.space, N, T);
}

void s7_checks(Collector& c, const ModelHandle& h)
{
    const auto& s = std::get<G2Structure>(h.structure);
    const Q lambda = h.params.at("lambda");
    const Form& T = h.torsion;
    const Form sw = hodge_star(s.omega);

    c.group("structure");
    c.form("g2par.domega", exterior_derivative(h.space, s.omega), Q(-lambda) * sw, "dω = -λ*ω");
    const auto g = g2_torsion(s, h.space, false);
    c.scalar("g2par.pairing", g.pairing, Q(-7 * lambda),
             "increasing-tuple pairing; the printed value -λ corresponds to a different normalization");
    c.form("g2li.theta7", g.theta7, Form(7, 1));
    c.flag("sol7g.condition", g.condition_holds, "d*ω = θ⁷∧*ω");

    c.group("torsion");
    c.form("tsol7g.T", g.T, Q(-lambda / 6) * s.omega, "T = -λ/6 ω");
    const Form dT = exterior_derivative(h.space, T);
    c.form("tor.dT", dT, Q(lambda * lambda / 6) * sw, "dT = λ²/6 *ω");
    c.form("partor.dT_quadratic", dT_quadratic(T), dT);

    c.group("curvature");
    const Curvature rg = riemannian_curvature(h.space);
    const Curvature rn = torsion_curvature(h.space, T);
    c.flag("weyl.zero", weyl(rg).is_zero(), "constant curvature is conformally flat");

    c.group("instanton");
    instanton(c, "7inst.g2", rn, s);

    c.group("bianchi");
    const Q rn_ratio = -lambda * lambda / 36, rt_ratio = lambda * lambda / 9;
    bianchi_block(c, rn, dT, &rn_ratio, &rt_ratio, Sign::negative, nullptr, nullptr, "pont.nabla", "pont.tilde");

    c.group("scalar");
    c.scalar("scal.s7", scalar_curvature(rg), Q(21 * lambda * lambda / 8), "λ² = 8/21 s");
    c.guarded("scal1.formula", [&] {
        ScalarIdentityInputs si{&h.space, h.structure, T};
        auto r = scalar_identity_check(ScalarIdentityKind::g2, si);
        c.scalar("scal1.formula", r.trace, r.formula, "pairing enters squared");
    });

    c.group("lift");
    c.guarded("th51.theta8", [&] {
        auto p = lift_g2_to_spin7(s, h.space);
        const auto base = c.labels();
        c.labels(labels(p.space));
        const Form e0 = Form::monomial(8, {0});
        c.form("th51.theta8", p.theta8, Q(-lambda) * e0, "computed by -1/7 *(*dΦ∧Φ); stated -λe0");
        c.form("th51.theta8_formula", p.theta8_predicted, Q(-lambda) * e0, "6/7 θ⁷ + 1/7 (dω,*ω) e0");
        c.form("c2.w2", exterior_derivative(p.space, p.structure.phi), wedge(p.theta8, p.structure.phi), "dΦ = θ⁸∧Φ");
        c.form("th51.T8", p.torsion.T, insert_direction(T, 0), "T⁸ = T⁷");
        const Curvature r8 = torsion_curvature(p.space, p.torsion.T);
        c.flag("th51.R8", r8 == embed(rn, 0));
        instanton(c, "8inst.spin7", r8, p.structure);
        c.labels(base);
    });
}

Curvature sasakian_nabla_display(const Form& eta, const Form& dT, int n)
{
    auto g = [](int i, int j) { return Q(i == j); };
    auto et = [&](int i) { return i < eta.dim() ? eta({i}) : Q(0); };
    const auto d = to_tensor<Q, 4>(dT);
    const int base = eta.dim();
    Curvature r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Q v = d(i, j, k, l) / 6;
                    if (i < base && j < base && k < base && l < base)
                        v += Q(4, 3) * (g(j, k) * g(i, l) - g(i, k) * g(j, l) + et(i) * et(k) * g(j, l) -
                                        et(j) * et(k) * g(i, l) + et(j) * et(l) * g(i, k) - et(i) * et(l) * g(j, k));
                    r(i, j, k, l) = v;
                }
    return r;
}

void s5_checks(Collector& c, const ModelHandle& h)
{
    const auto& ct = std::get<ContactStructure>(h.structure);
    const auto& L = c.labels();
    const Form& T = h.torsion;
    const Curvature rg = riemannian_curvature(h.space);

    c.group("structure");
    c.form("sas1.deta", exterior_derivative(h.space, ct.eta), Q(2) * ct.F5, "dη = 2F⁵");
    c.form("sas1.T5", T, lit("2*e125 + 2*e345", L), "T⁵ = 2η∧F⁵");
    {
        Matrix<Q> want = Q(6) * Matrix<Q>::Identity(5, 5);
        want(ct.xi, ct.xi) -= 2;
        const Matrix<Q> ric = ricci(rg);
        c.text("ric1.ricci", ric == want, to_string(ric), to_string(want), "Ric = 6g - 2η⊗η");
    }
    c.flag("sas.symmetries", first_bianchi(rg) && pair_symmetric(rg), "first Bianchi identity and pair symmetry");
    {
        Matrix<Q> want = -Matrix<Q>::Identity(5, 5);
        want(ct.xi, ct.xi) += 1;
        c.flag("contact.metric", ct.psi.matrix() * ct.psi.matrix() == want && ct.psi.matrix().col(ct.xi).isZero(0),
               "ψ(ξ) = 0, ψ² = -Id + η⊗ξ");
    }

    c.group("torsion");
    const Form FF = wedge(ct.F5, ct.F5);
    c.form("sas.dT5", exterior_derivative(h.space, T), Q(4) * FF, "dT⁵ = dη∧dη = 4F⁵∧F⁵");
    c.form("partor.dT_quadratic", dT_quadratic(T), Q(4) * FF);

    HermitianLift hl;
    try {
        hl = lift_contact_to_hermitian(ct, h.space);
    } catch (const std::exception& e) {
        c.group("lift");
        c.text("sas2.lift", false, "error", "", e.what());
        return;
    }
    const Form e6 = Form::monomial(6, {5});
    const Form T6 = insert_direction(T, 5);
    c.labels(labels(hl.space));
    const auto& L6 = c.labels();

    c.group("lift");
    c.form("sas2.dF6", hl.dF6, Q(2) * wedge(e6, hl.F6), "dF⁶ = 2e6∧F⁶");
    c.form("sas2.theta6", hl.theta6, Q(2) * e6, "θ⁶ = δF(J·) computed; stated 2e6");
    c.text("sas2.lck_form", hl.lck_form && *hl.lck_form == Q(2) * e6,
           hl.lck_form ? to_string(*hl.lck_form, L6) : "undefined", to_string(Form(Q(2) * e6), L6),
           "ϑ with dF⁶ = ϑ∧F⁶");
    c.form("sas2.T6", hl.T6, T6, "T⁶ = -dF⁶(J·,J·,J·) = T⁵");
    c.form("sas2.T6_lee", hl.T6_from_lee, T6, "-*dF + *(θ⁶∧F) in the orientation of F⁶");
    c.form("sas2.dT6", hl.dT6, insert_direction(Form(Q(4) * FF), 5), "dT⁶ = 4F⁵∧F⁵");

    c.group("curvature");
    const Curvature rn6 = torsion_curvature(hl.space, hl.T6);
    c.flag("sas.nabla_display", rn6 == sasakian_nabla_display(ct.eta, hl.dT6, 6), "R^∇ = 4/3(...) + 1/6 dT");

    c.group("instanton");
    const SU3Structure herm{hl.F6, Form(6, 3), Form(6, 3), hl.J6};
    instanton(c, "6inst.su3", rn6, herm);

    c.group("bianchi");
    const Q rn_ratio(-8, 3), rt_ratio(16, 3);
    const Q alpha = Q(1) / (2 * rn_ratio), alpha1 = Q(1) / (2 * (rn_ratio - rt_ratio));
    bianchi_block(c, rn6, hl.dT6, &rn_ratio, &rt_ratio, Sign::negative, &alpha, &alpha1, "pont.nabla", "pont.tilde");

    c.group("scalar");
    const DilatonData dil{Q(1, 2) * hl.theta6};
    c.guarded("scal.dilaton", [&] {
        ScalarIdentityInputs si{&hl.space, std::nullopt, hl.T6, std::nullopt, dil};
        auto r = scalar_identity_check(ScalarIdentityKind::dilaton, si);
        c.scalar("scal.dilaton", r.trace, r.formula, "dφ = θ⁶/2 = " + to_string(dil.dphi, L6));
    });
    c.guarded("eqms1.residual", [&] {
        auto r = equation_of_motion_check(hl.space, hl.T6, hl.J6, dil);
        c.text("eqms1.residual", r.holds, to_string(r.residual), "0", "dφ = θ⁶/2");
    });
    c.labels(L);
}

std::vector<CheckResult> select(std::vector<CheckResult> all, const std::vector<std::string>& selection)
{
    std::set<std::string> ids, groups(check_groups().begin(), check_groups().end());
    for (const auto& r : all) {
        ids.insert(r.id);
        for (auto dot = r.id.find('.'); dot != std::string::npos; dot = r.id.find('.', dot + 1))
            ids.insert(r.id.substr(0, dot));
    }
    auto matches = [](const CheckResult& r, const std::string& s) {
        return r.id == s || r.group == s || r.id.rfind(s + ".", 0) == 0;
    };
    if (selection.empty()) return all;
    bool everything = false;
    for (const auto& s : selection) {
        if (s == "all") everything = true;
        else if (!ids.count(s) && !groups.count(s)) throw UsageError("unknown check '" + s + "'");
    }
    if (everything) return all;
    std::vector<CheckResult> out;
    for (auto& r : all)
        for (const auto& s : selection)
            if (matches(r, s)) {
                out.push_back(std::move(r));
                break;
            }
    return out;
}

} // namespace

std::vector<CheckResult> run_scenario(const ModelHandle& model, const std::vector<std::string>& selection)
{
    Collector c(labels(model.space));
    if (model.name == "nil6") nil6_checks(c, model);
    else if (model.name == "s6_nk") s6_checks(c, model);
    else if (model.name == "s7_np") s7_checks(c, model);
    else if (model.name == "s5_sasaki") s5_checks(c, model);
    else throw UsageError("no scenario for model '" + model.name + "'");
    return select(std::move(c.results), selection);
}

std::vector<CheckResult> run_frame_scenario(const Frame& frame, const std::vector<std::string>& selection)
{
    const int n = frame.dim();
    Collector c(frame.labels());
    c.group("structure");
    c.flag("frame.jacobi", true, "brackets satisfy the Jacobi identity");
    bool d2 = true;
    for (int k = 0; k < n; ++k) d2 = d2 && exterior_derivative(frame, frame.differential(k)).is_zero();
    c.flag("frame.d_squared", d2, "d(d e_k) = 0 for every k");
    bool dd = true;
    for (int k = 1; k <= std::min(n, 3); ++k)
        for (Mask m = 0; m <= full_mask(n); ++m) {
            if (degree_of(m) != k) continue;
            Form a(n, k);
            a.add_term(m, Q(1));
            dd = dd && codifferential(frame, codifferential(frame, a)).is_zero();
        }
    c.flag("frame.codifferential_squared", dd, "δδ = 0 on basis forms of degree ≤ 3");
    c.group("curvature");
    const auto lc = levi_civita(frame);
    c.flag("lc.metric", lc.is_metric());
    c.flag("lc.torsion_free", torsion_tensor(frame, lc).is_zero());
    c.flag("lc.bianchi", first_bianchi(curvature(frame, lc)), "first Bianchi identity of R^g");
    if (n == 6) {
        c.group("structure");
        const auto s = canonical_su3();
        const auto rep = su3_analyze(s, frame);
        const std::string summary = "W1+ = " + to_string(rep.W1plus) + ", W1- = " + to_string(rep.W1minus) +
                                    ", theta6 = " + to_string(rep.theta6, frame.labels()) +
                                    ", half_flat = " + (rep.half_flat ? "true" : "false");
        c.flag("su3.nijenhuis_skew", rep.N_skew, summary);
        c.flag("su3.conditions", rep.cycon_holds, "dΨ± = θ⁶∧Ψ± - ¼(N,Ψ±)*F");
        if (rep.N_skew && rep.cycon_holds) {
            c.group("torsion");
            c.guarded("su3.torsion_routes", [&] {
                auto tor = su3_torsion(s, Space(frame));
                c.form("su3.torsion_routes", tor.T, tor.T_complex, "T = " + to_string(tor.T, frame.labels()));
                c.flag("su3.type_30", tor.type_30_relation, "dF⁻ = -¾ J^*N");
                const auto conn = add_torsion(lc, tor.T);
                if (is_parallel(conn, tor.T))
                    c.form("su3.dT_quadratic", dT_quadratic(tor.T), exterior_derivative(frame, tor.T));
            });
        }
    }
    return select(std::move(c.results), selection);
}

std::vector<std::string> scenario_commentary(const std::string& model_name)
{
    std::vector<std::string> out;
    if (model_name == "nil6") {
        out.push_back("Existence of a uniform discrete subgroup (Malcev) for the integral structure constants is "
                      "not computed; only the rationality of the constants is checked.");
        out.push_back("Global exactness or non-exactness of Lee forms on compact quotients is not decided by "
                      "frame computations.");
    }
    out.push_back("Local solutions only: the value of the ten-dimensional supergravity action is not evaluated.");
    return out;
}

std::string render_json(const std::vector<CheckResult>& results, const std::vector<std::string>& commentary)
{
    using json = nlohmann::ordered_json;
    std::ostringstream os;
    std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"skipped", 0}, {"c0_conflict", 0}};
    for (const auto& r : results) {
        json j{{"id", r.id}, {"group", r.group}, {"status", to_string(r.status)},
               {"lhs", r.lhs}, {"rhs", r.rhs}, {"detail", r.detail}};
        os << j.dump() << '\n';
        ++counts[to_string(r.status)];
    }
    json summary;
    for (const char* k : {"pass", "fail", "c0_conflict", "skipped"}) summary[k] = counts[k];
    summary["total"] = results.size();
    os << json{{"summary", summary}}.dump() << '\n';
    for (const auto& c : commentary) os << json{{"commentary", c}}.dump() << '\n';
    return os.str();
}

std::string render_text(const std::vector<CheckResult>& results, const std::vector<std::string>& commentary)
{
    std::ostringstream os;
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.id.size());
    std::map<Status, int> counts;
    for (const auto& r : results) {
        std::string st = to_string(r.status);
        os << (r.status == Status::pass ? "  " : "! ") << r.id << std::string(width - r.id.size() + 2, ' ') << st
           << std::string(12 - st.size(), ' ') << r.lhs;
        if (r.status != Status::pass) os << "  (expected " << r.rhs << ")";
        if (!r.detail.empty()) os << "  [" << r.detail << "]";
        os << '\n';
        ++counts[r.status];
    }
    os << "\n" << results.size() << " checks: " << counts[Status::pass] << " pass, " << counts[Status::fail]
       << " fail, " << counts[Status::c0_conflict] << " c0_conflict, " << counts[Status::skipped] << " skipped\n";
    for (const auto& c : commentary) os << "note: " << c << '\n';
    return os.str();
}

} // namespace gstruct
