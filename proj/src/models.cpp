#include "gstruct/models.hpp"

#include "gstruct/format.hpp"

namespace gstruct {

namespace {

using Q = Rational;

void require(bool ok, const std::string& what)
{
    if (!ok) throw InternalConsistency("model data inconsistent: " + what);
}

Form e(int n, std::initializer_list<int> labels_1based, const Q& c = Q(1))
{
    std::vector<int> pos;
    for (int l : labels_1based) pos.push_back(l - 1);
    return Form::monomial(n, pos, c);
}

} // namespace

ModelHandle nil6()
{
    const int n = 6;
    std::vector<Form> d(n, Form(n, 2));
    d[0] = e(n, {3, 6});
    d[3] = e(n, {2, 6});
    d[4] = e(n, {2, 3});
    Frame frame(d);
    ModelHandle h{"nil6", {}, frame, canonical_su3(), Form(n, 3)};
    const auto& s = std::get<SU3Structure>(h.structure);
    auto nj = nijenhuis(frame, s.J);
    require(nj.skew, "Nijenhuis tensor of nil6 is not skew");
    h.nijenhuis = nj.form;
    h.torsion = su3_torsion(s, h.space, h.nijenhuis).T;
    const auto conn = add_torsion(levi_civita(frame), h.torsion);
    require(is_parallel(conn, h.torsion), "torsion not parallel");
    require(dT_quadratic(h.torsion) == exterior_derivative(frame, h.torsion), "quadratic dT differs from dT");
    return h;
}

ModelHandle s6_nearly_kaehler(const Rational& t)
{
    if (t == 0) throw std::invalid_argument("s6_nk needs t != 0");
    const int n = 6;
    const SU3Structure s = canonical_su3();
    const Q a2 = 2 * t * t;
    const Form T = t * s.psi_minus;
    const Form N = Q(4) * T;
    const Form starF = hodge_star(s.F);
    std::vector<DerivativeFact<Q>> facts{
        {s.F, Q(-3 * t) * hodge_star(s.psi_minus)},
        {s.psi_plus, Form(n, 4)},
        {s.psi_minus, Q(-4 * t) * starF},
        {starF, Form(n, 5)},
    };
    Model model(constant_curvature(n, Q(a2 / 2)), T, facts);
    ModelHandle h{"s6_nk", {{"t", t}}, model, s, T, N, true};

    // Constant type: T_ijm T_klm = a²/2 (g_ik g_jl - g_jk g_il - F_ik F_jl + F_jk F_il).
    const auto p = contract_pair(T, T);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Q rhs = Q(i == k && j == l) - Q(j == k && i == l) - s.F({i, k}) * s.F({j, l}) + s.F({j, k}) * s.F({i, l});
                    require(p(i, j, k, l) == a2 / 2 * rhs, "constant type identity");
                }
    const Form dT = exterior_derivative(model, T);
    require(dT == Q(-2 * a2) * starF, "dT = -2a² *F");
    require(dT_quadratic(T) == dT, "quadratic dT differs from dT");
    require(exterior_derivative(model, exterior_derivative(model, s.F)).is_zero(), "d²F = 0");
    require(su3_torsion(s, h.space, N).T == T, "torsion formulas reproduce T");
    h.notes.push_back("torsion assumed parallel; quadratic dT agreement is the observable proxy");
    return h;
}

ModelHandle s7_nearly_parallel(const Rational& lambda)
{
    if (lambda == 0) throw std::invalid_argument("s7_np needs lambda != 0");
    const int n = 7;
    const G2Structure s = canonical_g2();
    const Form starw = hodge_star(s.omega);
    const Form T = Q(-lambda / 6) * s.omega;
    std::vector<DerivativeFact<Q>> facts{
        {s.omega, Q(-lambda) * starw},
        {starw, Form(n, 5)},
    };
    Model model(constant_curvature(n, Q(lambda * lambda / 16)), T, facts);
    ModelHandle h{"s7_np", {{"lambda", lambda}}, model, s, T, std::nullopt, true};
    const Form dT = exterior_derivative(model, T);
    require(dT == Q(lambda * lambda / 6) * starw, "dT = λ²/6 *ω");
    require(dT_quadratic(T) == dT, "quadratic dT differs from dT");
    require(g2_torsion(s, h.space).T == T, "torsion formula reproduces T");
    h.notes.push_back("torsion assumed parallel; quadratic dT agreement is the observable proxy");
    return h;
}

Curvature sasakian_curvature(const Form& eta, const Form& F5)
{
    const int n = eta.dim();
    auto g = [](int i, int j) { return Q(i == j); };
    auto F = [&](int i, int j) { return F5({i, j}); };
    auto et = [&](int i) { return eta({i}); };
    Curvature r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    r(i, j, k, l) = Q(4, 3) * (g(j, k) * g(i, l) - g(i, k) * g(j, l)) +
                                    Q(1, 3) * (F(k, j) * F(l, i) - F(k, i) * F(l, j) + 2 * F(i, j) * F(l, k)) +
                                    Q(1, 3) * (et(i) * et(k) * g(j, l) - et(j) * et(k) * g(i, l) +
                                               et(j) * et(l) * g(i, k) - et(i) * et(l) * g(j, k));
    return r;
}

ModelHandle s5_sasakian()
{
    const int n = 5;
    const ContactStructure c = canonical_contact();
    const Form T = Q(2) * wedge(c.eta, c.F5);
    const Form FF = wedge(c.F5, c.F5);
    std::vector<DerivativeFact<Q>> facts{
        {c.eta, Q(2) * c.F5},
        {c.F5, Form(n, 3)},
        {wedge(c.eta, c.F5), Q(2) * FF},
        {FF, Form(n, 5)},
    };
    const Curvature rg = sasakian_curvature(c.eta, c.F5);
    Model model(rg, T, facts);
    ModelHandle h{"s5_sasaki", {}, model, c, T, std::nullopt, true};
    Matrix<Q> expected = Q(6) * Matrix<Q>::Identity(n, n);
    expected(c.xi, c.xi) -= 2;
    require(ricci(rg) == expected, "Ric = 6g - 2η⊗η");
    require(first_bianchi(rg) && pair_symmetric(rg), "curvature symmetries");
    require(exterior_derivative(model, T) == Q(4) * FF, "dT = 4F∧F");
    require(dT_quadratic(T) == Q(4) * FF, "quadratic dT differs from dT");
    h.notes.push_back("torsion assumed parallel; quadratic dT agreement is the observable proxy");
    return h;
}

std::vector<std::string> model_names() { return {"nil6", "s6_nk", "s7_np", "s5_sasaki"}; }

ModelHandle make_model(const std::string& name, const std::map<std::string, Rational>& params)
{
    auto take = [&](const std::string& key, const Q& fallback, std::initializer_list<const char*> allowed) {
        for (const auto& [k, v] : params) {
            bool ok = false;
            for (const char* a : allowed) ok = ok || k == a;
            if (!ok) throw UsageError("model " + name + " has no parameter '" + k + "'");
        }
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    };
    if (name == "nil6") {
        take("", Q(0), {});
        return nil6();
    }
    if (name == "s5_sasaki") {
        take("", Q(0), {});
        return s5_sasakian();
    }
    if (name == "s6_nk") {
        Q t = take("t", Q(1), {"t"});
        if (t == 0) throw UsageError("parameter t must be nonzero");
        return s6_nearly_kaehler(t);
    }
    if (name == "s7_np") {
        Q l = take("lambda", Q(1), {"lambda"});
        if (l == 0) throw UsageError("parameter lambda must be nonzero");
        return s7_nearly_parallel(l);
    }
    throw UsageError("unknown model '" + name + "'");
}

} // namespace gstruct
