#include "gstruct/g_structures.hpp"

#include "gstruct/format.hpp"

namespace gstruct {

namespace {

using Q = Rational;

std::vector<int> labels_from(int first, int n)
{
    std::vector<int> l(n);
    for (int p = 0; p < n; ++p) l[p] = first + p;
    return l;
}

Form basis(int n, int p) { return Form::monomial(n, {p}); }

Form star(const Form& a, const Q& orientation) { return orientation * hodge_star(a); }

int max_label(const Space& m)
{
    const auto& l = labels(m);
    return *std::max_element(l.begin(), l.end());
}

int min_label(const Space& m)
{
    const auto& l = labels(m);
    return *std::min_element(l.begin(), l.end());
}

// Replaces the argument in `slot` by J of it.
Tensor3<Q> with_J_in_slot(const Tensor3<Q>& a, const Endo& J, int slot)
{
    const int n = a.dim();
    Tensor3<Q> out(n);
    // out(.., r, ..) = Σ_b J(b, r) a(.., b, ..), visiting only nonzero entries of a.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Q& v = a(i, j, k);
                if (v == 0) continue;
                std::array<int, 3> idx{i, j, k};
                const int b = idx[slot];
                for (int r = 0; r < n; ++r) {
                    const Q& jb = J(b, r);
                    if (jb == 0) continue;
                    idx[slot] = r;
                    out.at(idx) += jb * v;
                }
            }
    return out;
}

Q zero_form_value(const Form& a) { return a.is_zero() ? Q(0) : scalar_part(a); }

} // namespace

SU3Structure make_su3(Form F, Form psi_plus, Form psi_minus)
{
    if (F.dim() != 6 || psi_plus.dim() != 6 || psi_minus.dim() != 6)
        throw DimensionMismatch("an SU(3) structure lives on a 6-frame");
    if (F.degree() != 2 || psi_plus.degree() != 3 || psi_minus.degree() != 3)
        throw DegreeMismatch("SU(3) structure needs a 2-form and two 3-forms");
    if (!wedge(F, psi_plus).is_zero() || !wedge(F, psi_minus).is_zero())
        throw NotAdmissible("su3_compatibility", "F ∧ Ψ± must vanish");
    if (inner(psi_plus, psi_plus) != inner(psi_minus, psi_minus))
        throw NotAdmissible("su3_compatibility", "Ψ+ and Ψ- must have equal length");
    Endo J = endomorphism_from_two_form(F);
    if (!J.is_almost_complex()) throw NotAdmissible("almost_complex", "J derived from F does not square to -1");
    SU3Structure s{std::move(F), std::move(psi_plus), std::move(psi_minus), std::move(J)};
    if (s.psi_plus.is_zero() || structure_orientation(s) * hodge_star(s.psi_plus) != s.psi_minus)
        throw NotAdmissible("su3_compatibility", "Ψ- must equal *Ψ+ in the orientation of F");
    return s;
}

ContactStructure make_contact(Form eta, Form F5)
{
    if (eta.degree() != 1 || F5.degree() != 2) throw DegreeMismatch("contact structure needs a 1-form and a 2-form");
    if (eta.dim() != F5.dim()) throw DimensionMismatch("contact forms on different frames");
    if (eta.terms().size() != 1 || eta.terms().begin()->second != 1)
        throw NotAdmissible("contact_frame", "η must be a frame 1-form");
    const int xi = positions(eta.terms().begin()->first).front();
    const int n = eta.dim();
    Endo psi = endomorphism_from_two_form(F5);
    Matrix<Q> expected = -Matrix<Q>::Identity(n, n);
    expected(xi, xi) += 1;
    if (psi.matrix() * psi.matrix() != expected || !psi.matrix().col(xi).isZero(0))
        throw NotAdmissible("contact_metric", "ψ² = -Id + η⊗ξ fails");
    return {std::move(eta), std::move(F5), std::move(psi), xi};
}

SU3Structure canonical_su3()
{
    const auto l = labels_from(1, 6);
    return make_su3(parse_form<Q>("-e12 - e34 - e56", l), parse_form<Q>("-e135 + e236 + e146 + e245", l),
                    parse_form<Q>("-e136 - e145 - e235 + e246", l));
}

G2Structure canonical_g2()
{
    return {parse_form<Q>("e127 - e236 + e347 + e567 - e146 - e245 + e135", labels_from(1, 7))};
}

Spin7Structure canonical_spin7()
{
    return {parse_form<Q>("e0127 - e0236 + e0347 + e0567 - e0146 - e0245 + e0135"
                          " + e3456 + e1457 + e1256 + e1234 + e2357 + e1367 - e2467",
                          labels_from(0, 8))};
}

ContactStructure canonical_contact()
{
    const auto l = labels_from(1, 5);
    return make_contact(parse_form<Q>("e5", l), parse_form<Q>("e12 + e34", l));
}

GStructure canonical(StructureKind kind, int dim)
{
    const int expected = kind == StructureKind::su3 ? 6 : kind == StructureKind::g2 ? 7 : kind == StructureKind::spin7 ? 8 : 5;
    if (dim != expected)
        throw DimensionMismatch("canonical structure of this kind lives in dimension " + std::to_string(expected));
    switch (kind) {
    case StructureKind::su3: return canonical_su3();
    case StructureKind::g2: return canonical_g2();
    case StructureKind::spin7: return canonical_spin7();
    case StructureKind::contact: return canonical_contact();
    }
    throw std::invalid_argument("unknown structure kind");
}

Rational structure_orientation(const SU3Structure& s)
{
    Q eps = -scalar_part(wedge(s.F, s.F, s.F)) / 6;
    if (eps != 1 && eps != -1) throw NotAdmissible("su3_normalization", "F³ is not ±6 vol");
    return eps;
}

NijenhuisResult nijenhuis(const Frame& frame, const Endo& J)
{
    const int n = frame.dim();
    if (J.dim() != n) throw DimensionMismatch("J and frame differ in dimension");
    const auto& c = frame.brackets();
    // b(i, j, p): p-component of [e_i, e_j]; bracket of general vectors is bilinear.
    auto bracket = [&](const Vector<Q>& x, const Vector<Q>& y) {
        Vector<Q> out = Vector<Q>::Zero(n);
        for (int a = 0; a < n; ++a) {
            if (x(a) == 0) continue;
            for (int b = 0; b < n; ++b) {
                if (y(b) == 0) continue;
                for (int p = 0; p < n; ++p)
                    if (c(a, b, p) != 0) out(p) += x(a) * y(b) * c(a, b, p);
            }
        }
        return out;
    };
    const Matrix<Q>& m = J.matrix();
    // Eigen's generic product does not skip zeros, which is costly on rationals.
    auto apply = [&](const Vector<Q>& v) {
        Vector<Q> out = Vector<Q>::Zero(n);
        for (int b = 0; b < n; ++b) {
            if (v(b) == 0) continue;
            for (int a = 0; a < n; ++a)
                if (m(a, b) != 0) out(a) += m(a, b) * v(b);
        }
        return out;
    };
    NijenhuisResult res{Tensor3<Q>(n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vector<Q> x = Vector<Q>::Unit(n, i), y = Vector<Q>::Unit(n, j);
            const Vector<Q> jx = m.col(i), jy = m.col(j);
            const Vector<Q> v = bracket(jx, jy) - bracket(x, y) - apply(bracket(jx, y)) - apply(bracket(x, jy));
            for (int k = 0; k < n; ++k) res.tensor(i, j, k) = v(k);
        }
    res.form = to_form<Q, 3>(res.tensor);
    res.skew = res.form.has_value();
    return res;
}

Form type_30_part(const Form& a, const Endo& J)
{
    if (a.degree() != 3) throw DegreeMismatch("type projection needs a 3-form");
    const auto t = to_tensor<Q, 3>(a);
    const auto j0 = with_J_in_slot(t, J, 0);
    const auto j01 = with_J_in_slot(j0, J, 1);
    const auto j02 = with_J_in_slot(j0, J, 2);
    const auto j12 = with_J_in_slot(with_J_in_slot(t, J, 1), J, 2);
    Tensor3<Q> p = t - j01 - j02 - j12;
    p *= Q(1, 4);
    auto f = to_form<Q, 3>(p);
    if (!f) throw InternalConsistency("type projection of a 3-form is not alternating");
    return *f;
}

Form lee_form(const SU3Structure& s, const Space& m)
{
    return pullback_endo(s.J, codifferential(m, s.F));
}

Form lee_form(const G2Structure& s, const Space& m)
{
    const Form d = exterior_derivative(m, s.omega);
    return Q(-1, 3) * hodge_star(wedge(hodge_star(d), s.omega));
}

Form lee_form(const Spin7Structure& s, const Space& m)
{
    const Form d = exterior_derivative(m, s.phi);
    return Q(-1, 7) * hodge_star(wedge(hodge_star(d), s.phi));
}

Form lee_form(const GStructure& s, const Space& m)
{
    if (std::holds_alternative<ContactStructure>(s)) throw UnsupportedOperation("no Lee form for a contact structure");
    return std::visit(
        [&](const auto& x) -> Form {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, ContactStructure>) return Form();
            else return lee_form(x, m);
        },
        s);
}

Su3Ingredients su3_ingredients(const SU3Structure& s, const Space& m, const std::optional<Form>& N)
{
    Su3Ingredients in;
    in.orientation = structure_orientation(s);
    if (N) {
        in.N = *N;
    } else if (auto* f = std::get_if<Frame>(&m)) {
        auto nj = nijenhuis(*f, s.J);
        if (!nj.skew) throw NotAdmissible("nijenhuis_skew", "Nijenhuis tensor is not a 3-form");
        in.N = *nj.form;
    } else {
        throw UnsupportedOperation("Nijenhuis tensor must be supplied on a model space");
    }
    in.dF = exterior_derivative(m, s.F);
    in.dpsi_plus = exterior_derivative(m, s.psi_plus);
    in.dpsi_minus = exterior_derivative(m, s.psi_minus);
    in.theta6 = lee_form(s, m);
    in.N_psi_plus = inner(in.N, s.psi_plus);
    in.N_psi_minus = inner(in.N, s.psi_minus);
    return in;
}

bool su3_differential_conditions_hold(const SU3Structure& s, const Su3Ingredients& in)
{
    const Form starF = star(s.F, in.orientation);
    const Form plus = wedge(in.theta6, s.psi_plus) - Q(in.N_psi_plus / 4) * starF;
    const Form minus = wedge(in.theta6, s.psi_minus) - Q(in.N_psi_minus / 4) * starF;
    return in.dpsi_plus == plus && in.dpsi_minus == minus;
}

Su3Report su3_analyze(const SU3Structure& s, const Frame& frame)
{
    const Space m = frame;
    Su3Report r;
    const Form dF = exterior_derivative(frame, s.F);
    const Form dpp = exterior_derivative(frame, s.psi_plus);
    const Form dpm = exterior_derivative(frame, s.psi_minus);
    r.W1plus = scalar_part(wedge(dpp, s.F));
    r.W1minus = scalar_part(wedge(dpm, s.F));
    r.theta6 = lee_form(s, m);
    r.dF_wedge_F_zero = wedge(dF, s.F).is_zero();
    r.half_flat = dpp.is_zero() && r.theta6.is_zero();
    auto nj = nijenhuis(frame, s.J);
    r.N_skew = nj.skew;
    if (nj.skew) r.cycon_holds = su3_differential_conditions_hold(s, su3_ingredients(s, m, nj.form));
    return r;
}

Su3Torsion su3_torsion(const SU3Structure& s, const Space& m, const std::optional<Form>& N)
{
    const Su3Ingredients in = su3_ingredients(s, m, N);
    if (!su3_differential_conditions_hold(s, in))
        throw NotAdmissible("dPsi", "dΨ± = θ⁶∧Ψ± - ¼(N,Ψ±)*F fails");
    Su3Torsion out;
    out.T = -star(in.dF, in.orientation) + star(wedge(in.theta6, s.F), in.orientation) +
            Q(in.N_psi_plus / 4) * s.psi_plus + Q(in.N_psi_minus / 4) * s.psi_minus;
    out.T_complex = -pullback_endo(s.J, in.dF) + in.N;
    if (out.T != out.T_complex)
        throw InternalConsistency("torsion from the Lee form differs from -J^*dF + N");
    out.dF_minus = type_30_part(in.dF, s.J);
    out.type_30_relation = out.dF_minus == Q(-3, 4) * pullback_endo(s.J, in.N);
    return out;
}

G2Torsion g2_torsion(const G2Structure& s, const Space& m, bool require_condition)
{
    G2Torsion out;
    const Form dw = exterior_derivative(m, s.omega);
    const Form sw = hodge_star(s.omega);
    out.pairing = inner(dw, sw);
    out.theta7 = lee_form(s, m);
    out.condition_holds = exterior_derivative(m, sw) == wedge(out.theta7, sw);
    if (require_condition && !out.condition_holds)
        throw NotAdmissible("d*omega", "d*ω = θ⁷ ∧ *ω fails");
    out.T = Q(out.pairing / 6) * s.omega - hodge_star(dw) + hodge_star(wedge(out.theta7, s.omega));
    return out;
}

Spin7Torsion spin7_torsion(const Spin7Structure& s, const Space& m)
{
    Spin7Torsion out;
    out.theta8 = lee_form(s, m);
    out.T = hodge_star(exterior_derivative(m, s.phi)) - Q(7, 6) * hodge_star(wedge(out.theta8, s.phi));
    return out;
}

bool in_su3(const Form& a, const SU3Structure& s)
{
    return pullback_endo(s.J, a) == a && inner(a, s.F) == 0;
}

bool in_g2(const Form& a, const G2Structure& s)
{
    return hodge_star(wedge(a, s.omega)) == -a;
}

bool in_spin7(const Form& a, const Spin7Structure& s)
{
    return hodge_star(wedge(a, s.phi)) == -a;
}

namespace {

// α_mn ω_mnp = 0 for every p.
bool g2_contraction_vanishes(const Form& a, const Form& omega)
{
    const int n = a.dim();
    const auto w = to_tensor<Q, 3>(omega);
    for (int p = 0; p < n; ++p) {
        Q acc(0);
        for (const auto& [mask, c] : a.terms()) {
            auto ij = positions(mask);
            acc += c * w(ij[0], ij[1], p);
        }
        if (acc != 0) return false;
    }
    return true;
}

// ½ α_pq Φ_pqmn = -α_mn.
bool spin7_contraction_holds(const Form& a, const Form& phi)
{
    const int n = a.dim();
    const auto f = to_tensor<Q, 4>(phi);
    for (int m = 0; m < n; ++m)
        for (int k = m + 1; k < n; ++k) {
            Q acc(0);
            for (const auto& [mask, c] : a.terms()) {
                auto pq = positions(mask);
                acc += c * f(pq[0], pq[1], m, k);
            }
            if (acc != -a({m, k})) return false;
        }
    return true;
}

} // namespace

InstantonReport instanton_check(const Form& a, const GStructure& s)
{
    if (a.degree() != 2) throw DegreeMismatch("instanton condition applies to 2-forms");
    InstantonReport r;
    if (auto* x = std::get_if<SU3Structure>(&s)) {
        if (x->F.dim() != a.dim()) throw DimensionMismatch("structure and form differ in dimension");
        r.member = in_su3(a, *x);
    } else if (auto* x = std::get_if<G2Structure>(&s)) {
        if (x->omega.dim() != a.dim()) throw DimensionMismatch("structure and form differ in dimension");
        r.member = in_g2(a, *x);
        r.crosscheck_agrees = g2_contraction_vanishes(a, x->omega) == r.member;
    } else if (auto* x = std::get_if<Spin7Structure>(&s)) {
        if (x->phi.dim() != a.dim()) throw DimensionMismatch("structure and form differ in dimension");
        r.member = in_spin7(a, *x);
        r.crosscheck_agrees = spin7_contraction_holds(a, x->phi) == r.member;
    } else {
        throw UnsupportedOperation("no instanton condition for a contact structure");
    }
    return r;
}

InstantonReport instanton_check(const Curvature& r, const GStructure& s)
{
    InstantonReport out;
    const int n = r.dim();
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
            auto one = instanton_check(curvature_slot(r, k, l), s);
            out.crosscheck_agrees = out.crosscheck_agrees && one.crosscheck_agrees;
            if (!one.member && out.member) {
                out.member = false;
                out.failing_slot = std::make_pair(k, l);
            }
        }
    return out;
}

G2Lift lift_su3_to_g2(const SU3Structure& s, const Space& m, const std::optional<Form>& N)
{
    const Su3Ingredients in = su3_ingredients(s, m, N);
    su3_torsion(s, m, in.N);
    const int n = dim(m);
    Space lifted = product_with_line(m, max_label(m) + 1, Placement::back);
    const Form e = basis(n + 1, n);
    const Form omega = -wedge(insert_direction(s.F, n), e) - insert_direction(s.psi_plus, n);
    G2Lift out{{omega}, lifted};
    out.torsion = g2_torsion(out.structure, lifted, false);
    out.theta7 = out.torsion.theta7;
    out.pairing = out.torsion.pairing;
    out.theta7_predicted = insert_direction(in.theta6, n) - Q(in.N_psi_minus / 4) * e;
    out.pairing_predicted = Q(-3, 2) * in.N_psi_plus;
    return out;
}

Spin7Lift lift_g2_to_spin7(const G2Structure& s, const Space& m)
{
    const G2Torsion g2 = g2_torsion(s, m, true);
    const int n = dim(m);
    Space lifted = product_with_line(m, min_label(m) - 1, Placement::front);
    const Form e = basis(n + 1, 0);
    const Form phi = wedge(e, insert_direction(s.omega, 0)) + insert_direction(hodge_star(s.omega), 0);
    Spin7Lift out{{phi}, lifted};
    out.torsion = spin7_torsion(out.structure, lifted);
    out.theta8 = out.torsion.theta8;
    out.theta8_predicted = Q(6, 7) * insert_direction(g2.theta7, 0) + Q(g2.pairing / 7) * e;
    return out;
}

HermitianLift lift_contact_to_hermitian(const ContactStructure& c, const Space& m)
{
    if (exterior_derivative(m, c.eta) != Q(2) * c.F5) throw NotAdmissible("sasaki", "dη = 2F fails");
    const int n = dim(m);
    HermitianLift out;
    out.space = product_with_line(m, max_label(m) + 1, Placement::back);
    const Form e = basis(n + 1, n);
    out.F6 = insert_direction(c.F5, n) + wedge(insert_direction(c.eta, n), e);
    out.J6 = endomorphism_from_two_form(out.F6);
    if (!out.J6.is_almost_complex()) throw NotAdmissible("almost_complex", "lifted J does not square to -1");
    out.dF6 = exterior_derivative(out.space, out.F6);
    out.theta6 = pullback_endo(out.J6, codifferential(out.space, out.F6));
    // *(*(ϑ∧F)∧F) = -2ϑ for every 1-form ϑ in dimension 6.
    Form lck = Q(-1, 2) * hodge_star(wedge(hodge_star(out.dF6), out.F6));
    if (wedge(lck, out.F6) == out.dF6) out.lck_form = lck;
    out.T6 = -pullback_endo(out.J6, out.dF6);
    const Q eps = -scalar_part(wedge(out.F6, out.F6, out.F6)) / 6;
    out.T6_from_lee = -star(out.dF6, eps) + star(wedge(out.theta6, out.F6), eps);
    out.dT6 = exterior_derivative(out.space, out.T6);
    return out;
}

Rational full_norm2(const Form& a)
{
    Q f(1);
    for (int k = 2; k <= a.degree(); ++k) f *= k;
    return f * inner(a, a);
}

ScalarIdentityReport scalar_identity_check(ScalarIdentityKind kind, const ScalarIdentityInputs& in)
{
    if (!in.space) throw UnsupportedOperation("scalar identity needs a space");
    const Space& m = *in.space;
    ScalarIdentityReport r;
    r.trace = scalar_curvature(riemannian_curvature(m));
    switch (kind) {
    case ScalarIdentityKind::su3: {
        if (!in.structure || !std::holds_alternative<SU3Structure>(*in.structure))
            throw UnsupportedOperation("SU(3) scalar identity needs an SU(3) structure");
        const auto& s = std::get<SU3Structure>(*in.structure);
        const auto ing = su3_ingredients(s, m, in.nijenhuis);
        const Form T = in.torsion ? *in.torsion : su3_torsion(s, m, ing.N).T;
        const Q delta = zero_form_value(codifferential(m, ing.theta6));
        r.formula = ing.N_psi_plus * ing.N_psi_plus / 8 + ing.N_psi_minus * ing.N_psi_minus / 8 +
                    2 * full_norm2(ing.theta6) - full_norm2(T) / 12 + 3 * delta;
        break;
    }
    case ScalarIdentityKind::g2: {
        if (!in.structure || !std::holds_alternative<G2Structure>(*in.structure))
            throw UnsupportedOperation("G2 scalar identity needs a G2 structure");
        const auto t = g2_torsion(std::get<G2Structure>(*in.structure), m, true);
        const Q delta = zero_form_value(codifferential(m, t.theta7));
        r.formula = t.pairing * t.pairing / 18 + full_norm2(t.theta7) - full_norm2(t.T) / 12 + 3 * delta;
        break;
    }
    case ScalarIdentityKind::dilaton: {
        if (!in.torsion || !in.dilaton) throw UnsupportedOperation("dilaton identity needs torsion and dφ");
        const Form& dphi = in.dilaton->dphi;
        const Q delta = zero_form_value(codifferential(m, dphi));
        r.formula = 8 * full_norm2(dphi) - full_norm2(*in.torsion) / 12 + 6 * delta;
        break;
    }
    }
    r.holds = r.trace == r.formula;
    return r;
}

Matrix<Rational> hessian(const Space& m, const Form& dphi)
{
    const int n = dim(m);
    if (dphi.degree() != 1 || dphi.dim() != n) throw DegreeMismatch("dφ must be a 1-form on the frame");
    Matrix<Q> h = Matrix<Q>::Zero(n, n);
    if (auto* f = std::get_if<Frame>(&m)) {
        if (!exterior_derivative(*f, dphi).is_zero()) throw NotAdmissible("closed", "dφ is not closed");
        const auto lc = levi_civita(*f);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int k = 0; k < n; ++k) h(x, y) -= lc.gamma(x, y, k) * dphi({k});
        return h;
    }
    Mask support = 0;
    for (const auto& [mask, c] : dphi.terms()) support |= mask;
    if (support & ~std::get<Model>(m).line_mask())
        throw UnsupportedOperation("Hessian on a model space is known only along line factors");
    return h;
}

MotionReport equation_of_motion_check(const Space& m, const Form& H, const Endo& J, const DilatonData& d)
{
    const int n = dim(m);
    const Matrix<Q> ric = ricci(riemannian_curvature(m));
    const Matrix<Q> hess = hessian(m, d.dphi);
    const auto h = to_tensor<Q, 3>(H);
    const auto dh = to_tensor<Q, 4>(exterior_derivative(m, H));
    MotionReport r{Matrix<Q>::Zero(n, n)};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Q hh(0), twist(0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) hh += h(x, i, j) * h(y, i, j);
            for (int i = 0; i < n; ++i)
                for (int b = 0; b < n; ++b) {
                    if (J(b, y) == 0) continue;
                    for (int a = 0; a < n; ++a)
                        if (J(a, i) != 0) twist += J(b, y) * dh(x, b, i, a) * J(a, i);
                }
            r.residual(x, y) = ric(x, y) - hh / 4 + 2 * hess(x, y) - twist / 4;
        }
    r.holds = r.residual.isZero(0);
    return r;
}

} // namespace gstruct
