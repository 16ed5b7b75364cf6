#pragma once

#include "gstruct/model_space.hpp"
#include "gstruct/scalar.hpp"

#include <optional>
#include <string>
#include <variant>

namespace gstruct {

using Form = KForm<Rational>;
using Frame = LieFrame<Rational>;
using Model = ModelSpace<Rational>;
using Space = FrameSpace<Rational>;
using Curvature = Tensor4<Rational>;
using Endo = Endomorphism<Rational>;

struct SU3Structure {
    Form F, psi_plus, psi_minus;
    Endo J;
};

struct G2Structure {
    Form omega;
};

struct Spin7Structure {
    Form phi;
};

struct ContactStructure {
    Form eta, F5;
    Endo psi;
    int xi = -1;  // frame position of the Reeb field
};

struct DilatonData {
    Form dphi;
};

using GStructure = std::variant<SU3Structure, G2Structure, Spin7Structure, ContactStructure>;

enum class StructureKind { su3, g2, spin7, contact };

// J is derived from F through F(X, Y) = g(X, JY). Throws NotAdmissible.
SU3Structure make_su3(Form F, Form psi_plus, Form psi_minus);
ContactStructure make_contact(Form eta, Form F5);

SU3Structure canonical_su3();
G2Structure canonical_g2();
Spin7Structure canonical_spin7();  // frame e0..e7, e0 first
ContactStructure canonical_contact();
GStructure canonical(StructureKind kind, int dim);

// ±1 with vol = -F³/6.
Rational structure_orientation(const SU3Structure& s);

struct NijenhuisResult {
    Tensor3<Rational> tensor;  // g(N(e_i, e_j), e_k)
    bool skew = false;
    std::optional<Form> form;
};

// N(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY].
NijenhuisResult nijenhuis(const Frame& frame, const Endo& J);

// (3,0)+(0,3) part of a 3-form:
// ¼[α - α(J·,J·,·) - α(J·,·,J·) - α(·,J·,J·)].
Form type_30_part(const Form& a, const Endo& J);

Form lee_form(const SU3Structure& s, const Space& m);    // δF(J·)
Form lee_form(const G2Structure& s, const Space& m);     // -⅓ *(*dω ∧ ω)
Form lee_form(const Spin7Structure& s, const Space& m);  // -1/7 *(*dΦ ∧ Φ)
Form lee_form(const GStructure& s, const Space& m);

struct Su3Ingredients {
    Rational orientation;
    Form dF, dpsi_plus, dpsi_minus, theta6, N;
    Rational N_psi_plus, N_psi_minus;
};

// N must be supplied on a model space; on a Lie frame it is computed when absent.
Su3Ingredients su3_ingredients(const SU3Structure& s, const Space& m, const std::optional<Form>& N = std::nullopt);
bool su3_differential_conditions_hold(const SU3Structure& s, const Su3Ingredients& in);

struct Su3Report {
    Rational W1plus, W1minus;
    Form theta6;
    bool N_skew = false;
    bool half_flat = false;
    bool dF_wedge_F_zero = false;
    bool cycon_holds = false;
};

Su3Report su3_analyze(const SU3Structure& s, const Frame& frame);

struct Su3Torsion {
    Form T;          // from dF, θ⁶, N and Ψ±
    Form T_complex;  // -J^*dF + N
    Form dF_minus;
    bool type_30_relation = false;  // dF⁻ = -¾ J^*N
};

// Throws NotAdmissible when N is not a 3-form or the dΨ± conditions fail.
Su3Torsion su3_torsion(const SU3Structure& s, const Space& m, const std::optional<Form>& N = std::nullopt);

struct G2Torsion {
    Form T;
    Form theta7;
    Rational pairing;  // (dω, *ω)
    bool condition_holds = false;  // d*ω = θ⁷ ∧ *ω
};

G2Torsion g2_torsion(const G2Structure& s, const Space& m, bool require_condition = true);

struct Spin7Torsion {
    Form T;
    Form theta8;
};

// T = *dΦ - (7/6) *(θ⁸ ∧ Φ).
Spin7Torsion spin7_torsion(const Spin7Structure& s, const Space& m);

bool in_su3(const Form& a, const SU3Structure& s);
bool in_g2(const Form& a, const G2Structure& s);
bool in_spin7(const Form& a, const Spin7Structure& s);

struct InstantonReport {
    bool member = true;
    bool crosscheck_agrees = true;
    std::optional<std::pair<int, int>> failing_slot;
};

InstantonReport instanton_check(const Form& a, const GStructure& s);
// Every slot R(·, ·, e_k, e_l).
InstantonReport instanton_check(const Curvature& r, const GStructure& s);

struct G2Lift {
    G2Structure structure;
    Space space;
    Form theta7;
    Rational pairing;
    Form theta7_predicted;    // θ⁶ - ¼(N,Ψ⁻) e_new
    Rational pairing_predicted;  // -3/2 (N,Ψ⁺)
    G2Torsion torsion;
};

// ω = -F ∧ e_new - Ψ⁺ on M × R. Requires an admissible SU(3) structure.
G2Lift lift_su3_to_g2(const SU3Structure& s, const Space& m, const std::optional<Form>& N = std::nullopt);

struct Spin7Lift {
    Spin7Structure structure;
    Space space;
    Form theta8;
    Form theta8_predicted;  // 6/7 θ⁷ + 1/7 (dω,*ω) e_new
    Spin7Torsion torsion;
};

// Φ = e_new ∧ ω + *ω with e_new placed first. Requires d*ω = θ⁷ ∧ *ω.
Spin7Lift lift_g2_to_spin7(const G2Structure& s, const Space& m);

struct HermitianLift {
    Space space;
    Form F6;
    Endo J6;
    Form dF6;
    Form theta6;                // δF(J·)
    std::optional<Form> lck_form;  // ϑ with dF = ϑ ∧ F
    Form T6;                    // -J^*dF, the Bismut torsion
    Form T6_from_lee;           // -*dF + *(θ⁶ ∧ F), structure orientation
    Form dT6;
};

// F⁶ = F⁵ + η ∧ e_new on M × R. Requires dη = 2F⁵.
HermitianLift lift_contact_to_hermitian(const ContactStructure& c, const Space& m);

// k! · inner(a, a): the sum over all ordered index tuples.
Rational full_norm2(const Form& a);

enum class ScalarIdentityKind { su3, g2, dilaton };

struct ScalarIdentityInputs {
    const Space* space = nullptr;
    std::optional<GStructure> structure;
    std::optional<Form> torsion;
    std::optional<Form> nijenhuis;
    std::optional<DilatonData> dilaton;
};

struct ScalarIdentityReport {
    Rational trace;    // s^g from the curvature
    Rational formula;  // right side built from the structure
    bool holds = false;
};

ScalarIdentityReport scalar_identity_check(ScalarIdentityKind kind, const ScalarIdentityInputs& in);

struct MotionReport {
    Matrix<Rational> residual;
    bool holds = false;
};

// Ric - ¼ H∘H + 2 Hess φ - ¼ Σ dH(X, JY, e_i, Je_i), entrywise.
MotionReport equation_of_motion_check(const Space& m, const Form& H, const Endo& J, const DilatonData& d);

Matrix<Rational> hessian(const Space& m, const Form& dphi);

} // namespace gstruct
