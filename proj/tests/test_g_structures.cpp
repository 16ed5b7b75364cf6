#include "gstruct/format.hpp"
#include "gstruct/models.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace gstruct;
using Q = Rational;

namespace {

Form f(std::string_view s, int n) { return parse_form<Q>(s, default_labels(n)); }
Form f8(std::string_view s) { return parse_form<Q>(s, {0, 1, 2, 3, 4, 5, 6, 7}); }

Frame nil6_frame() { return std::get<Frame>(nil6().space); }

// Heisenberg algebra times R³: d e6 = e12.
Frame h3_r3()
{
    std::vector<Form> d(6, Form(6, 2));
    d[5] = f("e12", 6);
    return Frame(d);
}

// d e6 = e13 mixes the J-pairs (e1, e2) and (e3, e4).
Frame mixed()
{
    std::vector<Form> d(6, Form(6, 2));
    d[5] = f("e13", 6);
    return Frame(d);
}

} // namespace

TEST_CASE("canonical SU(3) forms")
{
    const auto s = canonical_su3();
    const Form vol = volume_form<Q>(6);
    CHECK(structure_orientation(s) == 1);
    CHECK(wedge(s.F, s.F, s.F) == Q(-6) * vol);
    CHECK(wedge(s.F, s.psi_plus).is_zero());
    CHECK(wedge(s.F, s.psi_minus).is_zero());
    CHECK(inner(s.psi_plus, s.psi_plus) == 4);
    CHECK(inner(s.psi_plus, s.psi_minus) == 0);
    CHECK(hodge_star(s.psi_plus) == s.psi_minus);
    CHECK(s.J.is_almost_complex());
    CHECK_THROWS_AS(make_su3(s.F, s.psi_minus, s.psi_minus), NotAdmissible);
    CHECK_THROWS_AS(make_su3(f("e12", 6), s.psi_plus, s.psi_minus), NotAdmissible);
}

TEST_CASE("canonical G2 and Spin(7) forms")
{
    const Form w = canonical_g2().omega;
    CHECK(wedge(w, hodge_star(w)) == Q(7) * volume_form<Q>(7));
    CHECK(hodge_star(w) == oracle::hodge(w));
    const Form phi = canonical_spin7().phi;
    CHECK(wedge(phi, phi) == Q(14) * volume_form<Q>(8));
    CHECK(hodge_star(phi) == phi);
    CHECK(std::get<G2Structure>(canonical(StructureKind::g2, 7)).omega == w);
    CHECK_THROWS(canonical(StructureKind::g2, 6));
}

TEST_CASE("canonical lifts")
{
    const auto g = lift_su3_to_g2(canonical_su3(), Space(Frame::abelian(6)));
    CHECK(g.structure.omega == canonical_g2().omega);
    CHECK(g.theta7.is_zero());
    CHECK(g.torsion.T.is_zero());
    const auto p = lift_g2_to_spin7(canonical_g2(), Space(Frame::abelian(7)));
    CHECK(p.structure.phi == canonical_spin7().phi);
    CHECK(labels(p.space).front() == 0);
    CHECK(p.theta8.is_zero());
}

TEST_CASE("Nijenhuis tensor")
{
    const auto s = canonical_su3();
    const auto flat = nijenhuis(Frame::abelian(6), s.J);
    CHECK(flat.tensor.is_zero());
    const auto n6 = nijenhuis(nil6_frame(), s.J);
    CHECK(n6.skew);
    REQUIRE(n6.form);
    CHECK(*n6.form == -s.psi_minus);
    // e1, e2 form a J-pair, so J is integrable there.
    CHECK(nijenhuis(h3_r3(), s.J).tensor.is_zero());
    const auto m = nijenhuis(mixed(), s.J);
    CHECK_FALSE(m.skew);
    CHECK_FALSE(m.form.has_value());
}

TEST_CASE("type (3,0)+(0,3) projection")
{
    const auto s = canonical_su3();
    CHECK(type_30_part(s.psi_plus, s.J) == s.psi_plus);
    CHECK(type_30_part(s.psi_minus, s.J) == s.psi_minus);
    CHECK(type_30_part(wedge(s.F, f("e1", 6)), s.J).is_zero());
    const Form a = f("e123 + 2*e145 - e356", 6);
    const Form p = type_30_part(a, s.J);
    CHECK(type_30_part(p, s.J) == p);
}

TEST_CASE("SU(3) analysis on Nil6")
{
    const auto s = canonical_su3();
    const auto rep = su3_analyze(s, nil6_frame());
    CHECK(rep.N_skew);
    CHECK(rep.cycon_holds);
    CHECK(rep.half_flat);
    CHECK(rep.W1plus == 0);
    CHECK(rep.W1minus == 3);
    const auto tor = su3_torsion(s, Space(nil6_frame()));
    CHECK(tor.T == tor.T_complex);
    CHECK(tor.type_30_relation);
    CHECK(tor.T == f("-2*e145 + e136 + e235 - e246", 6));
}

TEST_CASE("SU(3) torsion rejects inadmissible frames")
{
    const auto s = canonical_su3();
    CHECK_THROWS_AS(su3_torsion(s, Space(h3_r3())), NotAdmissible);
    CHECK_FALSE(su3_analyze(s, h3_r3()).cycon_holds);
    CHECK_FALSE(su3_analyze(s, mixed()).N_skew);
    CHECK_THROWS_AS(su3_torsion(s, Space(mixed())), NotAdmissible);
    // On a model space N cannot be computed and must be supplied.
    const auto m = s6_nearly_kaehler(Q(1));
    CHECK_THROWS_AS(su3_ingredients(s, m.space), UnsupportedOperation);
}

TEST_CASE("Lee forms")
{
    CHECK(lee_form(canonical_su3(), Space(Frame::abelian(6))).is_zero());
    CHECK(lee_form(GStructure(canonical_g2()), Space(Frame::abelian(7))).is_zero());
    const auto h = s7_nearly_parallel(Q(2));
    CHECK(lee_form(std::get<G2Structure>(h.structure), h.space).is_zero());
}

TEST_CASE("G2 torsion on the nearly parallel sphere")
{
    for (const Q& lambda : {Q(1), Q(6), Q(-3, 5)}) {
        const auto h = s7_nearly_parallel(lambda);
        const auto g = g2_torsion(std::get<G2Structure>(h.structure), h.space);
        CHECK(g.condition_holds);
        CHECK(g.T == Q(-lambda / 6) * canonical_g2().omega);
        CHECK(g.pairing == -7 * lambda);
    }
}

TEST_CASE("instanton membership")
{
    const auto s = canonical_su3();
    CHECK(in_su3(f("e12 - e34", 6), s));
    CHECK_FALSE(in_su3(s.F, s));
    CHECK_FALSE(in_su3(f("e13", 6), s));
    const auto g = canonical_g2();
    CHECK(in_g2(f("e12 - e34", 7), g));
    CHECK_FALSE(in_g2(f("e12 + e34", 7), g));
    const auto sp = canonical_spin7();
    CHECK(in_spin7(f8("e01 - e27"), sp));
    CHECK_FALSE(in_spin7(f8("e01 + e27"), sp));
    const auto rep = instanton_check(f("e12 + e34", 7), GStructure(g));
    CHECK_FALSE(rep.member);
    CHECK(rep.crosscheck_agrees);
    CHECK_THROWS(instanton_check(f("e123", 7), GStructure(g)));
}

TEST_CASE("curvature instantons and failing slots")
{
    const auto h = nil6();
    const auto rn = torsion_curvature(h.space, h.torsion);
    CHECK(instanton_check(rn, h.structure).member);
    const auto rg = riemannian_curvature(h.space);
    const auto rep = instanton_check(rg, h.structure);
    CHECK_FALSE(rep.member);
    CHECK(rep.failing_slot.has_value());
}

TEST_CASE("scalar identities")
{
    const auto h = nil6();
    ScalarIdentityInputs in{&h.space, h.structure, h.torsion, h.nijenhuis};
    const auto r = scalar_identity_check(ScalarIdentityKind::su3, in);
    CHECK(r.holds);
    CHECK(r.trace == Q(-3, 2));
    CHECK(r.trace == oracle::trace_ricci_scalar(riemannian_curvature(h.space)));
    ScalarIdentityInputs missing{&h.space};
    CHECK_THROWS(scalar_identity_check(ScalarIdentityKind::su3, missing));
}

TEST_CASE("Hermitian lift of the Sasakian sphere")
{
    const auto h = s5_sasakian();
    const auto lift = lift_contact_to_hermitian(std::get<ContactStructure>(h.structure), h.space);
    const Form e6 = Form::monomial(6, {5});
    CHECK(lift.theta6 == Q(4) * e6);
    REQUIRE(lift.lck_form);
    CHECK(*lift.lck_form == Q(2) * e6);
    CHECK(lift.T6 == insert_direction(h.torsion, 5));
    CHECK(lift.T6_from_lee == lift.T6);
    CHECK(lift.J6.is_almost_complex());
    const DilatonData dil{Q(1, 2) * lift.theta6};
    const auto eom = equation_of_motion_check(lift.space, lift.T6, lift.J6, dil);
    CHECK(eom.holds);
    CHECK(full_norm2(lift.T6) == 48);
}

TEST_CASE("Hessian")
{
    const Frame fr = nil6_frame();
    const auto hs = hessian(Space(fr), f("e6", 6));
    CHECK(hs == hs.transpose());
    const auto h = s5_sasakian();
    const auto lift = lift_contact_to_hermitian(std::get<ContactStructure>(h.structure), h.space);
    CHECK(hessian(lift.space, Form::monomial(6, {5})).isZero(0));
    CHECK_THROWS_AS(hessian(lift.space, Form::monomial(6, {0})), UnsupportedOperation);
}
