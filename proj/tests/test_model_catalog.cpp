#include "gstruct/format.hpp"
#include "gstruct/models.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace gstruct;
using Q = Rational;

namespace {

Form f(std::string_view s, int n) { return parse_form<Q>(s, default_labels(n)); }

} // namespace

TEST_CASE("registry")
{
    const auto names = model_names();
    CHECK(names == std::vector<std::string>{"nil6", "s6_nk", "s7_np", "s5_sasaki"});
    for (const auto& n : names) CHECK(make_model(n, {}).name == n);
    CHECK(make_model("s6_nk", {}).params.at("t") == 1);
    CHECK(make_model("s7_np", {{"lambda", Q(6)}}).params.at("lambda") == 6);
    CHECK_THROWS_AS(make_model("cp3", {}), UsageError);
    CHECK_THROWS_AS(make_model("nil6", {{"t", Q(1)}}), UsageError);
    CHECK_THROWS_AS(make_model("s6_nk", {{"lambda", Q(1)}}), UsageError);
    CHECK_THROWS_AS(make_model("s6_nk", {{"t", Q(0)}}), UsageError);
    CHECK_THROWS_AS(make_model("s7_np", {{"lambda", Q(0)}}), UsageError);
}

TEST_CASE("Nil6 data")
{
    const auto h = nil6();
    const auto& fr = std::get<Frame>(h.space);
    CHECK(fr.differential(0) == f("e36", 6));
    CHECK(fr.differential(3) == f("e26", 6));
    CHECK(fr.differential(4) == f("e23", 6));
    CHECK(h.torsion == f("-2*e145 + e136 + e235 - e246", 6));
    REQUIRE(h.nijenhuis);
    CHECK_FALSE(h.torsion_parallel_assumed);
    // The torsion curvature agrees with the matrix oracle.
    const auto conn = add_torsion(levi_civita(fr), h.torsion);
    CHECK(torsion_curvature(h.space, h.torsion) == oracle::curvature(fr, conn.gamma));
}

TEST_CASE("S6 nearly Kaehler family")
{
    for (const Q& t : {Q(1), Q(2), Q(-1, 3)}) {
        const auto h = s6_nearly_kaehler(t);
        const auto& s = std::get<SU3Structure>(h.structure);
        const Q a2 = 2 * t * t;
        CHECK(h.torsion == t * s.psi_minus);
        CHECK(h.torsion_parallel_assumed);
        const auto rg = riemannian_curvature(h.space);
        CHECK(rg == constant_curvature(6, Q(a2 / 2)));
        CHECK(scalar_curvature(rg) == 15 * a2);
        CHECK(exterior_derivative(h.space, h.torsion) == Q(-2 * a2) * hodge_star(s.F));
        const auto rn = torsion_curvature(h.space, h.torsion);
        CHECK(pontrjagin(rn) == oracle::pontrjagin(rn));
    }
}

TEST_CASE("S7 nearly parallel family")
{
    for (const Q& l : {Q(1), Q(6), Q(2, 7)}) {
        const auto h = s7_nearly_parallel(l);
        const auto& s = std::get<G2Structure>(h.structure);
        CHECK(h.torsion == Q(-l / 6) * s.omega);
        const auto rg = riemannian_curvature(h.space);
        CHECK(rg == constant_curvature(7, Q(l * l / 16)));
        CHECK(scalar_curvature(rg) == Q(21 * l * l / 8));
        CHECK(exterior_derivative(h.space, h.torsion) == Q(l * l / 6) * hodge_star(s.omega));
        CHECK(instanton_check(torsion_curvature(h.space, h.torsion), h.structure).member);
    }
}

TEST_CASE("S5 Sasakian data")
{
    const auto h = s5_sasakian();
    const auto& c = std::get<ContactStructure>(h.structure);
    CHECK(c.eta == f("e5", 5));
    CHECK(c.F5 == f("e12 + e34", 5));
    CHECK(h.torsion == wedge(c.eta, exterior_derivative(h.space, c.eta)));
    const auto rg = riemannian_curvature(h.space);
    CHECK(first_bianchi(rg));
    CHECK(pair_symmetric(rg));
    CHECK(scalar_curvature(rg) == 28);
    CHECK(rg == sasakian_curvature(c.eta, c.F5));
}

TEST_CASE("Sasakian curvature formula by hand")
{
    const auto r = sasakian_curvature(f("e5", 5), f("e12 + e34", 5));
    // Planes containing ξ: 4/3 - 1/3.
    for (int i = 0; i < 4; ++i) CHECK(r(i, 4, 4, i) == 1);
    // Holomorphic plane (e1, e2): 4/3 + 1/3 (1 + 2).
    CHECK(r(0, 1, 1, 0) == Q(7, 3));
    // Totally real plane (e1, e3): 4/3.
    CHECK(r(0, 2, 2, 0) == Q(4, 3));
    CHECK(r(0, 1, 3, 2) == Q(2, 3));
}

TEST_CASE("homogeneity in the scale parameters")
{
    const auto one = s6_nearly_kaehler(Q(1));
    const auto two = s6_nearly_kaehler(Q(2));
    const auto r1 = torsion_curvature(one.space, one.torsion);
    const auto r2 = torsion_curvature(two.space, two.torsion);
    CHECK(Q(4) * r1 == r2);
    const auto a = s7_nearly_parallel(Q(1));
    const auto b = s7_nearly_parallel(Q(3));
    CHECK(Q(9) * pontrjagin(torsion_curvature(a.space, a.torsion)) * Q(9) ==
          pontrjagin(torsion_curvature(b.space, b.torsion)));
}
