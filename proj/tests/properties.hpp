#pragma once

// Hand-rolled random generators and the identity properties shared by the
// property tests and the acceptance binary.

#include "gstruct/format.hpp"
#include "gstruct/verify.hpp"
#include "oracle.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <string>

namespace props {

using gstruct::Form;
using gstruct::Frame;
using Q = gstruct::Rational;

class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    // p/q with |p| <= 9, 1 <= q <= 9.
    Q rational() { return Q(integer(-9, 9), integer(1, 9)); }
    Q nonzero_rational()
    {
        Q r(0);
        while (r == 0) r = rational();
        return r;
    }

    // Each basis monomial present with probability ~1/2.
    Form form(int n, int k)
    {
        Form out(n, k);
        for (gstruct::Mask m = 0; m <= gstruct::full_mask(n); ++m)
            if (gstruct::degree_of(m) == k && integer(0, 1)) out.add_term(m, rational());
        return out;
    }
    Form nonzero_form(int n, int k)
    {
        Form out(n, k);
        while (out.is_zero()) out = form(n, k);
        return out;
    }

    // Rational rotation in the plane: cos = (1-t²)/(1+t²), sin = 2t/(1+t²).
    std::pair<Q, Q> circle_point()
    {
        const Q t = rational();
        return {(1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)};
    }

    // Cayley transform (I - K)^{-1}(I + K) of a random skew 3x3 matrix.
    gstruct::Matrix<Q> rotation3()
    {
        gstruct::Matrix<Q> k = gstruct::Matrix<Q>::Zero(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                k(i, j) = rational();
                k(j, i) = -k(i, j);
            }
        const gstruct::Matrix<Q> id = gstruct::Matrix<Q>::Identity(3, 3);
        return (id - k).fullPivLu().solve(id + k);
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

// Orthogonal map of the 6-frame preserving F, Ψ+ and Ψ-: a real rotation
// acting alike on (e1, e3, e5) and (e2, e4, e6), then the phases
// diag(e^{iφ}, e^{-iφ}, 1) on the pairs (e1, e2), (e3, e4).
inline gstruct::Matrix<Q> random_su3(Gen& g)
{
    gstruct::Matrix<Q> a = gstruct::Matrix<Q>::Zero(6, 6);
    const auto r = g.rotation3();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            a(2 * i, 2 * j) = r(i, j);
            a(2 * i + 1, 2 * j + 1) = r(i, j);
        }
    const auto [c, s] = g.circle_point();
    gstruct::Matrix<Q> p = gstruct::Matrix<Q>::Identity(6, 6);
    p(0, 0) = c, p(0, 1) = -s, p(1, 0) = s, p(1, 1) = c;
    p(2, 2) = c, p(2, 3) = s, p(3, 2) = -s, p(3, 3) = c;
    return p * a;
}

// Substitutes e^b = Σ_c a(c, b) e'^c, i.e. rewrites a form in the coframe e' = a e.
inline Form substitute(const Form& x, const gstruct::Matrix<Q>& a)
{
    const int n = x.dim();
    Form out(n, x.degree());
    for (const auto& [m, coef] : x.terms()) {
        Form piece = Form::constant(n, coef);
        for (int b : gstruct::positions(m)) {
            Form lin(n, 1);
            for (int c = 0; c < n; ++c)
                if (a(c, b) != 0) lin.add_term(gstruct::Mask(1) << c, a(c, b));
            piece = gstruct::wedge(piece, lin);
        }
        out += piece;
    }
    return out;
}

// The Nil6 algebra in a rotated, rescaled coframe; the canonical SU(3)
// structure is unchanged by construction (checked).
inline Frame rotated_nil6(Gen& g)
{
    const auto a = random_su3(g);
    const auto s = gstruct::canonical_su3();
    if (substitute(s.F, a) != s.F || substitute(s.psi_plus, a) != s.psi_plus ||
        substitute(s.psi_minus, a) != s.psi_minus)
        throw std::logic_error("generated map is not in SU(3)");
    const Q scale = g.nonzero_rational();
    static const Frame base = std::get<Frame>(gstruct::nil6().space);
    std::vector<Form> d(6, Form(6, 2));
    for (int p = 0; p < 6; ++p)
        for (int b = 0; b < 6; ++b)
            if (a(p, b) != 0) d[p] += a(p, b) * scale * substitute(base.differential(b), a);
    return Frame(d);
}

struct Outcome {
    int trials = 0;
    int failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0 && trials > 0; }
    void record(bool pass, const std::function<std::string()>& describe)
    {
        ++trials;
        if (pass) return;
        if (failures++ == 0) first_failure = describe();
    }
};

inline std::string show(const Form& f) { return gstruct::to_string(f, gstruct::default_labels(f.dim())); }

// *(*(θ∧Ψ+)∧Ψ+) = -2θ for 1-forms θ in dimension 6.
inline Outcome w2_identity(Gen& g, int trials)
{
    Outcome o;
    const auto s = gstruct::canonical_su3();
    for (int t = 0; t < trials; ++t) {
        const Form th = g.form(6, 1);
        using gstruct::hodge_star, gstruct::wedge;
        const Form lhs = hodge_star(wedge(hodge_star(wedge(th, s.psi_plus)), s.psi_plus));
        o.record(lhs == Q(-2) * th, [&] { return "θ = " + show(th); });
    }
    return o;
}

// *(*(γ∧*ω)∧*ω) = 3γ for 1-forms γ in dimension 7.
inline Outcome gamma_identity(Gen& g, int trials)
{
    Outcome o;
    const Form sw = gstruct::hodge_star(gstruct::canonical_g2().omega);
    for (int t = 0; t < trials; ++t) {
        const Form ga = g.form(7, 1);
        using gstruct::hodge_star, gstruct::wedge;
        const Form lhs = hodge_star(wedge(hodge_star(wedge(ga, sw)), sw));
        o.record(lhs == Q(3) * ga, [&] { return "γ = " + show(ga); });
    }
    return o;
}

// ** = (-1)^{k(n-k)}, with * checked against the Levi-Civita oracle.
inline Outcome double_star(Gen& g, int trials)
{
    Outcome o;
    for (int t = 0; t < trials; ++t) {
        const int n = g.integer(1, 8), k = g.integer(0, n);
        const Form a = g.form(n, k);
        const Form s = gstruct::hodge_star(a);
        const Q sign((k * (n - k)) % 2 ? -1 : 1);
        o.record(gstruct::hodge_star(s) == sign * a && s == oracle::hodge(a),
                 [&] { return "n = " + std::to_string(n) + ", a = " + show(a); });
    }
    return o;
}

// a∧*b = (a, b) vol on every pair of basis forms in dimensions 5..8.
inline Outcome wedge_star_basis()
{
    Outcome o;
    for (int n = 5; n <= 8; ++n) {
        const Form vol = gstruct::volume_form<Q>(n);
        for (gstruct::Mask a = 0; a <= gstruct::full_mask(n); ++a)
            for (gstruct::Mask b = 0; b <= gstruct::full_mask(n); ++b) {
                if (gstruct::degree_of(a) != gstruct::degree_of(b)) continue;
                Form x(n, gstruct::degree_of(a)), y(n, gstruct::degree_of(b));
                x.add_term(a, Q(1));
                y.add_term(b, Q(1));
                const Q expected(a == b ? 1 : 0);
                o.record(gstruct::wedge(x, gstruct::hodge_star(y)) == expected * vol &&
                             gstruct::inner(x, y) == expected,
                         [&] { return "n = " + std::to_string(n) + ", " + show(x) + " vs " + show(y); });
            }
    }
    return o;
}

// dF⁻ = -¾ J^*N on rotated Nil6 frames; T agrees across the two formulas.
inline Outcome acy_relation(Gen& g, int trials)
{
    Outcome o;
    const auto s = gstruct::canonical_su3();
    for (int t = 0; t < trials; ++t) {
        const Frame fr = rotated_nil6(g);
        bool ok = false;
        try {
            const auto tor = gstruct::su3_torsion(s, gstruct::Space(fr));
            const auto n = gstruct::nijenhuis(fr, s.J);
            const Form dF = gstruct::exterior_derivative(fr, s.F);
            ok = tor.type_30_relation && n.form &&
                 gstruct::type_30_part(dF, s.J) == Q(-3, 4) * gstruct::pullback_endo(s.J, *n.form) &&
                 tor.T == tor.T_complex;
        } catch (const std::exception&) {
            ok = false;
        }
        o.record(ok, [&] { return "frame:\n" + gstruct::frame_to_text(fr); });
    }
    return o;
}

// R^∇(X,Y,Z,V) = R̃(Z,V,X,Y) + ½dT(X,Y,Z,V) with ∇ = ∇^g ± ½T, for random
// 3-forms T on Nil6 and on rotated Nil6 frames.
inline Outcome bas1_pairing(Gen& g, int trials)
{
    Outcome o;
    static const Frame nil = std::get<Frame>(gstruct::nil6().space);
    for (int t = 0; t < trials; ++t) {
        const Frame fr = t % 2 ? rotated_nil6(g) : nil;
        const Form T = g.form(6, 3);
        const auto lc = gstruct::levi_civita(fr);
        const auto rn = gstruct::curvature(fr, gstruct::add_torsion(lc, T));
        const auto rt = gstruct::curvature(fr, gstruct::add_torsion(lc, Form(-T)));
        o.record(gstruct::tilde_pairing_holds(rn, rt, gstruct::exterior_derivative(fr, T)),
                 [&] { return "T = " + show(T); });
    }
    return o;
}

} // namespace props
