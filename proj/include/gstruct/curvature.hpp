#pragma once

#include "gstruct/connection.hpp"
#include "gstruct/endomorphism.hpp"

namespace gstruct {

template <typename S> using CurvatureTensor = Tensor4<S>;

// Pontrjagin normalization, fixed once: ½P(R^∇) = dT on the Nil6 example.
inline constexpr int kPontrjaginNormalization = 1;

template <typename S>
bool pair_antisymmetric(const Tensor4<S>& r)
{
    const int n = r.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (r(i, j, k, l) != -r(j, i, k, l) || r(i, j, k, l) != -r(i, j, l, k)) return false;
    return true;
}

template <typename S>
bool pair_symmetric(const Tensor4<S>& r)
{
    const int n = r.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (r(i, j, k, l) != r(k, l, i, j)) return false;
    return true;
}

template <typename S>
bool first_bianchi(const Tensor4<S>& r)
{
    const int n = r.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (r(i, j, k, l) + r(j, k, i, l) + r(k, i, j, l) != 0) return false;
    return true;
}

// κ(g_jk g_il - g_ik g_jl): sectional curvature κ in this sign convention.
template <typename S>
Tensor4<S> constant_curvature(int n, const S& kappa)
{
    Tensor4<S> r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                r(i, j, j, i) = kappa;
                r(i, j, i, j) = -kappa;
            }
    return r;
}

// Ric(j, k) = Σ_i R(i, j, k, i); positive on round spheres.
template <typename S>
Matrix<S> ricci(const Tensor4<S>& r)
{
    const int n = r.dim();
    Matrix<S> ric = Matrix<S>::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) ric(j, k) += r(i, j, k, i);
    return ric;
}

template <typename S>
S scalar_curvature(const Tensor4<S>& r)
{
    return ricci(r).trace();
}

// (h ⊙ k)_ijkl = h_ik k_jl + h_jl k_ik - h_il k_jk - h_jk k_il.
template <typename S>
Tensor4<S> kulkarni_nomizu(const Matrix<S>& h, const Matrix<S>& k)
{
    const int n = static_cast<int>(h.rows());
    Tensor4<S> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    out(i, j, a, b) = h(i, a) * k(j, b) + h(j, b) * k(i, a) - h(i, b) * k(j, a) - h(j, a) * k(i, b);
    return out;
}

template <typename S>
struct RicciScalarWeyl {
    Matrix<S> ricci;
    S scalar;
    Tensor4<S> weyl;
};

template <typename S>
RicciScalarWeyl<S> ricci_scalar_weyl(const Tensor4<S>& r)
{
    const int n = r.dim();
    if (n < 4) throw DimensionMismatch("Weyl tensor needs dimension at least 4");
    RicciScalarWeyl<S> out{ricci(r), S(0), Tensor4<S>(n)};
    out.scalar = out.ricci.trace();
    const Matrix<S> g = Matrix<S>::Identity(n, n);
    // Standard decomposition is written for -R in this sign convention.
    Tensor4<S> w = kulkarni_nomizu<S>(out.ricci, g);
    w *= S(S(1) / (n - 2));
    auto gg = kulkarni_nomizu<S>(g, g);
    gg *= S(out.scalar / (2 * (n - 1) * (n - 2)));
    w -= gg;
    out.weyl = r + w;
    return out;
}

template <typename S>
Tensor4<S> weyl(const Tensor4<S>& r)
{
    return ricci_scalar_weyl(r).weyl;
}

// dT = 2(P_ijkl + P_jkil + P_kijl) with P = contract_pair(T, T); needs ∇T = 0.
template <typename S>
KForm<S> dT_quadratic(const KForm<S>& t)
{
    const auto p = contract_pair(t, t);
    const int n = t.dim();
    Tensor4<S> q(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) q(i, j, k, l) = 2 * (p(i, j, k, l) + p(j, k, i, l) + p(k, i, j, l));
    auto f = to_form<S, 4>(q);
    if (!f) throw InternalConsistency("quadratic torsion expression is not a 4-form");
    return *f;
}

// R^∇ from R^g for parallel torsion: R^∇ = R^g + ½P_ijkl + ¼P_jkil + ¼P_kijl.
template <typename S>
Tensor4<S> nabla_curvature_from_riemannian(const Tensor4<S>& rg, const KForm<S>& t)
{
    const auto p = contract_pair(t, t);
    const int n = rg.dim();
    const S half(S(1) / 2), quarter(S(1) / 4);
    Tensor4<S> r = rg;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    r(i, j, k, l) += half * p(i, j, k, l) + quarter * (p(j, k, i, l) + p(k, i, j, l));
    return r;
}

// R^∇(X,Y,Z,V) = R̃(Z,V,X,Y) + ½dT(X,Y,Z,V).
template <typename S>
bool tilde_pairing_holds(const Tensor4<S>& rn, const Tensor4<S>& rtilde, const KForm<S>& dt)
{
    const int n = rn.dim();
    const auto d = to_tensor<S, 4>(dt);
    const S half(S(1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (rn(i, j, k, l) != rtilde(k, l, i, j) + half * d(i, j, k, l)) return false;
    return true;
}

// R̃ = R^∇ - ½dT, the curvature of ∇^g - ½T when ∇T is a 4-form.
template <typename S>
Tensor4<S> tilde_curvature(const Tensor4<S>& rn, const KForm<S>& dt)
{
    if (!pair_symmetric(rn))
        throw NotAdmissible("pair_symmetry", "curvature of the torsion connection is not pair symmetric");
    auto d = to_tensor<S, 4>(dt);
    d *= S(S(1) / 2);
    Tensor4<S> rt = rn - d;
    if (!tilde_pairing_holds(rn, rt, dt)) throw InternalConsistency("tilde curvature pairing identity fails");
    return rt;
}

// Curvature 2-form Ω_ab = Σ_{i<j} R(a, b, i, j) e_ij.
template <typename S>
KForm<S> curvature_two_form(const Tensor4<S>& r, int a, int b)
{
    const int n = r.dim();
    KForm<S> w(n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) w.add_term((Mask(1) << i) | (Mask(1) << j), r(a, b, i, j));
    return w;
}

// Slot α = R(·, ·, e_k, e_l) = Σ_{i<j} R(i, j, k, l) e_ij.
template <typename S>
KForm<S> curvature_slot(const Tensor4<S>& r, int k, int l)
{
    const int n = r.dim();
    KForm<S> w(n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) w.add_term((Mask(1) << i) | (Mask(1) << j), r(i, j, k, l));
    return w;
}

// P(R) = c0 Σ_{a<b} Ω_ab ∧ Ω_ab.
template <typename S>
KForm<S> pontrjagin(const Tensor4<S>& r)
{
    const int n = r.dim();
    KForm<S> p(n, 4);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto w = curvature_two_form(r, a, b);
            if (!w.is_zero()) p += wedge(w, w);
        }
    return S(kPontrjaginNormalization) * p;
}

} // namespace gstruct
