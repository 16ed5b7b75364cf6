#pragma once

#include "gstruct/frame.hpp"

namespace gstruct {

// gamma(i, j, k) = g(∇_{e_i} e_j, e_k), constant on the frame.
template <typename S>
struct Connection {
    Tensor3<S> gamma;

    int dim() const { return gamma.dim(); }

    bool is_metric() const
    {
        const int n = dim();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (gamma(i, j, k) != -gamma(i, k, j)) return false;
        return true;
    }

    friend bool operator==(const Connection& a, const Connection& b) { return a.gamma == b.gamma; }
};

// Koszul formula for left-invariant fields:
// 2 g(∇_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) - g([X,Z],Y).
template <typename S>
Connection<S> levi_civita(const LieFrame<S>& frame)
{
    const int n = frame.dim();
    const auto& c = frame.brackets();
    Connection<S> lc{Tensor3<S>(n)};
    const S half(S(1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) lc.gamma(i, j, k) = half * (c(i, j, k) - c(j, k, i) - c(i, k, j));
    return lc;
}

// ∇' = ∇ + ½T.
template <typename S>
Connection<S> add_torsion(const Connection<S>& conn, const KForm<S>& t)
{
    if (t.degree() != 3) throw DegreeMismatch("torsion must be a 3-form");
    if (t.dim() != conn.dim()) throw DimensionMismatch("torsion and connection differ in dimension");
    Connection<S> out = conn;
    auto tt = to_tensor<S, 3>(t);
    tt *= S(S(1) / 2);
    out.gamma += tt;
    return out;
}

// T(e_i, e_j, e_k) = g(∇_i e_j - ∇_j e_i - [e_i, e_j], e_k).
template <typename S>
Tensor3<S> torsion_tensor(const LieFrame<S>& frame, const Connection<S>& conn)
{
    const int n = frame.dim();
    const auto& c = frame.brackets();
    Tensor3<S> t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) t(i, j, k) = conn.gamma(i, j, k) - conn.gamma(j, i, k) - c(i, j, k);
    return t;
}

// R(i, j, k, l) = g(R(e_i, e_j) e_k, e_l) with R(X,Y) = [∇_X, ∇_Y] - ∇_[X,Y].
template <typename S>
Tensor4<S> curvature(const LieFrame<S>& frame, const Connection<S>& conn)
{
    const int n = frame.dim();
    if (conn.dim() != n) throw DimensionMismatch("connection and frame differ in dimension");
    const auto& c = frame.brackets();
    const auto& g = conn.gamma;
    Tensor4<S> r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    S acc(0);
                    for (int m = 0; m < n; ++m) {
                        if (g(j, k, m) != 0 && g(i, m, l) != 0) acc += g(j, k, m) * g(i, m, l);
                        if (g(i, k, m) != 0 && g(j, m, l) != 0) acc -= g(i, k, m) * g(j, m, l);
                        if (c(i, j, m) != 0 && g(m, k, l) != 0) acc -= c(i, j, m) * g(m, k, l);
                    }
                    r(i, j, k, l) = acc;
                    r(j, i, k, l) = -acc;
                }
    return r;
}

// (∇_{e_i} A)(e_j, e_k, e_l) for a constant 3-tensor A.
template <typename S>
Tensor4<S> covariant_derivative(const Connection<S>& conn, const Tensor3<S>& a)
{
    const int n = conn.dim();
    if (a.dim() != n) throw DimensionMismatch("tensor and connection differ in dimension");
    const auto& g = conn.gamma;
    Tensor4<S> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    S acc(0);
                    for (int m = 0; m < n; ++m) {
                        if (g(i, j, m) != 0) acc += g(i, j, m) * a(m, k, l);
                        if (g(i, k, m) != 0) acc += g(i, k, m) * a(j, m, l);
                        if (g(i, l, m) != 0) acc += g(i, l, m) * a(j, k, m);
                    }
                    out(i, j, k, l) = -acc;
                }
    return out;
}

template <typename S>
bool is_parallel(const Connection<S>& conn, const Tensor3<S>& a)
{
    return covariant_derivative(conn, a).is_zero();
}

template <typename S>
bool is_parallel(const Connection<S>& conn, const KForm<S>& a)
{
    return is_parallel(conn, to_tensor<S, 3>(a));
}

} // namespace gstruct
