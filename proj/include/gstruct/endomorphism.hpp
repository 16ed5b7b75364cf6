#pragma once

#include "gstruct/kform.hpp"
#include "gstruct/scalar.hpp"

#include <Eigen/Dense>

namespace gstruct {

template <typename S> using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S> using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// Column j is the image of e_j.
template <typename S>
class Endomorphism {
public:
    Endomorphism() = default;
    explicit Endomorphism(Matrix<S> m) : m_(std::move(m))
    {
        if (m_.rows() != m_.cols()) throw DimensionMismatch("endomorphism matrix must be square");
    }

    static Endomorphism identity(int n) { return Endomorphism(Matrix<S>::Identity(n, n)); }

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix<S>& matrix() const { return m_; }
    const S& operator()(int i, int j) const { return m_(i, j); }

    bool is_almost_complex() const { return m_ * m_ == Matrix<S>(-Matrix<S>::Identity(dim(), dim())); }

    friend bool operator==(const Endomorphism& a, const Endomorphism& b) { return a.m_ == b.m_; }

private:
    Matrix<S> m_;
};

// A with F(X, Y) = g(X, A Y); A(i, j) = F(e_i, e_j).
template <typename S>
Endomorphism<S> endomorphism_from_two_form(const KForm<S>& f)
{
    if (f.degree() != 2) throw DegreeMismatch("expected a 2-form");
    const int n = f.dim();
    Matrix<S> m = Matrix<S>::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = f({i, j});
    return Endomorphism<S>(std::move(m));
}

// (A^* a)(X_1, ..., X_k) = a(A X_1, ..., A X_k).
template <typename S>
KForm<S> pullback_endo(const Endomorphism<S>& a_map, const KForm<S>& a)
{
    const int n = a.dim();
    if (a_map.dim() != n) throw DimensionMismatch("pullback by an endomorphism of another dimension");
    std::vector<KForm<S>> pulled(n, KForm<S>(n, 1));
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i) pulled[m].add_term(Mask(1) << i, a_map(m, i));
    KForm<S> out(n, a.degree());
    for (const auto& [mask, c] : a.terms()) {
        KForm<S> term = KForm<S>::constant(n, c);
        for (int p : positions(mask)) term = wedge(term, pulled[p]);
        out += term;
    }
    return out;
}

} // namespace gstruct
