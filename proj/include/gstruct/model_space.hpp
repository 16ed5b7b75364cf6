#pragma once

#include "gstruct/curvature.hpp"

#include <variant>

namespace gstruct {

template <typename S>
struct DerivativeFact {
    KForm<S> form;
    KForm<S> derivative;
};

// A space given by closed-form data: Riemannian curvature, a parallel torsion
// and a table of known exterior derivatives. Directions in `line_mask` are
// closed and Levi-Civita parallel (factors of a Riemannian product with a line).
template <typename S>
class ModelSpace {
public:
    ModelSpace() = default;
    ModelSpace(Tensor4<S> riemann, KForm<S> torsion, std::vector<DerivativeFact<S>> facts,
               std::vector<int> labels = {}, Mask line_mask = 0)
        : riemann_(std::move(riemann)), torsion_(std::move(torsion)), facts_(std::move(facts)),
          labels_(std::move(labels)), lines_(line_mask)
    {
        const int n = riemann_.dim();
        if (labels_.empty()) labels_ = default_labels(n);
        if (static_cast<int>(labels_.size()) != n) throw DimensionMismatch("one label per frame direction expected");
        if (torsion_.dim() != n || torsion_.degree() != 3) throw DegreeMismatch("model torsion must be a 3-form on the frame");
        if (!pair_antisymmetric(riemann_)) throw InternalConsistency("model curvature is not antisymmetric in both pairs");
        for (const auto& f : facts_) {
            if (f.form.dim() != n || f.derivative.dim() != n) throw DimensionMismatch("derivative fact on another frame");
            if (f.derivative.degree() != f.form.degree() + 1) throw DegreeMismatch("derivative fact raises degree by one");
            if (f.form.is_zero()) throw InternalConsistency("derivative fact for the zero form");
        }
    }

    int dim() const { return riemann_.dim(); }
    const std::vector<int>& labels() const { return labels_; }
    const Tensor4<S>& riemann() const { return riemann_; }
    const KForm<S>& torsion() const { return torsion_; }
    const std::vector<DerivativeFact<S>>& facts() const { return facts_; }
    Mask line_mask() const { return lines_; }

    // d(a) if it follows from the table, splitting off line directions by Leibniz.
    std::optional<KForm<S>> derivative_of(const KForm<S>& a) const
    {
        const int n = dim();
        if (a.dim() != n) throw DimensionMismatch("form and model differ in dimension");
        if (a.is_zero() || a.degree() == 0) return KForm<S>(n, a.degree() + 1);
        for (int p : positions(lines_)) {
            const Mask bit = Mask(1) << p;
            KForm<S> base(n, a.degree()), rest(n, a.degree() - 1);
            for (const auto& [m, c] : a.terms()) {
                if (m & bit) {
                    const Mask r = m & ~bit;
                    rest.add_term(r, wedge_sign(r, bit) > 0 ? c : S(-c));
                } else {
                    base.add_term(m, c);
                }
            }
            if (rest.is_zero()) continue;
            // a = base + rest ∧ e_p, and d e_p = 0.
            auto db = derivative_of(base);
            auto dr = derivative_of(rest);
            if (!db || !dr) return std::nullopt;
            return *db + wedge(*dr, KForm<S>::monomial(n, {p}));
        }
        if (a.degree() >= n - degree_of(lines_)) return KForm<S>(n, a.degree() + 1);
        for (const auto& f : facts_) {
            if (f.form.degree() != a.degree()) continue;
            const auto& [m0, c0] = *f.form.terms().begin();
            S ratio = a.coeff(m0) / c0;
            if (ratio != 0 && a == ratio * f.form) return ratio * f.derivative;
        }
        return std::nullopt;
    }

private:
    Tensor4<S> riemann_;
    KForm<S> torsion_;
    std::vector<DerivativeFact<S>> facts_;
    std::vector<int> labels_;
    Mask lines_ = 0;
};

template <typename S>
KForm<S> exterior_derivative(const ModelSpace<S>& space, const KForm<S>& a)
{
    auto d = space.derivative_of(a);
    if (!d) throw UnsupportedOperation("exterior derivative not determined by the model's known derivatives");
    return *d;
}

template <typename S>
KForm<S> codifferential(const ModelSpace<S>& space, const KForm<S>& a)
{
    return codifferential_via(space, a);
}

template <typename S> using FrameSpace = std::variant<LieFrame<S>, ModelSpace<S>>;

template <typename S>
int dim(const FrameSpace<S>& m)
{
    return std::visit([](const auto& s) { return s.dim(); }, m);
}

template <typename S>
const std::vector<int>& labels(const FrameSpace<S>& m)
{
    return std::visit([](const auto& s) -> const std::vector<int>& { return s.labels(); }, m);
}

template <typename S>
KForm<S> exterior_derivative(const FrameSpace<S>& m, const KForm<S>& a)
{
    return std::visit([&](const auto& s) { return exterior_derivative(s, a); }, m);
}

template <typename S>
KForm<S> codifferential(const FrameSpace<S>& m, const KForm<S>& a)
{
    return std::visit([&](const auto& s) { return codifferential(s, a); }, m);
}

template <typename S>
Tensor4<S> riemannian_curvature(const FrameSpace<S>& m)
{
    if (auto* f = std::get_if<LieFrame<S>>(&m)) return curvature(*f, levi_civita(*f));
    return std::get<ModelSpace<S>>(m).riemann();
}

// Curvature of ∇^g + ½T. On a model space T is assumed parallel.
template <typename S>
Tensor4<S> torsion_curvature(const FrameSpace<S>& m, const KForm<S>& t)
{
    if (auto* f = std::get_if<LieFrame<S>>(&m)) return curvature(*f, add_torsion(levi_civita(*f), t));
    return nabla_curvature_from_riemannian(std::get<ModelSpace<S>>(m).riemann(), t);
}

enum class Placement { front, back };

template <typename S>
LieFrame<S> product_with_line(const LieFrame<S>& frame, int label, Placement where = Placement::back)
{
    const int n = frame.dim();
    const int at = where == Placement::front ? 0 : n;
    std::vector<KForm<S>> d;
    for (const auto& f : frame.differentials()) d.push_back(insert_direction(f, at));
    d.insert(d.begin() + at, KForm<S>(n + 1, 2));
    auto l = frame.labels();
    l.insert(l.begin() + at, label);
    return LieFrame<S>(std::move(d), std::move(l));
}

template <typename S>
ModelSpace<S> product_with_line(const ModelSpace<S>& space, int label, Placement where = Placement::back)
{
    const int n = space.dim();
    const int at = where == Placement::front ? 0 : n;
    auto shift = [&](int p) { return p < at ? p : p + 1; };
    Tensor4<S> r(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) r(shift(i), shift(j), shift(k), shift(l)) = space.riemann()(i, j, k, l);
    std::vector<DerivativeFact<S>> facts;
    for (const auto& f : space.facts()) facts.push_back({insert_direction(f.form, at), insert_direction(f.derivative, at)});
    Mask lines = Mask(1) << at;
    for (int p : positions(space.line_mask())) lines |= Mask(1) << shift(p);
    auto l = space.labels();
    l.insert(l.begin() + at, label);
    return ModelSpace<S>(std::move(r), insert_direction(space.torsion(), at), std::move(facts), std::move(l), lines);
}

template <typename S>
FrameSpace<S> product_with_line(const FrameSpace<S>& m, int label, Placement where = Placement::back)
{
    return std::visit([&](const auto& s) { return FrameSpace<S>(product_with_line(s, label, where)); }, m);
}

} // namespace gstruct
