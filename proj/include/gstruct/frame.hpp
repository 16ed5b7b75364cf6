#pragma once

#include "gstruct/kform.hpp"
#include "gstruct/tensor.hpp"

#include <numeric>
#include <optional>
#include <vector>

namespace gstruct {

inline std::vector<int> default_labels(int n)
{
    std::vector<int> l(n);
    std::iota(l.begin(), l.end(), 1);
    return l;
}

// Left-invariant coframe given by the table d(e_p) = differentials[p].
template <typename S>
class LieFrame {
public:
    LieFrame() = default;
    explicit LieFrame(std::vector<KForm<S>> differentials, std::vector<int> labels = {})
        : d_(std::move(differentials)), labels_(std::move(labels))
    {
        const int n = static_cast<int>(d_.size());
        if (labels_.empty()) labels_ = default_labels(n);
        if (static_cast<int>(labels_.size()) != n) throw DimensionMismatch("one label per frame direction expected");
        for (const auto& f : d_) {
            if (f.dim() != n) throw DimensionMismatch("differential lives on a frame of another dimension");
            if (f.degree() != 2) throw DegreeMismatch("differential of a frame 1-form must be a 2-form");
        }
        c_ = Tensor3<S>(n);
        for (int k = 0; k < n; ++k)
            for (const auto& [m, coef] : d_[k].terms()) {
                auto p = positions(m);
                c_(p[0], p[1], k) = -coef;
                c_(p[1], p[0], k) = coef;
            }
        if (auto bad = jacobi_violation()) {
            auto [i, j, k] = *bad;
            throw InvalidFrame("Jacobi identity fails for (e" + std::to_string(labels_[i]) + ", e" +
                                   std::to_string(labels_[j]) + ", e" + std::to_string(labels_[k]) + ")",
                               labels_[i], labels_[j], labels_[k]);
        }
    }

    static LieFrame abelian(int n) { return LieFrame(std::vector<KForm<S>>(n, KForm<S>(n, 2))); }

    int dim() const { return static_cast<int>(d_.size()); }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<KForm<S>>& differentials() const { return d_; }
    const KForm<S>& differential(int p) const { return d_.at(p); }

    // c(i, j, k) = g([e_i, e_j], e_k) = -(d e_k)(e_i, e_j).
    const Tensor3<S>& brackets() const { return c_; }

    friend bool operator==(const LieFrame& a, const LieFrame& b) { return a.d_ == b.d_ && a.labels_ == b.labels_; }

private:
    std::optional<std::array<int, 3>> jacobi_violation() const
    {
        const int n = dim();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    for (int p = 0; p < n; ++p) {
                        S acc(0);
                        for (int m = 0; m < n; ++m)
                            acc += c_(i, j, m) * c_(m, k, p) + c_(j, k, m) * c_(m, i, p) + c_(k, i, m) * c_(m, j, p);
                        if (acc != 0) return std::array<int, 3>{i, j, k};
                    }
        return std::nullopt;
    }

    std::vector<KForm<S>> d_;
    std::vector<int> labels_;
    Tensor3<S> c_;
};

template <typename S>
const Tensor3<S>& brackets(const LieFrame<S>& frame) { return frame.brackets(); }

// d as the antiderivation extending the differential table.
template <typename S>
KForm<S> exterior_derivative(const LieFrame<S>& frame, const KForm<S>& a)
{
    const int n = frame.dim();
    if (a.dim() != n) throw DimensionMismatch("form and frame differ in dimension");
    KForm<S> out(n, a.degree() + 1);
    std::vector<int> seq;
    for (const auto& [mask, c] : a.terms()) {
        auto pos = positions(mask);
        for (std::size_t r = 0; r < pos.size(); ++r) {
            const Mask rest = mask & ~(Mask(1) << pos[r]);
            for (const auto& [dm, dc] : frame.differential(pos[r]).terms()) {
                if (dm & rest) continue;
                seq.assign(pos.begin(), pos.begin() + r);
                for (int q : positions(dm)) seq.push_back(q);
                seq.insert(seq.end(), pos.begin() + r + 1, pos.end());
                int s = permutation_sign(seq) * (r % 2 ? -1 : 1);
                S v = c * dc;
                out.add_term(rest | dm, s > 0 ? v : S(-v));
            }
        }
    }
    return out;
}

// δ = (-1)^{n(k+1)+1} * d * on k-forms, the formal adjoint of d.
template <typename S, typename Space>
KForm<S> codifferential_via(const Space& space, const KForm<S>& a)
{
    const int n = a.dim();
    const int k = a.degree();
    if (k == 0) return KForm<S>(n, 0);
    KForm<S> r = hodge_star(exterior_derivative(space, hodge_star(a)));
    return (n * (k + 1) + 1) % 2 ? -r : r;
}

template <typename S>
KForm<S> codifferential(const LieFrame<S>& frame, const KForm<S>& a)
{
    return codifferential_via(frame, a);
}

} // namespace gstruct
