#pragma once

#include "gstruct/kform.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <vector>

namespace gstruct {

// Dense array with `Rank` indices, each in 0..n-1.
template <typename Scalar, int Rank>
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(int n) : n_(n), data_(size_for(n), Scalar(0)) {}

    int dim() const { return n_; }

    template <typename... I>
    Scalar& operator()(I... idx)
    {
        static_assert(sizeof...(I) == Rank);
        return data_[offset({static_cast<int>(idx)...})];
    }
    template <typename... I>
    const Scalar& operator()(I... idx) const
    {
        static_assert(sizeof...(I) == Rank);
        return data_[offset({static_cast<int>(idx)...})];
    }

    Scalar& at(const std::array<int, Rank>& idx) { return data_[offset(idx)]; }
    const Scalar& at(const std::array<int, Rank>& idx) const { return data_[offset(idx)]; }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
    }

    Tensor& operator+=(const Tensor& o)
    {
        require_same(o);
        for (std::size_t a = 0; a < data_.size(); ++a) data_[a] += o.data_[a];
        return *this;
    }
    Tensor& operator-=(const Tensor& o)
    {
        require_same(o);
        for (std::size_t a = 0; a < data_.size(); ++a) data_[a] -= o.data_[a];
        return *this;
    }
    Tensor& operator*=(const Scalar& s)
    {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend bool operator==(const Tensor& a, const Tensor& b) { return a.n_ == b.n_ && a.data_ == b.data_; }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }

    const std::vector<Scalar>& data() const { return data_; }

private:
    static std::size_t size_for(int n)
    {
        std::size_t s = 1;
        for (int r = 0; r < Rank; ++r) s *= static_cast<std::size_t>(n);
        return s;
    }
    std::size_t offset(const std::array<int, Rank>& idx) const
    {
        std::size_t o = 0;
        for (int r = 0; r < Rank; ++r) {
            if (idx[r] < 0 || idx[r] >= n_) throw DimensionMismatch("tensor index out of range");
            o = o * n_ + idx[r];
        }
        return o;
    }
    void require_same(const Tensor& o) const
    {
        if (o.n_ != n_) throw DimensionMismatch("tensors on frames of different dimension");
    }

    int n_ = 0;
    std::vector<Scalar> data_;
};

template <typename S> using Tensor3 = Tensor<S, 3>;
template <typename S> using Tensor4 = Tensor<S, 4>;

// Fully expanded components of a degree-Rank form.
template <typename S, int Rank>
Tensor<S, Rank> to_tensor(const KForm<S>& a)
{
    if (a.degree() != Rank) throw DegreeMismatch("form degree differs from tensor rank");
    Tensor<S, Rank> t(a.dim());
    for (const auto& [m, c] : a.terms()) {
        auto pos = positions(m);
        std::array<int, Rank> idx;
        std::copy(pos.begin(), pos.end(), idx.begin());
        std::array<int, Rank> perm;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::array<int, Rank> at;
            for (int r = 0; r < Rank; ++r) at[r] = idx[perm[r]];
            t.at(at) = permutation_sign(at) > 0 ? c : S(-c);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return t;
}

// The form with components t on increasing tuples, if t is fully antisymmetric.
template <typename S, int Rank>
std::optional<KForm<S>> to_form(const Tensor<S, Rank>& t)
{
    const int n = t.dim();
    KForm<S> out(n, Rank);
    for (Mask m = 0; m <= full_mask(n); ++m) {
        if (degree_of(m) != Rank) continue;
        auto pos = positions(m);
        std::array<int, Rank> idx;
        std::copy(pos.begin(), pos.end(), idx.begin());
        out.add_term(m, t.at(idx));
        if (m == full_mask(n)) break;
    }
    if (!(to_tensor<S, Rank>(out) == t)) return std::nullopt;
    return out;
}

// result(i,j,k,l) = Σ_m S_ijm U_klm.
template <typename S>
Tensor4<S> contract_pair(const KForm<S>& s, const KForm<S>& u)
{
    if (s.degree() != 3 || u.degree() != 3) throw DegreeMismatch("contract_pair needs two 3-forms");
    if (s.dim() != u.dim()) throw DimensionMismatch("contract_pair on different frames");
    const int n = s.dim();
    auto a = to_tensor<S, 3>(s);
    auto b = to_tensor<S, 3>(u);
    Tensor4<S> r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    S acc(0);
                    for (int m = 0; m < n; ++m)
                        if (a(i, j, m) != 0 && b(k, l, m) != 0) acc += a(i, j, m) * b(k, l, m);
                    r(i, j, k, l) = acc;
                }
    return r;
}

} // namespace gstruct
