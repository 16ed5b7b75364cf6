#pragma once

#include "gstruct/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace gstruct {

// Bit p set <=> frame position p occurs in the monomial. Positions are 0-based.
using Mask = std::uint32_t;
inline constexpr int kMaxDim = 16;

inline int degree_of(Mask m) { return std::popcount(m); }

inline Mask full_mask(int dim) { return dim >= 32 ? ~Mask(0) : (Mask(1) << dim) - 1; }

inline std::vector<int> positions(Mask m)
{
    std::vector<int> out;
    for (int p = 0; m; ++p, m >>= 1)
        if (m & 1) out.push_back(p);
    return out;
}

// Sign of e_a ∧ e_b relative to e_{a|b}; a and b must be disjoint.
inline int wedge_sign(Mask a, Mask b)
{
    int inversions = 0;
    for (int j : positions(b)) inversions += std::popcount(a >> (j + 1));
    return inversions % 2 ? -1 : 1;
}

// Sign sorting `idx` into increasing order; 0 if an index repeats.
inline int permutation_sign(std::span<const int> idx, Mask* sorted = nullptr)
{
    Mask m = 0;
    int inversions = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        if (m & (Mask(1) << idx[a])) return 0;
        m |= Mask(1) << idx[a];
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (idx[a] > idx[b]) ++inversions;
    }
    if (sorted) *sorted = m;
    return inversions % 2 ? -1 : 1;
}

template <typename Scalar>
class KForm {
public:
    using Terms = std::map<Mask, Scalar>;

    KForm() = default;
    KForm(int dim, int degree) : dim_(dim), degree_(degree)
    {
        if (dim < 0 || dim > kMaxDim) throw DimensionMismatch("frame dimension out of range: " + std::to_string(dim));
        if (degree < 0) throw DegreeMismatch("negative degree");
    }

    static KForm constant(int dim, const Scalar& c)
    {
        KForm f(dim, 0);
        f.add_term(0, c);
        return f;
    }

    // c * e_{p1} ∧ ... ∧ e_{pk}; positions in any order.
    static KForm monomial(int dim, std::initializer_list<int> pos, const Scalar& c = Scalar(1))
    {
        return monomial(dim, std::span<const int>(pos.begin(), pos.size()), c);
    }
    static KForm monomial(int dim, std::span<const int> pos, const Scalar& c = Scalar(1))
    {
        KForm f(dim, static_cast<int>(pos.size()));
        for (int p : pos)
            if (p < 0 || p >= dim) throw DimensionMismatch("frame position out of range: " + std::to_string(p));
        Mask m = 0;
        int s = permutation_sign(pos, &m);
        if (s != 0) f.add_term(m, s > 0 ? c : Scalar(-c));
        return f;
    }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(Mask m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    // Signed component for an arbitrary index tuple.
    Scalar operator()(std::span<const int> idx) const
    {
        if (static_cast<int>(idx.size()) != degree_) throw DegreeMismatch("index tuple length differs from degree");
        Mask m = 0;
        int s = permutation_sign(idx, &m);
        if (s == 0) return Scalar(0);
        Scalar c = coeff(m);
        return s > 0 ? c : Scalar(-c);
    }
    Scalar operator()(std::initializer_list<int> idx) const { return (*this)(std::span<const int>(idx.begin(), idx.size())); }

    void add_term(Mask m, const Scalar& c)
    {
        if (degree_of(m) != degree_) throw DegreeMismatch("monomial degree differs from form degree");
        if ((m & ~full_mask(dim_)) != 0) throw DimensionMismatch("monomial outside frame");
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    KForm& operator+=(const KForm& o)
    {
        require_same_shape(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    KForm& operator-=(const KForm& o)
    {
        require_same_shape(o);
        for (const auto& [m, c] : o.terms_) add_term(m, Scalar(-c));
        return *this;
    }
    KForm& operator*=(const Scalar& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend bool operator==(const KForm& a, const KForm& b)
    {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    void require_same_shape(const KForm& o) const
    {
        if (o.dim_ != dim_) throw DimensionMismatch("forms live on frames of different dimension");
        if (o.degree_ != degree_) throw DegreeMismatch("forms have different degrees");
    }

private:
    int dim_ = 0;
    int degree_ = 0;
    Terms terms_;
};

template <typename S> KForm<S> operator+(KForm<S> a, const KForm<S>& b) { return a += b; }
template <typename S> KForm<S> operator-(KForm<S> a, const KForm<S>& b) { return a -= b; }
template <typename S> KForm<S> operator-(KForm<S> a) { return a *= S(-1); }
template <typename S> KForm<S> operator*(const S& s, KForm<S> a) { return a *= s; }
template <typename S> KForm<S> operator*(KForm<S> a, const S& s) { return a *= s; }
template <typename S> KForm<S> operator/(KForm<S> a, const S& s) { return a *= S(1) / s; }

template <typename S>
KForm<S> wedge(const KForm<S>& a, const KForm<S>& b)
{
    if (a.dim() != b.dim()) throw DimensionMismatch("wedge of forms on different frames");
    KForm<S> out(a.dim(), a.degree() + b.degree());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            if ((ma & mb) == 0) out.add_term(ma | mb, wedge_sign(ma, mb) > 0 ? S(ca * cb) : S(-(ca * cb)));
    return out;
}

template <typename S, typename... Rest>
KForm<S> wedge(const KForm<S>& a, const KForm<S>& b, const Rest&... rest)
{
    return wedge(wedge(a, b), rest...);
}

template <typename S>
KForm<S> volume_form(int dim)
{
    KForm<S> v(dim, dim);
    v.add_term(full_mask(dim), S(1));
    return v;
}

// a ∧ *b = inner(a, b) vol with vol = e_0 ∧ ... ∧ e_{n-1}.
template <typename S>
KForm<S> hodge_star(const KForm<S>& a)
{
    const int n = a.dim();
    if (a.degree() > n) return KForm<S>(n, 0);
    KForm<S> out(n, n - a.degree());
    const Mask all = full_mask(n);
    for (const auto& [m, c] : a.terms()) {
        Mask comp = all & ~m;
        out.add_term(comp, wedge_sign(m, comp) > 0 ? c : S(-c));
    }
    return out;
}

template <typename S>
S inner(const KForm<S>& a, const KForm<S>& b)
{
    a.require_same_shape(b);
    S sum(0);
    for (const auto& [m, c] : a.terms()) {
        auto it = b.terms().find(m);
        if (it != b.terms().end()) sum += c * it->second;
    }
    return sum;
}

// Coefficient of a 0-form, or of vol for a top-degree form.
template <typename S>
S scalar_part(const KForm<S>& a)
{
    if (a.degree() == 0) return a.coeff(0);
    if (a.degree() == a.dim()) return a.coeff(full_mask(a.dim()));
    throw DegreeMismatch("scalar_part needs a 0-form or a top form");
}

// Moves position p to new_pos[p] on a frame of dimension new_dim.
template <typename S>
KForm<S> relabel(const KForm<S>& a, int new_dim, std::span<const int> new_pos)
{
    if (static_cast<int>(new_pos.size()) != a.dim()) throw DimensionMismatch("relabel map has the wrong length");
    KForm<S> out(new_dim, a.degree());
    std::vector<int> idx;
    for (const auto& [m, c] : a.terms()) {
        idx.clear();
        for (int p : positions(m)) idx.push_back(new_pos[p]);
        out += KForm<S>::monomial(new_dim, idx, c);
    }
    return out;
}

// Inserts one new frame direction at `at`, shifting later positions.
template <typename S>
KForm<S> insert_direction(const KForm<S>& a, int at)
{
    std::vector<int> map(a.dim());
    for (int p = 0; p < a.dim(); ++p) map[p] = p < at ? p : p + 1;
    return relabel(a, a.dim() + 1, map);
}

template <typename S>
KForm<S> one_form(int dim, std::span<const S> coeffs)
{
    if (static_cast<int>(coeffs.size()) != dim) throw DimensionMismatch("coefficient vector has the wrong length");
    KForm<S> out(dim, 1);
    for (int p = 0; p < dim; ++p) out.add_term(Mask(1) << p, coeffs[p]);
    return out;
}

} // namespace gstruct
