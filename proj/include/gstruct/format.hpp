#pragma once

#include "gstruct/endomorphism.hpp"
#include "gstruct/frame.hpp"
#include "gstruct/kform.hpp"
#include "gstruct/scalar.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace gstruct {

inline std::string monomial_name(Mask m, const std::vector<int>& labels)
{
    auto pos = positions(m);
    bool compact = true;
    for (int p : pos) compact = compact && labels.at(p) >= 0 && labels.at(p) < 10;
    std::string s;
    for (std::size_t a = 0; a < pos.size(); ++a) {
        if (compact) {
            s += a == 0 ? "e" : "";
            s += std::to_string(labels.at(pos[a]));
        } else {
            s += (a == 0 ? "e" : "^e") + std::to_string(labels.at(pos[a]));
        }
    }
    return s;
}

// "-2*e145 + e136 + e235 - e246"; monomials in lexicographic order of their labels.
template <typename S>
std::string to_string(const KForm<S>& f, const std::vector<int>& labels)
{
    if (f.is_zero()) return "0";
    std::vector<std::pair<std::vector<int>, Mask>> order;
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> key;
        for (int p : positions(m)) key.push_back(labels.at(p));
        order.emplace_back(std::move(key), m);
    }
    std::sort(order.begin(), order.end());
    std::string out;
    bool first = true;
    for (const auto& [key, m] : order) {
        S c = f.coeff(m);
        const bool neg = c < 0;
        if (neg) c = -c;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        if (m == 0) {
            out += to_string(c);
        } else {
            if (c != 1) out += to_string(c) + "*";
            out += monomial_name(m, labels);
        }
    }
    return out;
}

template <typename S>
std::string to_string(const KForm<S>& f)
{
    return to_string(f, default_labels(f.dim()));
}

template <typename S>
std::string to_string(const Matrix<S>& m)
{
    std::string out = "[";
    for (int i = 0; i < m.rows(); ++i) {
        out += i ? "; " : "";
        for (int j = 0; j < m.cols(); ++j) out += (j ? " " : "") + to_string(S(m(i, j)));
    }
    return out + "]";
}

// Inverse of to_string for a given frame: accepts "e145", "e1^e4^e5" and
// rational coefficients "p/q*". A bare rational is a 0-form.
template <typename S>
KForm<S> parse_form(std::string_view text, const std::vector<int>& labels)
{
    const int n = static_cast<int>(labels.size());
    auto position_of = [&](int label) {
        for (int p = 0; p < n; ++p)
            if (labels[p] == label) return p;
        throw std::invalid_argument("no frame direction labelled " + std::to_string(label));
    };
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty() || s == "0") throw std::invalid_argument("degree of the zero form is ambiguous");
    std::optional<KForm<S>> out;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        i = j;
        S coef(sign);
        std::string mono = term;
        if (auto star = term.find('*'); star != std::string::npos) {
            coef *= parse_rational(term.substr(0, star));
            mono = term.substr(star + 1);
        } else if (!term.empty() && term[0] != 'e') {
            coef *= parse_rational(term);
            mono.clear();
        }
        std::vector<int> pos;
        if (!mono.empty()) {
            if (mono.find('^') != std::string::npos) {
                std::stringstream ss(mono);
                std::string piece;
                while (std::getline(ss, piece, '^')) {
                    if (piece.size() < 2 || piece[0] != 'e') throw std::invalid_argument("bad monomial: " + mono);
                    pos.push_back(position_of(std::stoi(piece.substr(1))));
                }
            } else {
                if (mono[0] != 'e' || mono.size() < 2) throw std::invalid_argument("bad monomial: " + mono);
                for (std::size_t a = 1; a < mono.size(); ++a) {
                    if (!std::isdigit(static_cast<unsigned char>(mono[a]))) throw std::invalid_argument("bad monomial: " + mono);
                    pos.push_back(position_of(mono[a] - '0'));
                }
            }
        }
        auto piece = KForm<S>::monomial(n, pos, coef);
        if (!out) out = piece;
        else *out += piece;
    }
    return *out;
}

} // namespace gstruct
