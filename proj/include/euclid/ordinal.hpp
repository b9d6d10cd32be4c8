/*
   Copyright 2026 The euclid Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EUCLID_ORDINAL_HPP
#define EUCLID_ORDINAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "number_theory.hpp"

namespace euclid {

struct CnfTerm;

/*
 * An ordinal below epsilon_0 in Cantor normal form
 *
 *     w^e_1 * c_1 + w^e_2 * c_2 + ... + w^e_r * c_r,   e_1 > e_2 > ... > e_r,  c_i >= 1,
 *
 * where every exponent is again an Ordinal. The empty term list is 0. The form is
 * canonical, so structural equality is ordinal equality.
 *
 * Two products are provided. standard_product(a, b) is the usual one (b copies of a
 * laid end to end, so standard_product(w, 2) = w*2). mul(a, b) follows the
 * juxtaposition convention in which "2w" means w + w, i.e. mul(a, b) =
 * standard_product(b, a).
 */
class Ordinal {
   public:
    Ordinal() = default;
    explicit Ordinal(std::uint64_t n);

    static Ordinal omega();
    /// w^exponent * coefficient.
    static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coefficient = 1);
    /// Ordinal sum of the given terms, in order. Non-canonical input is normalized.
    static Ordinal from_terms(const std::vector<CnfTerm>& terms);

    std::span<const CnfTerm> terms() const noexcept;

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_finite() const noexcept;
    std::optional<std::uint64_t> finite_value() const noexcept;
    /// Nonzero with no finite tail. is_limit(0) is false.
    bool is_limit() const noexcept;
    Ordinal successor() const;
    /// Exponent of the leading term; 0 for the zero ordinal.
    Ordinal leading_exponent() const;

    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
    friend bool operator==(const Ordinal& a, const Ordinal& b);

   private:
    friend Ordinal add(const Ordinal&, const Ordinal&);
    friend Ordinal natural_sum(const Ordinal&, const Ordinal&);
    friend Ordinal standard_product(const Ordinal&, const Ordinal&);
    friend Ordinal left_subtract(const Ordinal&, const Ordinal&);

    std::vector<CnfTerm> terms_;
};

struct CnfTerm {
    Ordinal exponent;
    std::uint64_t coefficient = 1;

    bool operator==(const CnfTerm&) const = default;
};

Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal natural_sum(const Ordinal& a, const Ordinal& b);
Ordinal standard_product(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
Ordinal left_subtract(const Ordinal& a, const Ordinal& b);
std::string to_string(const Ordinal& a);

// ---------------------------------------------------------------------------

inline Ordinal::Ordinal(std::uint64_t n) {
    if (n != 0) terms_.push_back(CnfTerm{Ordinal{}, n});
}

inline Ordinal Ordinal::omega() { return omega_power(Ordinal(1)); }

inline Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coefficient) {
    Ordinal out;
    if (coefficient != 0) out.terms_.push_back(CnfTerm{exponent, coefficient});
    return out;
}

inline Ordinal Ordinal::from_terms(const std::vector<CnfTerm>& terms) {
    Ordinal out;
    for (const auto& t : terms) out = add(out, omega_power(t.exponent, t.coefficient));
    return out;
}

inline std::span<const CnfTerm> Ordinal::terms() const noexcept { return terms_; }

inline bool Ordinal::is_finite() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent.is_zero());
}

inline std::optional<std::uint64_t> Ordinal::finite_value() const noexcept {
    if (terms_.empty()) return 0;
    if (!is_finite()) return std::nullopt;
    return terms_.front().coefficient;
}

inline bool Ordinal::is_limit() const noexcept { return !terms_.empty() && !terms_.back().exponent.is_zero(); }

inline Ordinal Ordinal::successor() const { return add(*this, Ordinal(1)); }

inline Ordinal Ordinal::leading_exponent() const { return terms_.empty() ? Ordinal{} : terms_.front().exponent; }

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (auto c = x.exponent <=> y.exponent; c != 0) return c;
        if (auto c = x.coefficient <=> y.coefficient; c != 0) return c;
    }
    return a.terms_.size() <=> b.terms_.size();
}

inline bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

inline Ordinal add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    const CnfTerm& lead = b.terms_.front();
    Ordinal out;
    auto it = b.terms_.begin();
    for (const auto& t : a.terms_) {
        auto c = t.exponent <=> lead.exponent;
        if (c > 0) {
            out.terms_.push_back(t);
            continue;
        }
        if (c == 0) {
            out.terms_.push_back(CnfTerm{lead.exponent, checked_add(t.coefficient, lead.coefficient)});
            ++it;
        }
        break;
    }
    out.terms_.insert(out.terms_.end(), it, b.terms_.end());
    return out;
}

inline Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
    Ordinal out;
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size()) {
            out.terms_.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size()) {
            out.terms_.push_back(b.terms_[j++]);
        } else {
            auto c = a.terms_[i].exponent <=> b.terms_[j].exponent;
            if (c > 0) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                out.terms_.push_back(b.terms_[j++]);
            } else {
                out.terms_.push_back(
                    CnfTerm{a.terms_[i].exponent, checked_add(a.terms_[i].coefficient, b.terms_[j].coefficient)});
                ++i;
                ++j;
            }
        }
    }
    return out;
}

inline Ordinal standard_product(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero() || b.is_zero()) return Ordinal{};
    const CnfTerm& lead = a.terms_.front();
    Ordinal out;
    for (const auto& t : b.terms_) {
        if (!t.exponent.is_zero()) {
            // a * w^e = w^(lead + e) for e > 0
            out.terms_.push_back(CnfTerm{add(lead.exponent, t.exponent), t.coefficient});
        } else {
            out.terms_.push_back(CnfTerm{lead.exponent, checked_mul(lead.coefficient, t.coefficient)});
            out.terms_.insert(out.terms_.end(), a.terms_.begin() + 1, a.terms_.end());
        }
    }
    return out;
}

inline Ordinal mul(const Ordinal& a, const Ordinal& b) { return standard_product(b, a); }

inline Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
    if (a > b) throw DomainError("left subtraction undefined: " + to_string(a) + " > " + to_string(b));
    std::size_t i = 0;
    while (i < a.terms_.size() && a.terms_[i] == b.terms_[i]) ++i;
    Ordinal out;
    if (i == a.terms_.size()) {
        out.terms_.assign(b.terms_.begin() + static_cast<std::ptrdiff_t>(i), b.terms_.end());
        return out;
    }
    // a < b and they first differ at i, so b has a term there.
    const CnfTerm& x = a.terms_[i];
    const CnfTerm& y = b.terms_[i];
    auto rest = b.terms_.begin() + static_cast<std::ptrdiff_t>(i) + 1;
    if (x.exponent == y.exponent) {
        out.terms_.push_back(CnfTerm{y.exponent, y.coefficient - x.coefficient});
    } else {
        out.terms_.push_back(y);
    }
    out.terms_.insert(out.terms_.end(), rest, b.terms_.end());
    return out;
}

namespace detail {

inline bool prints_bare_exponent(const Ordinal& e) { return e.is_finite() || e == Ordinal::omega(); }

}  // namespace detail

/// Canonical ASCII form, e.g. "w^2*3 + w + 5", "w^(w + 1)". Reparses to the same value.
inline std::string to_string(const Ordinal& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& t : a.terms()) {
        if (!out.empty()) out += " + ";
        if (t.exponent.is_zero()) {
            out += std::to_string(t.coefficient);
            continue;
        }
        out += "w";
        if (t.exponent != Ordinal(1)) {
            out += "^";
            if (detail::prints_bare_exponent(t.exponent))
                out += to_string(t.exponent);
            else
                out += "(" + to_string(t.exponent) + ")";
        }
        if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << to_string(a); }

}  // namespace euclid

#endif
