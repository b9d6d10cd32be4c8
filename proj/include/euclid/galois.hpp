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

#ifndef EUCLID_GALOIS_HPP
#define EUCLID_GALOIS_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "number_theory.hpp"

namespace euclid {

/// Polynomial coefficients, constant term first, no trailing zeros. Empty is 0.
using Poly = std::vector<std::uint32_t>;

/*
 * GF(q), q = p^k, as GF(p)[a]/(m(a)). An element's code is the base-p number whose
 * digits are its coefficients in powers of a, so codes 0..p-1 are the prime field
 * and the code p is the generator a. Unless given explicitly, m is the
 * lexicographically least monic irreducible of degree k (compared by code).
 */
class GaloisField {
   public:
    static std::shared_ptr<const GaloisField> make(std::uint64_t q);
    /// Explicit defining polynomial over GF(p); throws SpecError if reducible.
    static std::shared_ptr<const GaloisField> make(std::uint64_t q, const Poly& modulus);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t q() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return k_ == 1; }
    /// Defining polynomial over GF(p) (for a prime field: a).
    const Poly& modulus() const noexcept { return modulus_; }
    bool has_default_modulus() const noexcept { return default_modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + neg_[b]]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw DomainError("division by zero in GF(" + std::to_string(q_) + ")");
        return inv_[a];
    }

    /// "3" in a prime field, "a^2+1" otherwise.
    std::string format(std::uint32_t a) const;
    /// "GF(4)" or "GF(4,a^2+a+1)" when the modulus is not the default one.
    std::string name() const;

   private:
    GaloisField(std::uint32_t p, std::uint32_t k, Poly modulus, bool is_default);

    std::uint32_t p_, k_, q_;
    Poly modulus_;
    bool default_modulus_;
    std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

// --- polynomial arithmetic over a GaloisField -------------------------------------

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int poly_degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly poly_add(const GaloisField& f, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    poly_trim(out);
    return out;
}

inline Poly poly_sub(const GaloisField& f, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    poly_trim(out);
    return out;
}

inline Poly poly_mul(const GaloisField& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    poly_trim(out);
    return out;
}

inline Poly poly_scale(const GaloisField& f, const Poly& a, std::uint32_t c) {
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], c);
    poly_trim(out);
    return out;
}

/// (quotient, remainder); b nonzero.
inline std::pair<Poly, Poly> poly_divmod(const GaloisField& f, const Poly& a, const Poly& b) {
    if (b.empty()) throw DomainError("polynomial division by zero");
    Poly r = a;
    if (r.size() < b.size()) return {Poly{}, r};
    Poly q(r.size() - b.size() + 1, 0);
    const std::uint32_t lead_inv = f.inv(b.back());
    for (std::size_t i = r.size(); i-- >= b.size();) {
        const std::uint32_t c = f.mul(r[i], lead_inv);
        if (c == 0) continue;
        const std::size_t shift = i - (b.size() - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = f.sub(r[shift + j], f.mul(c, b[j]));
    }
    poly_trim(q);
    poly_trim(r);
    return {q, r};
}

inline Poly poly_mod(const GaloisField& f, const Poly& a, const Poly& b) { return poly_divmod(f, a, b).second; }

inline Poly poly_monic(const GaloisField& f, const Poly& a) {
    if (a.empty()) return a;
    return poly_scale(f, a, f.inv(a.back()));
}

/// Monic gcd; gcd(0, 0) = 0.
inline Poly poly_gcd(const GaloisField& f, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = poly_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(f, a);
}

/// s, t with s*a + t*b = gcd(a, b) (monic).
inline std::pair<Poly, Poly> poly_bezout(const GaloisField& f, const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(f, r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, poly_sub(f, s0, poly_mul(f, q, s1)));
        t0 = std::exchange(t1, poly_sub(f, t0, poly_mul(f, q, t1)));
    }
    if (r0.empty()) return {s0, t0};
    const std::uint32_t c = f.inv(r0.back());
    return {poly_scale(f, s0, c), poly_scale(f, t0, c)};
}

/// Code = sum of c_i * q^i.
inline std::uint64_t poly_encode(const Poly& a, std::uint64_t q) {
    std::uint64_t code = 0;
    for (std::size_t i = a.size(); i-- > 0;) code = checked_add(checked_mul(code, q), a[i]);
    return code;
}

inline Poly poly_decode(std::uint64_t code, std::uint64_t q) {
    Poly out;
    while (code != 0) {
        out.push_back(static_cast<std::uint32_t>(code % q));
        code /= q;
    }
    return out;
}

/// Monic polynomial of the given degree whose lower coefficients have code `lower`.
inline Poly monic_from_code(std::uint64_t lower, int degree, std::uint64_t q) {
    Poly out = poly_decode(lower, q);
    out.resize(static_cast<std::size_t>(degree) + 1, 0);
    out.back() = 1;
    return out;
}

inline bool poly_is_irreducible(const GaloisField& f, const Poly& a) {
    const int n = poly_degree(a);
    if (n < 1) return false;
    for (int d = 1; 2 * d <= n; ++d) {
        const std::uint64_t count = checked_pow(f.q(), static_cast<std::uint32_t>(d));
        for (std::uint64_t lower = 0; lower < count; ++lower)
            if (poly_mod(f, a, monic_from_code(lower, d, f.q())).empty()) return false;
    }
    return true;
}

struct PolyFactor {
    Poly irreducible;  // monic
    std::uint32_t multiplicity;
};

/// Monic irreducible factorization by trial division, factors ordered by degree then code.
inline std::vector<PolyFactor> poly_factor(const GaloisField& f, const Poly& a) {
    if (a.empty()) throw DomainError("cannot factor the zero polynomial");
    Poly rest = poly_monic(f, a);
    std::vector<PolyFactor> out;
    for (int d = 1; 2 * d <= poly_degree(rest); ++d) {
        const std::uint64_t count = checked_pow(f.q(), static_cast<std::uint32_t>(d));
        for (std::uint64_t lower = 0; lower < count && 2 * d <= poly_degree(rest); ++lower) {
            Poly g = monic_from_code(lower, d, f.q());
            std::uint32_t m = 0;
            for (;;) {
                auto [quot, rem] = poly_divmod(f, rest, g);
                if (!rem.empty()) break;
                rest = std::move(quot);
                ++m;
            }
            if (m > 0) out.push_back({g, m});
        }
    }
    if (poly_degree(rest) >= 1) {
        auto same = std::find_if(out.begin(), out.end(), [&](const PolyFactor& pf) { return pf.irreducible == rest; });
        if (same != out.end())
            ++same->multiplicity;
        else
            out.push_back({rest, 1});
    }
    std::sort(out.begin(), out.end(), [&](const PolyFactor& x, const PolyFactor& y) {
        if (x.irreducible.size() != y.irreducible.size()) return x.irreducible.size() < y.irreducible.size();
        return poly_encode(x.irreducible, f.q()) < poly_encode(y.irreducible, f.q());
    });
    return out;
}

/// Terms highest degree first, e.g. "t^2+t+1", "a*t+2". Coefficients in a
/// non-prime field expand into their a-monomials.
inline std::string poly_format(const GaloisField& f, const Poly& a, char var = 't') {
    if (a.empty()) return "0";
    std::string out;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        const Poly digits = poly_decode(a[i], f.p());
        for (std::size_t j = digits.size(); j-- > 0;) {
            const std::uint32_t d = digits[j];
            if (d == 0) continue;
            std::string mono;
            if (j > 0) mono = "a" + (j > 1 ? "^" + std::to_string(j) : std::string());
            if (i > 0) {
                std::string tpart(1, var);
                if (i > 1) tpart += "^" + std::to_string(i);
                mono = mono.empty() ? tpart : mono + "*" + tpart;
            }
            if (mono.empty())
                mono = std::to_string(d);
            else if (d != 1)
                mono = std::to_string(d) + mono;
            if (!out.empty()) out += "+";
            out += mono;
        }
    }
    return out;
}

// --- GaloisField implementation ------------------------------------------------------

inline GaloisField::GaloisField(std::uint32_t p, std::uint32_t k, Poly modulus, bool is_default)
    : p_(p), k_(k), q_(static_cast<std::uint32_t>(checked_pow(p, k))), modulus_(std::move(modulus)),
      default_modulus_(is_default) {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    auto digits = [&](std::uint32_t a) {
        Poly d(k_, 0);
        for (std::uint32_t i = 0; i < k_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    };
    auto code = [&](const Poly& d) {
        std::uint32_t c = 0;
        for (std::size_t i = d.size(); i-- > 0;) c = c * p_ + d[i];
        return c;
    };
    for (std::uint32_t a = 0; a < q_; ++a) {
        const Poly da = digits(a);
        Poly dn(k_);
        for (std::uint32_t i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = code(dn);
        for (std::uint32_t b = 0; b < q_; ++b) {
            const Poly db = digits(b);
            Poly ds(k_);
            for (std::uint32_t i = 0; i < k_; ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = code(ds);
            // schoolbook product reduced by the monic modulus
            std::vector<std::uint64_t> prod(2 * k_, 0);
            for (std::uint32_t i = 0; i < k_; ++i)
                for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            for (std::size_t i = prod.size(); i-- > k_;) {
                const std::uint64_t c = prod[i];
                if (c == 0) continue;
                for (std::uint32_t j = 0; j <= k_; ++j) {
                    const std::size_t idx = i - k_ + j;
                    prod[idx] = (prod[idx] + p_ - c * modulus_[j] % p_) % p_;
                }
            }
            Poly dm(k_);
            for (std::uint32_t i = 0; i < k_; ++i) dm[i] = static_cast<std::uint32_t>(prod[i]);
            mul_[a * q_ + b] = code(dm);
        }
    }
    for (std::uint32_t a = 1; a < q_; ++a)
        for (std::uint32_t b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) inv_[a] = b;
}

inline std::shared_ptr<const GaloisField> GaloisField::make(std::uint64_t q) {
    auto pp = as_prime_power(q);
    if (!pp) throw SpecError(SpecError::Kind::NotPrimePower, "GF(" + std::to_string(q) + "): not a prime power");
    if (q > 4096) throw ResourceError("GF(" + std::to_string(q) + ") is larger than the supported 4096 elements");
    const auto p = static_cast<std::uint32_t>(pp->prime);
    if (pp->exponent == 1) return std::shared_ptr<const GaloisField>(new GaloisField(p, 1, Poly{0, 1}, true));
    auto prime = make(p);
    const auto k = static_cast<int>(pp->exponent);
    for (std::uint64_t lower = 0;; ++lower) {
        Poly m = monic_from_code(lower, k, p);
        if (poly_is_irreducible(*prime, m))
            return std::shared_ptr<const GaloisField>(new GaloisField(p, pp->exponent, std::move(m), true));
    }
}

inline std::shared_ptr<const GaloisField> GaloisField::make(std::uint64_t q, const Poly& modulus) {
    auto field = make(q);
    if (field->is_prime_field())
        throw SpecError(SpecError::Kind::ReducibleModulus, "GF(" + std::to_string(q) + ") is a prime field");
    auto prime = make(field->p());
    Poly m = modulus;
    for (auto& c : m) c %= field->p();
    poly_trim(m);
    if (poly_degree(m) != static_cast<int>(field->k()))
        throw SpecError(SpecError::Kind::DegenerateModulus,
                        "defining polynomial of GF(" + std::to_string(q) + ") must have degree " +
                            std::to_string(field->k()));
    m = poly_monic(*prime, m);
    if (!poly_is_irreducible(*prime, m))
        throw SpecError(SpecError::Kind::ReducibleModulus,
                        "defining polynomial " + poly_format(*prime, m, 'a') + " is reducible over GF(" +
                            std::to_string(field->p()) + ")");
    if (m == field->modulus()) return field;
    return std::shared_ptr<const GaloisField>(new GaloisField(field->p(), field->k(), std::move(m), false));
}

inline std::string GaloisField::format(std::uint32_t a) const {
    if (is_prime_field()) return std::to_string(a);
    auto prime = GaloisField(p_, 1, Poly{0, 1}, true);
    return poly_format(prime, poly_decode(a, p_), 'a');
}

inline std::string GaloisField::name() const {
    std::string out = "GF(" + std::to_string(q_);
    if (!default_modulus_) {
        auto prime = GaloisField(p_, 1, Poly{0, 1}, true);
        out += "," + poly_format(prime, modulus_, 'a');
    }
    return out + ")";
}

}  // namespace euclid

#endif
