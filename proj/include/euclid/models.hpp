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

#ifndef EUCLID_MODELS_HPP
#define EUCLID_MODELS_HPP

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "galois.hpp"
#include "number_theory.hpp"
#include "ordinal.hpp"
#include "ring.hpp"
#include "ring_parse.hpp"

namespace euclid {

// --- symbolic ring specs -------------------------------------------------------------

/*
 * R' x A: r infinite principal ideal domains and an Artinian principal part,
 * described by the local lengths of A. `artinian` holds a concrete ring for A when
 * one is known.
 */
struct RingSpec {
    std::vector<PidFactor> pids;
    std::vector<std::uint64_t> lengths;
    std::optional<FiniteRing> artinian;

    /// Lengths are read off the local factors of `a`.
    static RingSpec with_ring(std::vector<PidFactor> pids, std::optional<FiniteRing> a) {
        RingSpec s{std::move(pids), {}, std::move(a)};
        if (s.artinian) {
            CrtDecomposition crt(*s.artinian, std::numeric_limits<std::uint64_t>::max());
            for (const auto& f : crt.local_ring().factors()) {
                FiniteRing local({f});
                s.lengths.push_back(element_length_structural(local, 0));
            }
        }
        s.validate();
        return s;
    }

    void validate() const {
        if (pids.empty() && lengths.empty()) throw DomainError("a ring spec needs at least one factor");
        for (auto l : lengths)
            if (l == 0) throw DomainError("Artinian local lengths must be at least 1");
        for (const auto& p : pids)
            if (p.kind == PidFactor::Kind::Polynomials && !p.field)
                throw DomainError("polynomial factor without a coefficient field");
    }

    std::size_t r() const noexcept { return pids.size(); }

    /// "GF(2)[t] x GF(2)[t] x Z/8"; a symbolic length n prints as GF(2)[t]/(t^n).
    std::string spec() const {
        std::string out;
        auto append = [&](const std::string& s) { out += (out.empty() ? "" : " x ") + s; };
        for (const auto& p : pids) append(p.spec());
        if (artinian) {
            append(artinian->spec());
        } else {
            for (auto l : lengths) append("GF(2)[t]/(t^" + std::to_string(l) + ")");
        }
        return out;
    }
};

/// A finite spec gives a FiniteRing; one with Z or GF(q)[t] factors a RingSpec.
inline std::variant<FiniteRing, RingSpec> parse_ring_spec(std::string_view src) {
    std::vector<PidFactor> pids;
    std::vector<RingFactor> finite;
    for (auto& f : parse_ring_factors(src)) {
        if (auto* p = std::get_if<PidFactor>(&f))
            pids.push_back(*p);
        else
            finite.push_back(std::get<RingFactor>(std::move(f)));
    }
    if (pids.empty()) return FiniteRing(std::move(finite));
    std::optional<FiniteRing> a;
    if (!finite.empty()) a.emplace(std::move(finite));
    return RingSpec::with_ring(std::move(pids), std::move(a));
}

/// e(R) = w*r + l(A), every modeled domain having order type w.
inline Ordinal order_type_of_spec(const RingSpec& s) {
    s.validate();
    const Ordinal pid_part = standard_product(Ordinal::omega(), Ordinal(s.r()));
    if (!pid_part.is_zero() && !pid_part.is_limit()) throw std::logic_error("order type of the domain part is not a limit");
    if (pid_part < standard_product(Ordinal::omega(), Ordinal(s.r())))
        throw std::logic_error("order type of the domain part below r*w");
    std::uint64_t artinian = 0;
    for (auto l : s.lengths) artinian = checked_add(artinian, l);
    return add(pid_part, Ordinal(artinian));
}

struct Bounds {
    Ordinal lower, upper;
};

/// Iterated ordinal sum and iterated natural sum of the factors' order types.
inline Bounds product_bounds(const std::vector<Ordinal>& es) {
    Bounds b{Ordinal(0), Ordinal(0)};
    for (const auto& e : es) {
        b.lower = add(b.lower, e);
        b.upper = natural_sum(b.upper, e);
    }
    return b;
}

/// Largest r and Artinian length realize_ordinal will build.
inline constexpr std::uint64_t max_realized_domains = 4096;
inline constexpr std::uint64_t max_realized_length = 62;

/// w*r + n as r copies of GF(2)[t] and Z/2^n (omitted for n = 0).
inline RingSpec realize_ordinal(const Ordinal& a) {
    if (a.is_zero()) throw DomainError("0 is the order type of no ring with 1 != 0");
    if (a >= Ordinal::omega_power(Ordinal(2)))
        throw DomainError(to_string(a) + " is at least w^2 and is not realized by small Euclidean rings");
    std::uint64_t r = 0, n = 0;
    for (const auto& term : a.terms()) (term.exponent.is_zero() ? n : r) = term.coefficient;
    if (r > max_realized_domains) throw ResourceError("realizing " + to_string(a) + " needs too many factors");
    if (n > max_realized_length)
        throw ResourceError("realizing " + to_string(a) + " needs Z/2^" + std::to_string(n) + ", above 64 bits");
    std::vector<PidFactor> pids(r, PidFactor{PidFactor::Kind::Polynomials, GaloisField::make(2)});
    std::optional<FiniteRing> art;
    if (n > 0) art.emplace(std::vector<RingFactor>{ResidueFactor{std::uint64_t{1} << n}});
    return RingSpec::with_ring(std::move(pids), std::move(art));
}

// --- windowed bottom functions ---------------------------------------------------------

/// Two consecutive windows that agree on the reporting range.
struct StabilizationCertificate {
    std::uint64_t previous_window = 0, final_window = 0;
    std::uint64_t growths = 0;
    /// Every coset test on the reporting range was met by strictly smaller elements.
    bool witnesses_below = false;
};

struct WindowedIntegers {
    /// phi(n) for n = 0..report, the same for -n; values[0] is unused.
    std::vector<std::uint64_t> values;
    StabilizationCertificate certificate;
};

namespace detail {

/// Levels for the ideals (m), 1 <= m <= w, computed on the window [-w, w].
inline std::vector<std::uint64_t> integer_levels(std::uint64_t w) {
    constexpr auto unset = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> level(w + 1, unset);
    std::vector<std::vector<bool>> met(w + 1);
    std::vector<std::uint64_t> met_count(w + 1, 1);
    for (std::uint64_t m = 1; m <= w; ++m) {
        met[m].assign(m, false);
        met[m][0] = true;
    }
    std::uint64_t remaining = w;
    for (std::uint64_t k = 0; remaining > 0; ++k) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t m = 1; m <= w; ++m)
            if (level[m] == unset && met_count[m] == m) next.push_back(m);
        if (next.empty()) throw std::logic_error("integer window " + std::to_string(w) + " stalled");
        for (auto m : next) level[m] = k;
        remaining -= next.size();
        for (auto x : next)
            for (std::uint64_t m = 1; m <= w; ++m) {
                if (level[m] != unset) continue;
                for (std::uint64_t c : {x % m, (m - x % m) % m})
                    if (!met[m][c]) {
                        met[m][c] = true;
                        ++met_count[m];
                    }
            }
    }
    return level;
}

}  // namespace detail

/*
 * The bottom function of Z on |n| <= report. Windows start at `start` and double;
 * the first two consecutive windows covering the reporting range with equal
 * values there give the certificate.
 */
inline WindowedIntegers windowed_bottom_integers(std::uint64_t report = 1024, std::uint64_t start = 64,
                                                 std::uint64_t max_window = std::uint64_t{1} << 16) {
    if (start < 2) throw DomainError("window bound must be at least 2");
    if (report < 1) throw DomainError("reporting range must be at least 1");
    std::optional<std::vector<std::uint64_t>> previous;
    std::uint64_t prev_window = 0, growths = 0;
    for (std::uint64_t w = start; w <= max_window; w *= 2, ++growths) {
        if (w < report) continue;
        auto level = detail::integer_levels(w);
        std::vector<std::uint64_t> table(level.begin(), level.begin() + static_cast<std::ptrdiff_t>(report) + 1);
        table[0] = 0;
        if (previous && *previous == table) {
            bool below = true;
            for (std::uint64_t m = 2; m <= report; ++m)
                for (std::uint64_t c = 1; c < m; ++c)
                    if (std::min(table[c], table[m - c]) >= table[m]) below = false;
            return {table, {prev_window, w, growths, below}};
        }
        previous = std::move(table);
        prev_window = w;
    }
    throw ResourceError("integer window did not stabilize below " + std::to_string(max_window));
}

struct WindowedPolynomials {
    std::shared_ptr<const GaloisField> field;
    /// phi(P) by polynomial code (sum c_i q^i) for deg P <= report; values[0] unused.
    std::vector<std::uint64_t> values;
    StabilizationCertificate certificate;
};

namespace detail {

/// Levels of all nonzero polynomials of degree <= d, by code.
inline std::vector<std::uint64_t> polynomial_levels(const GaloisField& f, std::uint32_t d) {
    const std::uint64_t q = f.q();
    const std::uint64_t n = checked_pow(q, d + 1);
    constexpr auto unset = std::numeric_limits<std::uint64_t>::max();
    // one representative per ideal: the monic polynomials
    std::vector<std::uint64_t> monic;
    std::vector<Poly> monic_poly;
    std::vector<std::vector<bool>> met;
    std::vector<std::uint64_t> met_count, classes;
    for (std::uint64_t c = 1; c < n; ++c) {
        Poly p = poly_decode(c, q);
        if (p.back() != 1) continue;
        monic.push_back(c);
        classes.push_back(checked_pow(q, static_cast<std::uint32_t>(poly_degree(p))));
        met.emplace_back(classes.back(), false);
        met.back()[0] = true;
        met_count.push_back(1);
        monic_poly.push_back(std::move(p));
    }
    std::vector<std::uint64_t> monic_level(monic.size(), unset);
    std::vector<std::uint64_t> level(n, unset);
    std::vector<Poly> elements(n);
    for (std::uint64_t c = 0; c < n; ++c) elements[c] = poly_decode(c, q);
    std::uint64_t remaining = monic.size();
    for (std::uint64_t k = 0; remaining > 0; ++k) {
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < monic.size(); ++i)
            if (monic_level[i] == unset && met_count[i] == classes[i]) next.push_back(i);
        if (next.empty()) throw std::logic_error("polynomial window of degree " + std::to_string(d) + " stalled");
        std::vector<std::uint64_t> fresh;
        for (auto i : next) {
            monic_level[i] = k;
            for (std::uint32_t u = 1; u < q; ++u) {
                const auto c = poly_encode(poly_scale(f, monic_poly[i], u), q);
                level[c] = k;
                fresh.push_back(c);
            }
        }
        remaining -= next.size();
        for (auto x : fresh)
            for (std::size_t i = 0; i < monic.size(); ++i) {
                if (monic_level[i] != unset) continue;
                const auto c = poly_encode(poly_mod(f, elements[x], monic_poly[i]), q);
                if (!met[i][c]) {
                    met[i][c] = true;
                    ++met_count[i];
                }
            }
    }
    return level;
}

}  // namespace detail

/*
 * The bottom function of GF(q)[t] on deg P <= report. Windows are all polynomials
 * of degree <= D, starting at D = start and growing by one degree.
 */
inline WindowedPolynomials windowed_bottom_polynomials(std::uint64_t q, std::uint32_t report = 10, std::uint32_t start = 8,
                                                       std::uint32_t max_degree = 16) {
    auto field = GaloisField::make(q);
    if (start < 2) throw DomainError("window bound must be at least 2");
    const std::uint64_t report_count = checked_pow(q, report + 1);
    std::optional<std::vector<std::uint64_t>> previous;
    std::uint64_t prev_window = 0, growths = 0;
    for (std::uint32_t d = start; d <= max_degree; ++d, ++growths) {
        if (d < report) continue;
        if (checked_pow(q, d + 1) > (std::uint64_t{1} << 22))
            throw ResourceError("polynomial window of degree " + std::to_string(d) + " over GF(" + std::to_string(q) +
                                ") is too large");
        auto level = detail::polynomial_levels(*field, d);
        std::vector<std::uint64_t> table(level.begin(), level.begin() + static_cast<std::ptrdiff_t>(report_count));
        table[0] = 0;
        if (previous && *previous == table) {
            bool below = true;
            for (std::uint64_t b = 1; b < report_count; ++b) {
                const Poly pb = poly_decode(b, q);
                for (std::uint64_t r = 1; r < checked_pow(q, static_cast<std::uint32_t>(poly_degree(pb))); ++r)
                    if (table[r] >= table[b]) below = false;
            }
            return {field, table, {prev_window, d, growths, below}};
        }
        previous = std::move(table);
        prev_window = d;
    }
    throw ResourceError("polynomial window did not stabilize by degree " + std::to_string(max_degree));
}

// --- localizations of Z ----------------------------------------------------------------

/// A reduced fraction with positive denominator.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Fraction make(__int128 n, __int128 d) {
        if (d == 0) throw DomainError("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        constexpr __int128 lim = std::numeric_limits<std::int64_t>::max();
        if (n > lim || n < -lim || d > lim) throw ResourceError("fraction exceeds 64 bits");
        return {static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
    }

    bool operator==(const Fraction&) const = default;
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

inline Fraction operator+(const Fraction& a, const Fraction& b) {
    return Fraction::make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                          static_cast<__int128>(a.den) * b.den);
}
inline Fraction operator-(const Fraction& a, const Fraction& b) { return a + Fraction{-b.num, b.den}; }
inline Fraction operator*(const Fraction& a, const Fraction& b) {
    return Fraction::make(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
}
inline Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num == 0) throw DomainError("division by zero");
    return Fraction::make(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
}

/// "12/5", "-3" or "7".
inline Fraction parse_fraction(std::string_view s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return v;
    };
    auto integer = [&](std::string_view v, std::size_t at) -> std::int64_t {
        v = trim(v);
        std::size_t i = 0;
        bool neg = false;
        if (!v.empty() && (v[0] == '-' || v[0] == '+')) {
            neg = v[0] == '-';
            i = 1;
        }
        if (i == v.size()) throw SyntaxError("expected an integer", at);
        std::uint64_t x = 0;
        for (; i < v.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(v[i]))) throw SyntaxError("expected an integer", at + i);
            x = checked_add(checked_mul(x, 10), static_cast<std::uint64_t>(v[i] - '0'));
        }
        if (x > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            throw ResourceError("integer exceeds 64 bits");
        return neg ? -static_cast<std::int64_t>(x) : static_cast<std::int64_t>(x);
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Fraction::make(integer(s, 0), 1);
    return Fraction::make(integer(s.substr(0, slash), 0), integer(s.substr(slash + 1), slash + 1));
}

namespace detail {

inline void require_prime_set(const std::vector<std::uint64_t>& primes) {
    if (primes.empty()) throw DomainError("the prime set S must be nonempty");
    for (auto p : primes)
        if (!is_prime(p)) throw DomainError(std::to_string(p) + " in S is not prime");
}

inline std::uint64_t abs64(std::int64_t x) {
    return x < 0 ? static_cast<std::uint64_t>(-(x + 1)) + 1 : static_cast<std::uint64_t>(x);
}

inline void require_in_localization(const std::vector<std::uint64_t>& primes, const Fraction& x) {
    for (auto p : primes)
        if (static_cast<std::uint64_t>(x.den) % p == 0)
            throw DomainError(x.str() + " is not in the localization: its denominator is divisible by " + std::to_string(p));
}

}  // namespace detail

/// Sum over p in S of the exponent of p in x.
inline std::uint64_t localization_value(const std::vector<std::uint64_t>& primes, const Fraction& x) {
    detail::require_prime_set(primes);
    detail::require_in_localization(primes, x);
    if (x.num == 0) throw DomainError("0 has no finite value");
    std::uint64_t total = 0;
    for (auto p : primes) total += valuation(detail::abs64(x.num), p);
    return total;
}

struct LocalizationWitness {
    Fraction a, b, q, r;
};

/*
 * A division a = qb + r in the localization with r = 0 or a smaller value than b.
 * If b does not divide a, r is built by the Chinese remainder theorem modulo the
 * product of the p^(e_p + 1), e_p the exponent of p in b: for each p it agrees with
 * a modulo p^(e_p + 1) where v_p(a) < e_p and is p^(e_p) there otherwise.
 */
inline LocalizationWitness localization_divide(const std::vector<std::uint64_t>& primes, const Fraction& a,
                                               const Fraction& b) {
    detail::require_prime_set(primes);
    detail::require_in_localization(primes, a);
    detail::require_in_localization(primes, b);
    if (b.num == 0) throw DomainError("division by zero");
    if (a.num == 0) return {a, b, Fraction{0, 1}, Fraction{0, 1}};
    bool divides = true;
    for (auto p : primes)
        if (valuation(detail::abs64(a.num), p) < valuation(detail::abs64(b.num), p)) divides = false;
    if (divides) return {a, b, a / b, Fraction{0, 1}};

    std::uint64_t modulus = 1;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> congruences;  // (residue, modulus)
    for (auto p : primes) {
        const auto e = valuation(detail::abs64(b.num), p);
        const auto pe = checked_pow(p, e);
        const auto m = checked_mul(pe, p);
        std::uint64_t residue;
        if (valuation(detail::abs64(a.num), p) < e) {
            const std::uint64_t an = (a.num % static_cast<std::int64_t>(m) + static_cast<std::int64_t>(m)) % static_cast<std::int64_t>(m);
            residue = mul_mod(an, inverse_mod(static_cast<std::uint64_t>(a.den) % m, m), m);
        } else {
            residue = pe % m;
        }
        congruences.emplace_back(residue, m);
        modulus = checked_mul(modulus, m);
    }
    std::uint64_t r = 0;
    for (auto [res, m] : congruences) {
        const std::uint64_t rest = modulus / m;
        r = (r + mul_mod(mul_mod(res, rest, modulus), inverse_mod(rest % m, m), modulus)) % modulus;
    }
    if (r > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) throw ResourceError("remainder exceeds 64 bits");
    const Fraction rem{static_cast<std::int64_t>(r), 1};
    return {a, b, (a - rem) / b, rem};
}

/// Checks a witness by exact arithmetic, independently of how it was found.
inline bool verify_localization_witness(const std::vector<std::uint64_t>& primes, const LocalizationWitness& w) {
    for (const auto* x : {&w.q, &w.r})
        for (auto p : primes)
            if (static_cast<std::uint64_t>(x->den) % p == 0) return false;
    if (!(w.q * w.b + w.r == w.a)) return false;
    return w.r.num == 0 || localization_value(primes, w.r) < localization_value(primes, w.b);
}

struct LocalizationCheck {
    std::uint64_t seed = 0, samples = 0, passed = 0;
    std::uint64_t exact = 0, zero_dividend = 0, unit_divisor = 0;
    std::optional<LocalizationWitness> failure;
};

/// Random elements: a product of primes from S and a few other primes, over a
/// denominator coprime to S.
inline Fraction random_localization_element(const std::vector<std::uint64_t>& primes, std::mt19937_64& rng) {
    static constexpr std::uint64_t others[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
    std::vector<std::uint64_t> outside;
    for (auto p : others)
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) outside.push_back(p);
    __int128 num = 1, den = 1;
    for (auto p : primes)
        for (auto e = rng() % 4; e > 0; --e) num *= p;
    for (int i = static_cast<int>(rng() % 3); i > 0; --i) num *= outside[rng() % outside.size()];
    for (int i = static_cast<int>(rng() % 3); i > 0; --i) den *= outside[rng() % outside.size()];
    if (rng() % 2) num = -num;
    return Fraction::make(num, den);
}

inline LocalizationCheck check_localization_euclidean(const std::vector<std::uint64_t>& primes, std::uint64_t samples,
                                                      std::uint64_t seed) {
    detail::require_prime_set(primes);
    std::mt19937_64 rng(seed);
    LocalizationCheck out;
    out.seed = seed;
    out.samples = samples;
    for (std::uint64_t i = 0; i < samples; ++i) {
        Fraction a = rng() % 20 == 0 ? Fraction{0, 1} : random_localization_element(primes, rng);
        Fraction b = random_localization_element(primes, rng);
        auto w = localization_divide(primes, a, b);
        if (!verify_localization_witness(primes, w)) {
            if (!out.failure) out.failure = w;
            continue;
        }
        ++out.passed;
        if (a.num == 0)
            ++out.zero_dividend;
        else if (localization_value(primes, b) == 0)
            ++out.unit_divisor;
        else if (w.r.num == 0)
            ++out.exact;
    }
    return out;
}

// --- negative l-Euclidean witnesses ------------------------------------------------------

/*
 * b with l(b) = 1 and a residue a such that no r with l(r) < 1, i.e. r = 0 or a unit,
 * satisfies r = a mod b. Since those r form a finite set, the check is complete.
 */
struct NotLEuclideanWitness {
    std::string b, a;
    std::vector<std::string> remainders;  // 0 and the units
    bool verified = false;
};

/// Least prime b and least residue 0 <= a < b missing from {0, 1, -1} mod b.
inline NotLEuclideanWitness check_not_l_euclidean_integers() {
    for (std::uint64_t b = 2;; ++b) {
        if (!is_prime(b)) continue;
        const std::set<std::uint64_t> reached{0, 1 % b, b - 1};
        for (std::uint64_t a = 0; a < b; ++a) {
            if (reached.contains(a)) continue;
            bool verified = true;
            for (std::int64_t r : {0, 1, -1})
                if (((static_cast<std::int64_t>(a) - r) % static_cast<std::int64_t>(b)) == 0) verified = false;
            return {std::to_string(b), std::to_string(a), {"0", "1", "-1"}, verified};
        }
    }
}

/// Least monic irreducible b (by code) and least residue a of degree < deg b that is
/// not a constant, over GF(q).
inline NotLEuclideanWitness check_not_l_euclidean_polys(std::uint64_t q) {
    auto field = GaloisField::make(q);
    const GaloisField& f = *field;
    for (int d = 1;; ++d) {
        const std::uint64_t count = checked_pow(q, static_cast<std::uint32_t>(d));
        for (std::uint64_t lower = 0; lower < count; ++lower) {
            Poly b = monic_from_code(lower, d, q);
            if (!poly_is_irreducible(f, b)) continue;
            for (std::uint64_t code = 0; code < count; ++code) {
                Poly a = poly_decode(code, q);
                if (poly_degree(a) < 1) continue;  // 0 and units are constants
                NotLEuclideanWitness w{poly_format(f, b), poly_format(f, a), {}, true};
                for (std::uint32_t c = 0; c < q; ++c) {
                    Poly r = c ? Poly{c} : Poly{};
                    w.remainders.push_back(poly_format(f, r));
                    if (poly_mod(f, poly_sub(f, a, r), b).empty()) w.verified = false;
                }
                return w;
            }
        }
    }
}

}  // namespace euclid

#endif
