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

#ifndef EUCLID_EUCLIDEAN_HPP
#define EUCLID_EUCLIDEAN_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "ordinal.hpp"
#include "poset.hpp"
#include "ring.hpp"

namespace euclid {

/// (a, b) with b nonzero and no q giving a = qb + r, r = 0 or phi(r) < phi(b).
struct Counterexample {
    std::uint64_t a, b;
    bool operator==(const Counterexample&) const = default;
};

struct DivisionWitness {
    std::uint64_t q, r;
    bool operator==(const DivisionWitness&) const = default;
};

/// Result of a division-property check.
struct DivisionCheck {
    std::optional<Counterexample> counterexample;
    explicit operator bool() const { return !counterexample; }
};

/// Thrown when a table claimed to be Euclidean fails the division property.
class NotEuclideanError : public DomainError {
   public:
    NotEuclideanError(const std::string& what, Counterexample c) : DomainError(what), c_(c) {}
    const Counterexample& counterexample() const noexcept { return c_; }

   private:
    Counterexample c_;
};

namespace detail {

/// Coset index of every element for the ideal (b); the ideal itself is coset 0.
inline std::vector<std::uint32_t> coset_labels(const FiniteRing& r, std::uint64_t b, std::uint32_t& count) {
    const std::uint64_t n = r.size();
    std::vector<bool> in_ideal(n, false);
    std::vector<std::uint64_t> ideal;
    for (std::uint64_t q = 0; q < n; ++q) {
        const auto m = r.mul(q, b);
        if (!in_ideal[m]) {
            in_ideal[m] = true;
            ideal.push_back(m);
        }
    }
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> label(n, unset);
    count = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
        if (label[x] != unset) continue;
        for (auto i : ideal) label[r.add(x, i)] = count;
        ++count;
    }
    return label;
}

/// Dense ranks of the values, so that comparisons are integer comparisons.
inline std::vector<std::uint32_t> ranks(const std::vector<Ordinal>& v) {
    std::vector<Ordinal> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::uint32_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), v[i]) - sorted.begin());
    return out;
}

/// Lexicographically least failing (a, b), a first. `values[0]` is ignored.
inline DivisionCheck check_division(const FiniteRing& r, const std::vector<Ordinal>& values) {
    const std::uint64_t n = r.size();
    std::vector<Ordinal> nonzero(values.begin() + 1, values.end());
    std::vector<std::uint32_t> rank(n, 0);
    {
        auto rk = ranks(nonzero);
        std::copy(rk.begin(), rk.end(), rank.begin() + 1);
    }
    std::optional<Counterexample> best;
    for (std::uint64_t b = 1; b < n; ++b) {
        std::uint32_t count = 0;
        const auto label = coset_labels(r, b, count);
        constexpr auto none = std::numeric_limits<std::uint32_t>::max();
        std::vector<std::uint32_t> min_rank(count, none);
        std::vector<std::uint64_t> first(count, n);
        for (std::uint64_t x = 0; x < n; ++x) {
            const auto c = label[x];
            if (first[c] == n) first[c] = x;
            if (x != 0) min_rank[c] = std::min(min_rank[c], rank[x]);
        }
        for (std::uint32_t c = 1; c < count; ++c) {
            if (min_rank[c] < rank[b]) continue;
            if (!best || first[c] < best->a) best = Counterexample{first[c], b};
        }
    }
    return {best};
}

}  // namespace detail

/*
 * A Euclidean function on a finite ring: an ordinal per nonzero element, indexed by
 * code, extended to 0 by the supremum of the other values plus one. Tables are built
 * either validated (the division property was checked) or explicitly unchecked.
 */
class EuclideanTable {
   public:
    /// `values` has one entry per code; the entry for 0 is replaced. Throws
    /// NotEuclideanError with the least counterexample.
    static EuclideanTable validated(FiniteRing r, std::vector<Ordinal> values) {
        EuclideanTable t(std::move(r), std::move(values), false);
        if (auto c = detail::check_division(t.ring_, t.values_).counterexample)
            throw NotEuclideanError("not a Euclidean function on " + t.ring_.spec() + ": no valid division of " +
                                        t.ring_.format(c->a) + " by " + t.ring_.format(c->b),
                                    *c);
        t.validated_ = true;
        return t;
    }

    static EuclideanTable unchecked(FiniteRing r, std::vector<Ordinal> values) {
        return EuclideanTable(std::move(r), std::move(values), false);
    }

    static EuclideanTable from_naturals(FiniteRing r, const std::vector<std::uint64_t>& values, bool validate = true) {
        std::vector<Ordinal> v(values.begin(), values.end());
        return validate ? validated(std::move(r), std::move(v)) : unchecked(std::move(r), std::move(v));
    }

    const FiniteRing& ring() const noexcept { return ring_; }
    bool is_validated() const noexcept { return validated_; }
    const Ordinal& operator[](std::uint64_t code) const { return values_.at(code); }
    const Ordinal& value_at_zero() const noexcept { return values_[0]; }
    /// All values by code, the value at 0 included.
    const std::vector<Ordinal>& values() const noexcept { return values_; }

    /// The values as naturals; throws DomainError if one is infinite.
    std::vector<std::uint64_t> naturals() const {
        std::vector<std::uint64_t> out;
        for (const auto& v : values_) {
            auto n = v.finite_value();
            if (!n) throw DomainError("table value " + to_string(v) + " is not finite");
            out.push_back(*n);
        }
        return out;
    }

    DivisionCheck check() const { return detail::check_division(ring_, values_); }

    bool operator==(const EuclideanTable& o) const { return ring_ == o.ring_ && values_ == o.values_; }

   private:
    EuclideanTable(FiniteRing r, std::vector<Ordinal> values, bool validated)
        : ring_(std::move(r)), values_(std::move(values)), validated_(validated) {
        if (values_.size() != ring_.size())
            throw DomainError("a table for " + ring_.spec() + " needs " + std::to_string(ring_.size()) + " values, got " +
                              std::to_string(values_.size()));
        if (ring_.size() < 2) throw DomainError("a table needs a nonzero element");
        values_[0] = (*std::max_element(values_.begin() + 1, values_.end())).successor();
    }

    FiniteRing ring_;
    std::vector<Ordinal> values_;
    bool validated_;
};

inline DivisionCheck is_euclidean_function(const EuclideanTable& t) { return t.check(); }

/// The first q in code order giving a valid remainder, or none.
inline std::optional<DivisionWitness> division_witness(const EuclideanTable& t, std::uint64_t a, std::uint64_t b) {
    if (b == 0) throw DomainError("division by zero");
    const auto& r = t.ring();
    for (std::uint64_t q = 0; q < r.size(); ++q) {
        const auto rem = r.sub(a, r.mul(q, b));
        if (rem == 0 || t[rem] < t[b]) return DivisionWitness{q, rem};
    }
    return std::nullopt;
}

/// Elements left without a value when the bottom fixed point stalls.
struct NotEuclideanReport {
    FiniteRing ring;
    std::vector<std::uint64_t> stuck;     // codes, ascending
    std::vector<std::uint64_t> assigned;  // levels reached by the other elements, by code
    std::uint64_t levels = 0;
};

using BottomResult = std::variant<EuclideanTable, NotEuclideanReport>;

/*
 * The least Euclidean function, level by level: level k holds the unassigned b
 * for which every coset of (b) other than (b) itself contains an element of a
 * lower level. Whole levels are assigned at once.
 */
inline BottomResult bottom_euclidean(const FiniteRing& r, std::uint64_t max_size = default_max_size) {
    r.require_enumerable(max_size, "bottom_euclidean");
    const std::uint64_t n = r.size();
    constexpr auto unset = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> level(n, unset);
    std::vector<std::vector<std::uint32_t>> labels(n);
    std::vector<std::uint32_t> counts(n, 0);
    for (std::uint64_t b = 1; b < n; ++b) labels[b] = detail::coset_labels(r, b, counts[b]);

    std::uint64_t remaining = n - 1;
    std::uint64_t k = 0;
    for (; remaining > 0; ++k) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t b = 1; b < n; ++b) {
            if (level[b] != unset) continue;
            std::vector<bool> met(counts[b], false);
            met[0] = true;
            for (std::uint64_t x = 1; x < n; ++x)
                if (level[x] != unset) met[labels[b][x]] = true;
            if (std::all_of(met.begin(), met.end(), [](bool m) { return m; })) next.push_back(b);
        }
        if (next.empty()) {
            NotEuclideanReport report{r, {}, {}, k};
            for (std::uint64_t x = 1; x < n; ++x) {
                if (level[x] == unset)
                    report.stuck.push_back(x);
                else
                    report.assigned.push_back(x);
            }
            return report;
        }
        for (auto b : next) level[b] = k;
        remaining -= next.size();
    }
    level[0] = 0;
    return EuclideanTable::from_naturals(r, level);
}

/// e(R) of a bottom table: its value at 0. Throws DomainError for other tables.
inline Ordinal order_type(const EuclideanTable& t) {
    auto bottom = bottom_euclidean(t.ring(), t.ring().size());
    auto* table = std::get_if<EuclideanTable>(&bottom);
    if (!table || !(*table == t)) throw DomainError("order_type needs the bottom table of " + t.ring().spec());
    return t.value_at_zero();
}

namespace detail {

inline void require_validated(const EuclideanTable& t, const char* op) {
    if (!t.is_validated()) throw DomainError(std::string(op) + " needs a validated table");
}

}  // namespace detail

/// x -> min of phi over the nonzero multiples of x.
inline EuclideanTable isotone_minimization(const EuclideanTable& t) {
    detail::require_validated(t, "isotone_minimization");
    const auto& r = t.ring();
    std::vector<Ordinal> out(r.size());
    for (std::uint64_t x = 1; x < r.size(); ++x) {
        std::optional<Ordinal> best;
        for (std::uint64_t q = 0; q < r.size(); ++q) {
            const auto y = r.mul(q, x);
            if (y != 0 && (!best || t[y] < *best)) best = t[y];
        }
        out[x] = *best;
    }
    return EuclideanTable::validated(r, std::move(out));
}

/// Constant on associates, and x | y strictly implies phi(x) < phi(y), over
/// nonzero x, y: an isotone map on the principal ideals.
inline bool is_isotone_euclidean(const EuclideanTable& t) {
    const auto& r = t.ring();
    auto leq = [&](std::size_t i, std::size_t j) { return r.divides(i + 1, j + 1); };
    std::vector<Ordinal> v(t.values().begin() + 1, t.values().end());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] != v[j] && leq(i, j) && leq(j, i)) return false;
    return is_isotone_on(v.size(), leq, v, std::less<Ordinal>{});
}

/// x | y implies phi(x) <= phi(y), over nonzero x, y.
inline bool is_weakly_isotone_euclidean(const EuclideanTable& t) {
    const auto& r = t.ring();
    auto leq = [&](std::size_t i, std::size_t j) { return r.divides(i + 1, j + 1); };
    std::vector<Ordinal> v(t.values().begin() + 1, t.values().end());
    return is_weakly_isotone_on(v.size(), leq, v, std::less<Ordinal>{});
}

/// The induced function on R/(b): each coset gets the least value of its elements.
inline EuclideanTable quotient_euclidean(const EuclideanTable& t, std::uint64_t b) {
    detail::require_validated(t, "quotient_euclidean");
    QuotientMap q(t.ring(), b);
    const auto& s = q.ring();
    std::vector<std::optional<Ordinal>> best(s.size());
    for (std::uint64_t x = 1; x < t.ring().size(); ++x) {
        const auto y = q.project(x);
        if (y != 0 && (!best[y] || t[x] < *best[y])) best[y] = t[x];
    }
    std::vector<Ordinal> out(s.size());
    for (std::uint64_t y = 1; y < s.size(); ++y) out[y] = *best[y];
    return EuclideanTable::validated(s, std::move(out));
}

/// Product ring with the factors of r1 followed by those of r2.
inline FiniteRing product_ring(const FiniteRing& r1, const FiniteRing& r2) {
    std::vector<RingFactor> fs = r1.factors();
    fs.insert(fs.end(), r2.factors().begin(), r2.factors().end());
    return FiniteRing(std::move(fs));
}

// --- pair-valued functions on a product ---------------------------------------------

enum class NagataCase { Divides, Case1, Case2, Case3 };

inline const char* to_string(NagataCase c) {
    switch (c) {
        case NagataCase::Divides: return "divides";
        case NagataCase::Case1: return "case1";
        case NagataCase::Case2: return "case2";
        case NagataCase::Case3: return "case3";
    }
    return "?";
}

struct NagataWitness {
    DivisionWitness witness;
    NagataCase kind;
};

/*
 * phi1 x phi2 on R1 x R2, with each component extended to 0 by its value at zero,
 * valued in the product order on pairs.
 */
class PairTable {
   public:
    PairTable(EuclideanTable t1, EuclideanTable t2)
        : t1_(std::move(t1)), t2_(std::move(t2)), ring_(product_ring(t1_.ring(), t2_.ring())) {
        detail::require_validated(t1_, "nagata_product");
        detail::require_validated(t2_, "nagata_product");
    }

    const FiniteRing& ring() const noexcept { return ring_; }
    const EuclideanTable& first() const noexcept { return t1_; }
    const EuclideanTable& second() const noexcept { return t2_; }

    std::pair<std::uint64_t, std::uint64_t> split(std::uint64_t code) const {
        return {code / t2_.ring().size(), code % t2_.ring().size()};
    }
    std::uint64_t join(std::uint64_t x1, std::uint64_t x2) const { return x1 * t2_.ring().size() + x2; }

    std::pair<Ordinal, Ordinal> operator[](std::uint64_t code) const {
        auto [x1, x2] = split(code);
        return {t1_[x1], t2_[x2]};
    }

    /// Componentwise strict order.
    static bool less(const std::pair<Ordinal, Ordinal>& a, const std::pair<Ordinal, Ordinal>& b) {
        return a.first <= b.first && a.second <= b.second && a != b;
    }

    /// A division of x by y (y nonzero) with remainder 0 or strictly below y.
    NagataWitness divide(std::uint64_t x, std::uint64_t y) const {
        if (y == 0) throw DomainError("division by zero");
        const auto& r = ring_;
        if (r.divides(y, x)) {
            for (std::uint64_t q = 0; q < r.size(); ++q)
                if (r.mul(q, y) == x) return {{q, 0}, NagataCase::Divides};
        }
        auto [x1, x2] = split(x);
        auto [y1, y2] = split(y);
        auto [q1, r1] = component(t1_, x1, y1);
        auto [q2, r2] = component(t2_, x2, y2);
        NagataCase kind = NagataCase::Case1;
        if (r1 == 0 && y1 != 0) {
            q1 = t1_.ring().sub(q1, t1_.ring().one_code());
            r1 = y1;
            kind = NagataCase::Case2;
        } else if (r2 == 0 && y2 != 0) {
            q2 = t2_.ring().sub(q2, t2_.ring().one_code());
            r2 = y2;
            kind = NagataCase::Case3;
        }
        return {{join(q1, q2), join(r1, r2)}, kind};
    }

    /// Every (x, y) checked; the least failing pair, if any.
    std::optional<Counterexample> validate() const {
        for (std::uint64_t x = 0; x < ring_.size(); ++x)
            for (std::uint64_t y = 1; y < ring_.size(); ++y) {
                const auto w = divide(x, y).witness;
                const bool exact = ring_.add(ring_.mul(w.q, y), w.r) == x;
                if (!exact || (w.r != 0 && !less((*this)[w.r], (*this)[y]))) return Counterexample{x, y};
            }
        return std::nullopt;
    }

   private:
    /// Exact quotient when yi | xi, else a witness of the component table; y = 0 gives (0, x).
    static std::pair<std::uint64_t, std::uint64_t> component(const EuclideanTable& t, std::uint64_t x, std::uint64_t y) {
        const auto& r = t.ring();
        if (y == 0) return {0, x};
        if (r.divides(y, x)) {
            for (std::uint64_t q = 0; q < r.size(); ++q)
                if (r.mul(q, y) == x) return {q, 0};
        }
        auto w = division_witness(t, x, y);
        if (!w) throw std::logic_error("validated table without a division witness");
        return {w->q, w->r};
    }

    EuclideanTable t1_, t2_;
    FiniteRing ring_;
};

inline PairTable nagata_product(const EuclideanTable& t1, const EuclideanTable& t2) { return PairTable(t1, t2); }

/// Natural sum of the pair components: the length function of a product of chains.
inline EuclideanTable collapse_pair_table(const PairTable& pt) {
    std::vector<Ordinal> out(pt.ring().size());
    for (std::uint64_t x = 1; x < out.size(); ++x) {
        auto [a, b] = pt[x];
        out[x] = natural_sum(a, b);
    }
    return EuclideanTable::validated(pt.ring(), std::move(out));
}

enum class Side { First, Second };

/*
 * For R = R1 x R2 split after `split` factors: on R2, psi(y) = -phi((0,1)) + phi((0,y));
 * on R1 symmetrically with (1,0). The table must be the bottom table of R.
 */
inline EuclideanTable residual_euclidean(const EuclideanTable& t, std::size_t split = 1, Side side = Side::Second) {
    const auto& r = t.ring();
    if (split == 0 || split >= r.factor_count())
        throw DomainError("residual_euclidean needs a split of " + r.spec() + " into two nonempty parts");
    auto bottom = bottom_euclidean(r, r.size());
    auto* b = std::get_if<EuclideanTable>(&bottom);
    if (!b || !(*b == t)) throw DomainError("residual_euclidean needs the bottom table of " + r.spec());
    std::vector<RingFactor> f1(r.factors().begin(), r.factors().begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<RingFactor> f2(r.factors().begin() + static_cast<std::ptrdiff_t>(split), r.factors().end());
    const FiniteRing r1(f1), r2(f2);
    auto embed = [&](std::uint64_t y) {
        return side == Side::Second ? y : y * r2.size();  // (0, y) or (y, 0)
    };
    const FiniteRing& target = side == Side::Second ? r2 : r1;
    const std::uint64_t unit = side == Side::Second ? r2.one_code() : r1.one_code();
    const Ordinal base = t[embed(unit)];
    std::vector<Ordinal> out(target.size());
    for (std::uint64_t y = 1; y < target.size(); ++y) out[y] = left_subtract(base, t[embed(y)]);
    return EuclideanTable::validated(target, std::move(out));
}

/// Whether x -> l(x) is a Euclidean function.
inline DivisionCheck check_l_euclidean(const FiniteRing& r, std::uint64_t max_size = default_max_size) {
    const auto lengths = element_lengths(r, max_size);
    std::vector<Ordinal> v(lengths.begin(), lengths.end());
    return detail::check_division(r, v);
}

}  // namespace euclid

#endif
