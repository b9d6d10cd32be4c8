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

#ifndef EUCLID_RING_HPP
#define EUCLID_RING_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "galois.hpp"
#include "number_theory.hpp"
#include "poset.hpp"

namespace euclid {

/// Default bound on carriers for exhaustive operations.
inline constexpr std::uint64_t default_max_size = 512;

struct ResidueFactor {
    std::uint64_t modulus;  // Z/modulus
};

/// GF(q)[t]/(modulus); an element is coded as its reduced polynomial, sum c_i q^i.
struct PolyQuotientFactor {
    std::shared_ptr<const GaloisField> field;
    Poly modulus;  // monic, degree >= 1
};

/// A ring given by Cayley tables over 0..size-1, with 0 the zero element.
struct TableData {
    std::string name;
    std::uint64_t size = 0;
    std::vector<std::uint32_t> add, mul, neg;
    std::uint32_t one = 1;
    std::vector<std::string> labels;
};

struct TableFactor {
    std::shared_ptr<const TableData> data;
};

using RingFactor = std::variant<ResidueFactor, PolyQuotientFactor, TableFactor>;

// --- per-factor arithmetic -----------------------------------------------------

namespace detail {

inline std::uint64_t factor_size(const RingFactor& f) {
    struct {
        std::uint64_t operator()(const ResidueFactor& r) const { return r.modulus; }
        std::uint64_t operator()(const PolyQuotientFactor& p) const {
            return checked_pow(p.field->q(), static_cast<std::uint32_t>(poly_degree(p.modulus)));
        }
        std::uint64_t operator()(const TableFactor& t) const { return t.data->size; }
    } v;
    return std::visit(v, f);
}

inline Poly decode_in(const PolyQuotientFactor& p, std::uint64_t code) { return poly_decode(code, p.field->q()); }
inline std::uint64_t encode_in(const PolyQuotientFactor& p, const Poly& a) { return poly_encode(a, p.field->q()); }

inline std::uint64_t factor_add(const RingFactor& f, std::uint64_t a, std::uint64_t b) {
    if (auto* r = std::get_if<ResidueFactor>(&f)) {
        const std::uint64_t s = a + b;  // may wrap for moduli near 2^64
        return (s < a || s >= r->modulus) ? s - r->modulus : s;
    }
    if (auto* p = std::get_if<PolyQuotientFactor>(&f))
        return encode_in(*p, poly_add(*p->field, decode_in(*p, a), decode_in(*p, b)));
    const auto& t = *std::get<TableFactor>(f).data;
    return t.add[a * t.size + b];
}

inline std::uint64_t factor_neg(const RingFactor& f, std::uint64_t a) {
    if (auto* r = std::get_if<ResidueFactor>(&f)) return a == 0 ? 0 : r->modulus - a;
    if (auto* p = std::get_if<PolyQuotientFactor>(&f)) {
        Poly x = decode_in(*p, a);
        for (auto& c : x) c = p->field->neg(c);
        return encode_in(*p, x);
    }
    return std::get<TableFactor>(f).data->neg[a];
}

inline std::uint64_t factor_mul(const RingFactor& f, std::uint64_t a, std::uint64_t b) {
    if (auto* r = std::get_if<ResidueFactor>(&f)) return mul_mod(a, b, r->modulus);
    if (auto* p = std::get_if<PolyQuotientFactor>(&f))
        return encode_in(*p, poly_mod(*p->field, poly_mul(*p->field, decode_in(*p, a), decode_in(*p, b)), p->modulus));
    const auto& t = *std::get<TableFactor>(f).data;
    return t.mul[a * t.size + b];
}

inline std::uint64_t factor_one(const RingFactor& f) {
    if (auto* t = std::get_if<TableFactor>(&f)) return t->data->one;
    return 1;
}

inline bool poly_is_bare_field(const PolyQuotientFactor& p) { return p.modulus == Poly{0, 1}; }

inline std::string factor_spec(const RingFactor& f) {
    if (auto* r = std::get_if<ResidueFactor>(&f)) return "Z/" + std::to_string(r->modulus);
    if (auto* p = std::get_if<PolyQuotientFactor>(&f)) {
        if (poly_is_bare_field(*p)) return p->field->name();
        return p->field->name() + "[t]/(" + poly_format(*p->field, p->modulus) + ")";
    }
    return std::get<TableFactor>(f).data->name;
}

inline std::string factor_format(const RingFactor& f, std::uint64_t a) {
    if (std::holds_alternative<ResidueFactor>(f)) return std::to_string(a);
    if (auto* p = std::get_if<PolyQuotientFactor>(&f)) return poly_format(*p->field, decode_in(*p, a));
    return std::get<TableFactor>(f).data->labels[a];
}

/// Generator of the ideal (a) in a polynomial quotient: gcd(a, f), or f for a = 0.
inline Poly poly_ideal_generator(const PolyQuotientFactor& p, std::uint64_t a) {
    return poly_gcd(*p.field, decode_in(p, a), p.modulus);
}

inline bool factor_divides(const RingFactor& f, std::uint64_t a, std::uint64_t b) {
    if (auto* r = std::get_if<ResidueFactor>(&f)) return b % std::gcd(a, r->modulus) == 0;
    if (auto* p = std::get_if<PolyQuotientFactor>(&f))
        return poly_mod(*p->field, decode_in(*p, b), poly_ideal_generator(*p, a)).empty();
    const auto& t = *std::get<TableFactor>(f).data;
    for (std::uint64_t q = 0; q < t.size; ++q)
        if (t.mul[q * t.size + a] == b) return true;
    return false;
}

inline bool factor_equal(const RingFactor& x, const RingFactor& y) {
    if (x.index() != y.index()) return false;
    if (auto* r = std::get_if<ResidueFactor>(&x)) return r->modulus == std::get<ResidueFactor>(y).modulus;
    if (auto* p = std::get_if<PolyQuotientFactor>(&x)) {
        const auto& o = std::get<PolyQuotientFactor>(y);
        return p->field->q() == o.field->q() && p->field->modulus() == o.field->modulus() && p->modulus == o.modulus;
    }
    const auto& a = *std::get<TableFactor>(x).data;
    const auto& b = *std::get<TableFactor>(y).data;
    return &a == &b || (a.size == b.size && a.add == b.add && a.mul == b.mul && a.labels == b.labels);
}

}  // namespace detail

class FiniteRing;

/// An element of a FiniteRing by its code. Codes are mixed radix, first factor
/// most significant, so code order is lexicographic order of coordinates.
struct RingElement {
    std::uint64_t code = 0;
    const void* owner = nullptr;

    bool operator==(const RingElement& o) const { return code == o.code; }
};

/*
 * A finite commutative ring: a nonempty product of factors, each with at least two
 * elements. Values are cheap to copy and share one immutable implementation.
 * Rings of at most 1024 elements build Cayley tables on first use.
 */
class FiniteRing {
   public:
    static constexpr std::uint64_t table_threshold = 1024;

    explicit FiniteRing(std::vector<RingFactor> factors) : impl_(std::make_shared<Impl>()) {
        if (factors.empty()) throw DomainError("a ring needs at least one factor");
        impl_->factors = std::move(factors);
        std::uint64_t size = 1;
        for (const auto& f : impl_->factors) {
            if (auto* r = std::get_if<ResidueFactor>(&f); r && r->modulus < 2)
                throw SpecError(SpecError::Kind::ModulusTooSmall, "Z/" + std::to_string(r->modulus) + ": modulus must be at least 2");
            if (auto* p = std::get_if<PolyQuotientFactor>(&f); p && poly_degree(p->modulus) < 1)
                throw SpecError(SpecError::Kind::DegenerateModulus, "polynomial modulus must have degree at least 1");
            const std::uint64_t s = detail::factor_size(f);
            if (s < 2) throw DomainError("ring factors need at least two elements");
            impl_->radix.push_back(s);
            size = checked_mul(size, s);
        }
        impl_->size = size;
        for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
            if (i > 0) impl_->spec += " x ";
            impl_->spec += detail::factor_spec(impl_->factors[i]);
        }
        impl_->one = encode_coords(one_coords());
    }

    std::uint64_t size() const noexcept { return impl_->size; }
    const std::vector<RingFactor>& factors() const noexcept { return impl_->factors; }
    std::size_t factor_count() const noexcept { return impl_->factors.size(); }
    /// Canonical spec text, e.g. "Z/4 x GF(2)[t]/(t^2)".
    const std::string& spec() const noexcept { return impl_->spec; }
    bool operator==(const FiniteRing& o) const {
        if (impl_ == o.impl_) return true;
        if (factor_count() != o.factor_count()) return false;
        for (std::size_t i = 0; i < factor_count(); ++i)
            if (!detail::factor_equal(impl_->factors[i], o.impl_->factors[i])) return false;
        return true;
    }

    /// Throws ResourceError when the carrier exceeds `max_size`.
    void require_enumerable(std::uint64_t max_size, const char* what) const {
        if (size() > max_size)
            throw ResourceError(std::string(what) + ": " + spec() + " has " + std::to_string(size()) +
                                " elements, above the bound " + std::to_string(max_size));
    }

    // --- codes ------------------------------------------------------------------
    std::uint64_t zero_code() const noexcept { return 0; }
    std::uint64_t one_code() const noexcept { return impl_->one; }

    std::vector<std::uint64_t> coords(std::uint64_t code) const {
        std::vector<std::uint64_t> out(factor_count());
        for (std::size_t i = factor_count(); i-- > 0;) {
            out[i] = code % impl_->radix[i];
            code /= impl_->radix[i];
        }
        return out;
    }
    std::uint64_t encode_coords(const std::vector<std::uint64_t>& c) const {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < factor_count(); ++i) code = code * impl_->radix[i] + c[i];
        return code;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        if (tables()) return impl_->add_table[a * size() + b];
        return pointwise(a, b, detail::factor_add);
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (tables()) return impl_->mul_table[a * size() + b];
        return pointwise(a, b, detail::factor_mul);
    }
    std::uint64_t neg(std::uint64_t a) const {
        auto c = coords(a);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::factor_neg(impl_->factors[i], c[i]);
        return encode_coords(c);
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

    bool divides(std::uint64_t a, std::uint64_t b) const {
        const auto ca = coords(a), cb = coords(b);
        for (std::size_t i = 0; i < ca.size(); ++i)
            if (!detail::factor_divides(impl_->factors[i], ca[i], cb[i])) return false;
        return true;
    }
    bool is_unit(std::uint64_t a) const { return divides(a, one_code()); }

    // --- elements ---------------------------------------------------------------
    RingElement element(std::uint64_t code) const {
        if (code >= size()) throw DomainError("element code " + std::to_string(code) + " outside " + spec());
        return {code, impl_.get()};
    }
    RingElement zero() const { return element(0); }
    RingElement one() const { return element(one_code()); }
    RingElement add(RingElement a, RingElement b) const { return element(add(own(a), own(b))); }
    RingElement mul(RingElement a, RingElement b) const { return element(mul(own(a), own(b))); }
    RingElement neg(RingElement a) const { return element(neg(own(a))); }
    RingElement sub(RingElement a, RingElement b) const { return element(sub(own(a), own(b))); }
    bool divides(RingElement a, RingElement b) const { return divides(own(a), own(b)); }
    bool is_unit(RingElement a) const { return is_unit(own(a)); }

    /// "7", "t+1", or "(3,t)" for several factors.
    std::string format(std::uint64_t code) const {
        const auto c = coords(code);
        if (c.size() == 1) return detail::factor_format(impl_->factors[0], c[0]);
        std::string out = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ",";
            out += detail::factor_format(impl_->factors[i], c[i]);
        }
        return out + ")";
    }
    std::string format(RingElement a) const { return format(own(a)); }

   private:
    struct Impl {
        std::vector<RingFactor> factors;
        std::vector<std::uint64_t> radix;
        std::uint64_t size = 0, one = 0;
        std::string spec;
        mutable std::once_flag tables_once;
        mutable std::vector<std::uint32_t> add_table, mul_table;
    };

    std::vector<std::uint64_t> one_coords() const {
        std::vector<std::uint64_t> c;
        for (const auto& f : impl_->factors) c.push_back(detail::factor_one(f));
        return c;
    }

    template <class Op>
    std::uint64_t pointwise(std::uint64_t a, std::uint64_t b, Op op) const {
        std::uint64_t out = 0, scale = 1;
        for (std::size_t i = factor_count(); i-- > 0;) {
            const std::uint64_t r = impl_->radix[i];
            out += op(impl_->factors[i], a % r, b % r) * scale;
            a /= r;
            b /= r;
            scale *= r;
        }
        return out;
    }

    bool tables() const {
        if (size() > table_threshold) return false;
        std::call_once(impl_->tables_once, [this] {
            const std::uint64_t n = size();
            std::vector<std::uint32_t> at(n * n), mt(n * n);
            for (std::uint64_t a = 0; a < n; ++a)
                for (std::uint64_t b = 0; b < n; ++b) {
                    at[a * n + b] = static_cast<std::uint32_t>(pointwise(a, b, detail::factor_add));
                    mt[a * n + b] = static_cast<std::uint32_t>(pointwise(a, b, detail::factor_mul));
                }
            impl_->add_table = std::move(at);
            impl_->mul_table = std::move(mt);
        });
        return true;
    }

    std::uint64_t own(RingElement a) const {
        if (a.owner != impl_.get() && a.owner != nullptr) {
            // equal rings built separately share codes
            const auto* other = static_cast<const Impl*>(a.owner);
            if (other->spec != impl_->spec || other->size != impl_->size)
                throw DomainError("element of " + other->spec + " used in " + spec());
        }
        if (a.code >= size()) throw DomainError("element code outside " + spec());
        return a.code;
    }

    std::shared_ptr<Impl> impl_;
};

// --- ideals ----------------------------------------------------------------------

/// A set of elements as a bitset over codes.
using ElementSet = std::vector<std::uint64_t>;

namespace detail {

inline ElementSet empty_set(std::uint64_t n) { return ElementSet((n + 63) / 64, 0); }
inline bool contains(const ElementSet& s, std::uint64_t x) { return s[x / 64] >> (x % 64) & 1; }
inline void insert(ElementSet& s, std::uint64_t x) { s[x / 64] |= std::uint64_t{1} << (x % 64); }

inline std::vector<std::uint64_t> members(const ElementSet& s, std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < n; ++x)
        if (contains(s, x)) out.push_back(x);
    return out;
}

/// I + J for ideals I, J: the union of the cosets j + I, j in J.
inline ElementSet ideal_sum(const FiniteRing& r, const ElementSet& i, const ElementSet& j) {
    ElementSet out = i;
    const auto im = members(i, r.size());
    for (std::uint64_t y = 0; y < r.size(); ++y) {
        if (!contains(j, y) || contains(out, y)) continue;
        for (auto x : im) insert(out, r.add(x, y));
    }
    return out;
}

}  // namespace detail

inline std::vector<std::uint64_t> principal_ideal(const FiniteRing& r, std::uint64_t x,
                                                  std::uint64_t max_size = default_max_size) {
    r.require_enumerable(max_size, "principal_ideal");
    auto s = detail::empty_set(r.size());
    for (std::uint64_t q = 0; q < r.size(); ++q) detail::insert(s, r.mul(q, x));
    return detail::members(s, r.size());
}

inline std::vector<std::uint64_t> principal_ideal(const FiniteRing& r, RingElement x,
                                                  std::uint64_t max_size = default_max_size) {
    return principal_ideal(r, r.mul(x, r.one()).code, max_size);
}

/*
 * The distinct principal ideals of a ring, each element's ideal, and the ideal
 * inclusion order. Every ideal of a finite ring is a sum of principal ones.
 */
class IdealLattice {
   public:
    explicit IdealLattice(const FiniteRing& r, std::uint64_t max_size = default_max_size) : ring_(r) {
        r.require_enumerable(max_size, "ideal lattice");
        const std::uint64_t n = r.size();
        std::map<ElementSet, std::size_t> seen;
        ideal_of_.resize(n);
        for (std::uint64_t x = 0; x < n; ++x) {
            auto s = detail::empty_set(n);
            for (std::uint64_t q = 0; q < n; ++q) detail::insert(s, r.mul(q, x));
            auto [it, fresh] = seen.emplace(s, principal_.size());
            if (fresh) principal_.push_back(std::move(s));
            ideal_of_[x] = it->second;
        }
    }

    const FiniteRing& ring() const noexcept { return ring_; }
    std::size_t principal_count() const noexcept { return principal_.size(); }
    std::size_t ideal_of(std::uint64_t x) const { return ideal_of_.at(x); }
    const ElementSet& principal(std::size_t i) const { return principal_.at(i); }
    bool subset(const ElementSet& a, const ElementSet& b) const {
        for (std::size_t w = 0; w < a.size(); ++w)
            if (a[w] & ~b[w]) return false;
        return true;
    }

    /// Some sum of two principal ideals is not principal, or none.
    std::optional<ElementSet> non_principal_sum() const {
        std::map<ElementSet, bool> known;
        for (const auto& p : principal_) known.emplace(p, true);
        for (std::size_t i = 0; i < principal_.size(); ++i)
            for (std::size_t j = i + 1; j < principal_.size(); ++j) {
                auto s = detail::ideal_sum(ring_, principal_[i], principal_[j]);
                if (!known.contains(s)) return s;
            }
        return std::nullopt;
    }

    bool is_principal() const { return !non_principal_sum().has_value(); }

    /// All ideals, as sorted element-code lists, ordered by size then contents.
    std::vector<std::vector<std::uint64_t>> all_ideals() const {
        std::vector<ElementSet> ideals(principal_.begin(), principal_.end());
        std::map<ElementSet, bool> known;
        for (const auto& p : ideals) known.emplace(p, true);
        for (std::size_t i = 0; i < ideals.size(); ++i)
            for (std::size_t j = 0; j < principal_.size(); ++j) {
                auto s = detail::ideal_sum(ring_, ideals[i], principal_[j]);
                if (known.emplace(s, true).second) ideals.push_back(std::move(s));
            }
        std::vector<std::vector<std::uint64_t>> out;
        for (const auto& s : ideals) out.push_back(detail::members(s, ring_.size()));
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        return out;
    }

    /// Reverse inclusion order on principal ideals: I < J iff I strictly contains J.
    /// Its length function at (x) is the longest ideal chain from (x) up to R.
    FinitePoset dual_poset() const {
        std::vector<std::string> labels;
        std::vector<FinitePoset::Cover> covers;
        for (std::size_t i = 0; i < principal_.size(); ++i) labels.push_back("I" + std::to_string(i));
        for (std::size_t i = 0; i < principal_.size(); ++i)
            for (std::size_t j = 0; j < principal_.size(); ++j)
                if (i != j && subset(principal_[j], principal_[i])) covers.emplace_back(i, j);
        return FinitePoset(std::move(labels), std::move(covers));
    }

   private:
    FiniteRing ring_;
    std::vector<ElementSet> principal_;
    std::vector<std::size_t> ideal_of_;
};

inline std::vector<std::vector<std::uint64_t>> all_ideals(const FiniteRing& r, std::uint64_t max_size = default_max_size) {
    return IdealLattice(r, max_size).all_ideals();
}

inline bool is_principal(const FiniteRing& r, std::uint64_t max_size = default_max_size) {
    return IdealLattice(r, max_size).is_principal();
}

/// l(x) for every element, indexed by code; l(0) is the length of the ring.
inline std::vector<std::uint64_t> element_lengths(const FiniteRing& r, std::uint64_t max_size = default_max_size) {
    IdealLattice lattice(r, max_size);
    if (!lattice.is_principal()) throw DomainError(r.spec() + " is not a principal ring");
    const auto lambda = length_function(lattice.dual_poset());
    std::vector<std::uint64_t> out(r.size());
    for (std::uint64_t x = 0; x < r.size(); ++x) out[x] = lambda[lattice.ideal_of(x)];
    return out;
}

inline std::uint64_t element_length(const FiniteRing& r, RingElement x, std::uint64_t max_size = default_max_size) {
    return element_lengths(r, max_size).at(r.mul(x, r.one()).code);
}

/// l(x) from factorizations, without enumerating the carrier: per residue factor
/// Z/n the sum over p^k || n of min(v_p(x), k), per polynomial factor the same
/// over the irreducible factors of the modulus. Table factors are enumerated.
inline std::uint64_t element_length_structural(const FiniteRing& r, std::uint64_t code) {
    const auto c = r.coords(code);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& f = r.factors()[i];
        if (auto* z = std::get_if<ResidueFactor>(&f)) {
            for (auto [p, k] : factorize(z->modulus))
                total += c[i] == 0 ? k : std::min<std::uint64_t>(valuation(c[i], p), k);
        } else if (auto* pq = std::get_if<PolyQuotientFactor>(&f)) {
            const GaloisField& field = *pq->field;
            const Poly x = detail::decode_in(*pq, c[i]);
            for (const auto& [g, e] : poly_factor(field, pq->modulus)) {
                std::uint64_t v = 0;
                if (x.empty()) {
                    v = e;
                } else {
                    Poly y = x;
                    while (v < e) {
                        auto [quot, rem] = poly_divmod(field, y, g);
                        if (!rem.empty()) break;
                        y = std::move(quot);
                        ++v;
                    }
                }
                total += v;
            }
        } else {
            FiniteRing single({f});
            total += element_lengths(single, single.size())[c[i]];
        }
    }
    return total;
}

// --- quotients --------------------------------------------------------------------

/*
 * R -> R/(b) computed factor by factor: Z/n -> Z/gcd(n, b), GF(q)[t]/(f) ->
 * GF(q)[t]/(gcd(f, b)), table factors by their cosets. Factors where b is a unit
 * disappear.
 */
class QuotientMap {
   public:
    QuotientMap(const FiniteRing& source, std::uint64_t b) : source_(source), target_(make(source, b)) {}

    const FiniteRing& source() const noexcept { return source_; }
    const FiniteRing& ring() const noexcept { return *target_; }

    std::uint64_t project(std::uint64_t x) const {
        const auto c = source_.coords(x);
        std::vector<std::uint64_t> out;
        for (const auto& part : parts_) {
            const auto& f = target_->factors()[out.size()];
            const std::uint64_t xi = c[part.source_factor];
            if (auto* z = std::get_if<ResidueFactor>(&f))
                out.push_back(xi % z->modulus);
            else if (auto* p = std::get_if<PolyQuotientFactor>(&f))
                out.push_back(detail::encode_in(*p, poly_mod(*p->field, detail::decode_in(*p, xi), p->modulus)));
            else
                out.push_back(part.coset_of[xi]);
        }
        return target_->encode_coords(out);
    }

    /// The least representative of a coset.
    std::uint64_t lift(std::uint64_t y) const {
        const auto c = target_->coords(y);
        std::vector<std::uint64_t> out(source_.factor_count(), 0);
        for (std::size_t k = 0; k < parts_.size(); ++k)
            out[parts_[k].source_factor] = parts_[k].coset_of.empty() ? c[k] : parts_[k].rep[c[k]];
        return source_.encode_coords(out);
    }

   private:
    struct Part {
        std::size_t source_factor;
        std::vector<std::uint64_t> coset_of, rep;  // table factors only
    };

    std::optional<FiniteRing> make(const FiniteRing& r, std::uint64_t b) {
        if (b >= r.size()) throw DomainError("element code outside " + r.spec());
        const auto c = r.coords(b);
        std::vector<RingFactor> out;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const auto& f = r.factors()[i];
            if (auto* z = std::get_if<ResidueFactor>(&f)) {
                const std::uint64_t d = std::gcd(z->modulus, c[i]);
                if (d == 1) continue;
                out.push_back(ResidueFactor{d});
                parts_.push_back({i, {}, {}});
            } else if (auto* p = std::get_if<PolyQuotientFactor>(&f)) {
                Poly g = detail::poly_ideal_generator(*p, c[i]);
                if (poly_degree(g) < 1) continue;
                out.push_back(PolyQuotientFactor{p->field, std::move(g)});
                parts_.push_back({i, {}, {}});
            } else {
                auto [factor, part] = table_quotient(std::get<TableFactor>(f), c[i], i);
                if (!factor) continue;
                out.push_back(*factor);
                parts_.push_back(std::move(part));
            }
        }
        if (out.empty())
            throw DomainError("quotient of " + r.spec() + " by the unit " + r.format(b) + " has one element");
        return FiniteRing(std::move(out));
    }

    static std::pair<std::optional<TableFactor>, Part> table_quotient(const TableFactor& tf, std::uint64_t b,
                                                                     std::size_t index) {
        const TableData& t = *tf.data;
        std::vector<std::uint64_t> ideal;
        for (std::uint64_t q = 0; q < t.size; ++q) ideal.push_back(t.mul[q * t.size + b]);
        std::sort(ideal.begin(), ideal.end());
        ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
        Part part{index, std::vector<std::uint64_t>(t.size, t.size), {}};
        for (std::uint64_t x = 0; x < t.size; ++x) {
            if (part.coset_of[x] != t.size) continue;
            for (auto i : ideal) part.coset_of[t.add[x * t.size + i]] = part.rep.size();
            part.rep.push_back(x);
        }
        const std::uint64_t n = part.rep.size();
        if (n < 2) return {std::nullopt, std::move(part)};
        auto data = std::make_shared<TableData>();
        data->name = t.name + "/(" + t.labels[b] + ")";
        data->size = n;
        data->add.resize(n * n);
        data->mul.resize(n * n);
        data->neg.resize(n);
        for (std::uint64_t x = 0; x < n; ++x) {
            data->labels.push_back("[" + t.labels[part.rep[x]] + "]");
            data->neg[x] = static_cast<std::uint32_t>(part.coset_of[t.neg[part.rep[x]]]);
            for (std::uint64_t y = 0; y < n; ++y) {
                data->add[x * n + y] = static_cast<std::uint32_t>(part.coset_of[t.add[part.rep[x] * t.size + part.rep[y]]]);
                data->mul[x * n + y] = static_cast<std::uint32_t>(part.coset_of[t.mul[part.rep[x] * t.size + part.rep[y]]]);
            }
        }
        data->one = static_cast<std::uint32_t>(part.coset_of[t.one]);
        return {TableFactor{std::move(data)}, std::move(part)};
    }

    FiniteRing source_;
    std::vector<Part> parts_;
    std::optional<FiniteRing> target_;
};

inline QuotientMap quotient_ring(const FiniteRing& r, RingElement b) { return QuotientMap(r, r.mul(b, r.one()).code); }

// --- CRT decomposition -------------------------------------------------------------

/*
 * R as a product of local factors: Z/n splits into its Z/p^k, GF(q)[t]/(f) into
 * the GF(q)[t]/(g^e) for g^e || f. Table factors are kept whole and must be local.
 */
class CrtDecomposition {
   public:
    explicit CrtDecomposition(const FiniteRing& r, std::uint64_t max_size = default_max_size) : source_(r) {
        std::vector<RingFactor> out;
        for (std::size_t i = 0; i < r.factor_count(); ++i) {
            const auto& f = r.factors()[i];
            Split s{i, {}, {}, {}};
            if (auto* z = std::get_if<ResidueFactor>(&f)) {
                for (auto [p, k] : factorize(z->modulus)) {
                    const std::uint64_t m = checked_pow(p, k);
                    out.push_back(ResidueFactor{m});
                    const std::uint64_t rest = z->modulus / m;
                    s.residue_idempotents.push_back(mul_mod(rest, inverse_mod(rest % m, m), z->modulus));
                }
            } else if (auto* p = std::get_if<PolyQuotientFactor>(&f)) {
                const GaloisField& field = *p->field;
                for (const auto& [g, e] : poly_factor(field, p->modulus)) {
                    Poly m{1};
                    for (std::uint32_t j = 0; j < e; ++j) m = poly_mul(field, m, g);
                    out.push_back(PolyQuotientFactor{p->field, m});
                    const Poly rest = poly_divmod(field, p->modulus, m).first;
                    const Poly inv = poly_bezout(field, poly_mod(field, rest, m), m).first;
                    s.poly_idempotents.push_back(poly_mod(field, poly_mul(field, rest, inv), p->modulus));
                }
            } else {
                FiniteRing single({f});
                if (!IdealLattice(single, max_size).is_principal())
                    throw DomainError(r.spec() + " is not a principal ring");
                out.push_back(f);
                s.whole = true;
            }
            splits_.push_back(std::move(s));
        }
        target_.emplace(std::move(out));
    }

    const FiniteRing& source() const noexcept { return source_; }
    /// The product of local factors.
    const FiniteRing& local_ring() const noexcept { return *target_; }

    std::uint64_t forward(std::uint64_t x) const {
        const auto c = source_.coords(x);
        std::vector<std::uint64_t> out;
        for (const auto& s : splits_) {
            const std::size_t parts = s.whole ? 1 : std::max(s.residue_idempotents.size(), s.poly_idempotents.size());
            for (std::size_t k = 0; k < parts; ++k) {
                const auto& f = target_->factors()[out.size()];
                if (auto* z = std::get_if<ResidueFactor>(&f))
                    out.push_back(c[s.source_factor] % z->modulus);
                else if (auto* p = std::get_if<PolyQuotientFactor>(&f))
                    out.push_back(detail::encode_in(
                        *p, poly_mod(*p->field, poly_decode(c[s.source_factor], p->field->q()), p->modulus)));
                else
                    out.push_back(c[s.source_factor]);
            }
        }
        return target_->encode_coords(out);
    }

    std::uint64_t backward(std::uint64_t y) const {
        const auto c = target_->coords(y);
        std::vector<std::uint64_t> out(source_.factor_count());
        std::size_t k = 0;
        for (const auto& s : splits_) {
            const auto& f = source_.factors()[s.source_factor];
            if (s.whole) {
                out[s.source_factor] = c[k++];
            } else if (auto* z = std::get_if<ResidueFactor>(&f)) {
                std::uint64_t acc = 0;
                for (auto e : s.residue_idempotents) acc = (acc + mul_mod(c[k++], e, z->modulus)) % z->modulus;
                out[s.source_factor] = acc;
            } else {
                const auto& p = std::get<PolyQuotientFactor>(f);
                Poly acc;
                for (const auto& e : s.poly_idempotents)
                    acc = poly_add(*p.field, acc, poly_mul(*p.field, poly_decode(c[k++], p.field->q()), e));
                out[s.source_factor] = detail::encode_in(p, poly_mod(*p.field, acc, p.modulus));
            }
        }
        return source_.encode_coords(out);
    }

   private:
    struct Split {
        std::size_t source_factor;
        std::vector<std::uint64_t> residue_idempotents;
        std::vector<Poly> poly_idempotents;
        bool whole = false;
    };

    FiniteRing source_;
    std::vector<Split> splits_;
    std::optional<FiniteRing> target_;
};

inline CrtDecomposition crt_decompose(const FiniteRing& r, std::uint64_t max_size = default_max_size) {
    return CrtDecomposition(r, max_size);
}

// --- fixtures ------------------------------------------------------------------------

/// GF(p)[x,y]/(x,y)^n as a table ring, labels like "1+x+xy". Not principal for n >= 2.
inline FiniteRing truncated_bivariate(std::uint32_t p, std::uint32_t n, std::uint64_t max_size = default_max_size) {
    if (!is_prime(p)) throw SpecError(SpecError::Kind::NotPrimePower, "GF(" + std::to_string(p) + ")[x,y]: p must be prime");
    if (n < 1) throw SpecError(SpecError::Kind::DegenerateModulus, "(x,y)^0 is the unit ideal");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> mono;  // (i, j) for x^i y^j
    for (std::uint32_t d = 0; d < n; ++d)
        for (std::uint32_t i = d + 1; i-- > 0;) mono.emplace_back(i, d - i);
    const std::uint64_t size = checked_pow(p, static_cast<std::uint32_t>(mono.size()));
    if (size > max_size)
        throw ResourceError("GF(" + std::to_string(p) + ")[x,y]/(x,y)^" + std::to_string(n) + " has " +
                            std::to_string(size) + " elements, above the bound " + std::to_string(max_size));
    auto digits = [&](std::uint64_t code) {
        std::vector<std::uint32_t> d(mono.size());
        for (auto& c : d) {
            c = static_cast<std::uint32_t>(code % p);
            code /= p;
        }
        return d;
    };
    auto encode = [&](const std::vector<std::uint32_t>& d) {
        std::uint64_t code = 0;
        for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
        return code;
    };
    auto index_of = [&](std::uint32_t i, std::uint32_t j) -> std::optional<std::size_t> {
        for (std::size_t k = 0; k < mono.size(); ++k)
            if (mono[k] == std::pair{i, j}) return k;
        return std::nullopt;
    };
    auto data = std::make_shared<TableData>();
    data->name = "GF(" + std::to_string(p) + ")[x,y]/(x,y)^" + std::to_string(n);
    data->size = size;
    data->add.resize(size * size);
    data->mul.resize(size * size);
    data->neg.resize(size);
    for (std::uint64_t a = 0; a < size; ++a) {
        const auto da = digits(a);
        std::vector<std::uint32_t> dn(mono.size());
        for (std::size_t k = 0; k < mono.size(); ++k) dn[k] = (p - da[k]) % p;
        data->neg[a] = static_cast<std::uint32_t>(encode(dn));
        for (std::uint64_t b = 0; b < size; ++b) {
            const auto db = digits(b);
            std::vector<std::uint32_t> ds(mono.size()), dm(mono.size(), 0);
            for (std::size_t k = 0; k < mono.size(); ++k) ds[k] = (da[k] + db[k]) % p;
            for (std::size_t u = 0; u < mono.size(); ++u)
                for (std::size_t v = 0; v < mono.size(); ++v) {
                    if (!da[u] || !db[v]) continue;
                    if (auto w = index_of(mono[u].first + mono[v].first, mono[u].second + mono[v].second))
                        dm[*w] = (dm[*w] + da[u] * db[v]) % p;
                }
            data->add[a * size + b] = static_cast<std::uint32_t>(encode(ds));
            data->mul[a * size + b] = static_cast<std::uint32_t>(encode(dm));
        }
        std::string label;
        for (std::size_t k = 0; k < mono.size(); ++k) {
            if (!da[k]) continue;
            auto [i, j] = mono[k];
            std::string m;
            if (i) m += "x" + (i > 1 ? "^" + std::to_string(i) : std::string());
            if (j) m += "y" + (j > 1 ? "^" + std::to_string(j) : std::string());
            if (m.empty())
                m = std::to_string(da[k]);
            else if (da[k] != 1)
                m = std::to_string(da[k]) + m;
            label += (label.empty() ? "" : "+") + m;
        }
        data->labels.push_back(label.empty() ? "0" : label);
    }
    data->one = 1;
    return FiniteRing({TableFactor{std::move(data)}});
}

}  // namespace euclid

#endif
