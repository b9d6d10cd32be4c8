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

#ifndef EUCLID_RING_PARSE_HPP
#define EUCLID_RING_PARSE_HPP

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "error.hpp"
#include "galois.hpp"
#include "ring.hpp"

namespace euclid {

/// An infinite principal ideal domain factor: Z or GF(q)[t].
struct PidFactor {
    enum class Kind { Integers, Polynomials };
    Kind kind = Kind::Integers;
    std::shared_ptr<const GaloisField> field;  // Polynomials only

    std::string spec() const { return kind == Kind::Integers ? "Z" : field->name() + "[t]"; }
    bool operator==(const PidFactor& o) const {
        if (kind != o.kind) return false;
        return kind == Kind::Integers ||
               (field->q() == o.field->q() && field->modulus() == o.field->modulus());
    }
};

using ParsedFactor = std::variant<RingFactor, PidFactor>;

namespace detail {

/*
 * Polynomial expressions over a finite field:
 *
 *     expr   := ['-'] term (('+' | '-') term)*
 *     term   := factor (['*'] factor)*
 *     factor := atom ('^' NUMBER)?
 *     atom   := NUMBER | VAR | '(' expr ')'
 *
 * NUMBER is reduced mod p. VAR is the polynomial variable, or 'a' for the
 * generator of a non-prime field.
 */
class PolyParser {
   public:
    /// `var` is the polynomial variable ('t' or 'a', or 0 for constants only).
    PolyParser(std::string_view src, std::size_t offset, const GaloisField& field, char var)
        : src_(src), offset_(offset), f_(field), var_(var) {}

    Poly parse() {
        skip_ws();
        if (pos_ == src_.size()) fail("empty polynomial");
        Poly out = expr();
        skip_ws();
        if (pos_ != src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
        return out;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, offset_ + pos_); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool starts_atom() {
        skip_ws();
        if (pos_ >= src_.size()) return false;
        const char c = src_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'a' || c == '(';
    }

    std::uint64_t number() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) fail("expected a number");
        std::uint64_t v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = checked_add(checked_mul(v, 10), static_cast<std::uint64_t>(src_[pos_] - '0'));
            ++pos_;
        }
        return v;
    }

    Poly constant(std::uint32_t c) {
        Poly p{c};
        poly_trim(p);
        return p;
    }

    Poly expr() {
        bool negate = accept('-');
        Poly acc = term();
        if (negate) acc = poly_sub(f_, {}, acc);
        for (;;) {
            if (accept('+'))
                acc = poly_add(f_, acc, term());
            else if (accept('-'))
                acc = poly_sub(f_, acc, term());
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (accept('*'))
                acc = poly_mul(f_, acc, factor());
            else if (starts_atom())
                acc = poly_mul(f_, acc, factor());
            else
                return acc;
        }
    }

    Poly factor() {
        Poly base = atom();
        if (!accept('^')) return base;
        const std::uint64_t e = number();
        if (e > 4096) fail("exponent too large");
        Poly out{1};
        for (std::uint64_t i = 0; i < e; ++i) out = poly_mul(f_, out, base);
        return out;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of polynomial");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return constant(static_cast<std::uint32_t>(number() % f_.p()));
        if (c == var_ && var_ != 0) {
            ++pos_;
            return Poly{0, 1};
        }
        if (c == 'a') {
            if (f_.is_prime_field()) fail("the field generator a needs a non-prime field");
            ++pos_;
            return constant(f_.p());
        }
        if (c == 't') fail("variable t not allowed here");
        if (accept('(')) {
            Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view src_;
    std::size_t offset_;
    std::size_t pos_ = 0;
    const GaloisField& f_;
    char var_;
};

/*
 * Ring spec grammar:
 *
 *     spec   := factor (('x' | '×') factor)*
 *     factor := 'Z' ['/' NUMBER]
 *             | field ['[t]' ['/(' poly ')'] | '[x,y]/(x,y)^' NUMBER]
 *     field  := 'GF(' NUMBER [',' poly-in-a] ')'
 */
class SpecParser {
   public:
    explicit SpecParser(std::string_view src) : src_(src) {}

    std::vector<ParsedFactor> parse() {
        skip_ws();
        if (pos_ == src_.size()) throw SyntaxError("empty ring spec", pos_);
        std::vector<ParsedFactor> out;
        out.push_back(factor());
        for (;;) {
            skip_ws();
            if (pos_ == src_.size()) return out;
            if (src_[pos_] == 'x') {
                ++pos_;
            } else if (src_.substr(pos_, 2) == "\xC3\x97") {
                pos_ += 2;
            } else {
                throw SyntaxError(std::string("expected 'x' between factors, found '") + src_[pos_] + "'", pos_);
            }
            out.push_back(factor());
        }
    }

   private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(std::string_view tok) {
        skip_ws();
        if (src_.substr(pos_, tok.size()) != tok) return false;
        pos_ += tok.size();
        return true;
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) throw SyntaxError("expected '" + std::string(tok) + "'", pos_);
    }

    std::uint64_t number() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw SyntaxError("expected a number", pos_);
        std::uint64_t v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = checked_add(checked_mul(v, 10), static_cast<std::uint64_t>(src_[pos_] - '0'));
            ++pos_;
        }
        return v;
    }

    /// Text up to the parenthesis matching an already consumed '('.
    std::pair<std::string_view, std::size_t> balanced() {
        const std::size_t start = pos_;
        int depth = 1;
        while (pos_ < src_.size()) {
            if (src_[pos_] == '(') ++depth;
            if (src_[pos_] == ')' && --depth == 0) {
                auto inner = src_.substr(start, pos_ - start);
                ++pos_;
                return {inner, start};
            }
            ++pos_;
        }
        throw SyntaxError("unbalanced '('", start);
    }

    ParsedFactor factor() {
        skip_ws();
        const std::size_t at = pos_;
        if (accept("GF")) return field_factor();
        if (accept("Z")) {
            if (!accept("/")) return PidFactor{PidFactor::Kind::Integers, nullptr};
            const std::uint64_t n = number();
            if (n < 2)
                throw SpecError(SpecError::Kind::ModulusTooSmall, "Z/" + std::to_string(n) + ": modulus must be at least 2");
            return RingFactor{ResidueFactor{n}};
        }
        throw SyntaxError("expected a ring factor (Z, Z/n or GF(q)...)", at);
    }

    ParsedFactor field_factor() {
        expect("(");
        const std::uint64_t q = number();
        std::shared_ptr<const GaloisField> field;
        if (accept(",")) {
            auto [text, offset] = balanced();
            auto prime = GaloisField::make(as_prime_power(q) ? as_prime_power(q)->prime : q);
            Poly m = PolyParser(text, offset, *prime, 'a').parse();
            field = GaloisField::make(q, m);
        } else {
            expect(")");
            field = GaloisField::make(q);
        }
        if (accept("[t]")) {
            if (!accept("/")) return PidFactor{PidFactor::Kind::Polynomials, field};
            expect("(");
            auto [text, offset] = balanced();
            Poly f = PolyParser(text, offset, *field, 't').parse();
            if (poly_degree(f) < 1)
                throw SpecError(SpecError::Kind::DegenerateModulus,
                                "GF(" + std::to_string(q) + ")[t]/(" + std::string(text) + "): modulus must have degree at least 1");
            return RingFactor{PolyQuotientFactor{field, poly_monic(*field, f)}};
        }
        if (accept("[x,y]")) {
            if (!field->is_prime_field()) throw DomainError("GF(q)[x,y] fixtures need a prime field");
            expect("/");
            expect("(x,y)^");
            const std::uint64_t n = number();
            return RingFactor{truncated_bivariate(field->p(), static_cast<std::uint32_t>(n), 1u << 20).factors()[0]};
        }
        return RingFactor{PolyQuotientFactor{field, Poly{0, 1}}};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

/// Split at top-level commas.
inline std::vector<std::pair<std::string_view, std::size_t>> split_tuple(std::string_view s, std::size_t offset) {
    std::vector<std::pair<std::string_view, std::size_t>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            out.emplace_back(s.substr(start, i - start), offset + start);
            start = i + 1;
        } else if (s[i] == '(' || s[i] == '[') {
            ++depth;
        } else if (s[i] == ')' || s[i] == ']') {
            --depth;
        }
    }
    return out;
}

inline std::string strip(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

inline std::uint64_t parse_factor_element(const RingFactor& f, std::string_view text, std::size_t offset) {
    if (auto* z = std::get_if<ResidueFactor>(&f)) {
        std::string s = strip(text);
        bool negative = !s.empty() && s[0] == '-';
        if (negative) s.erase(0, 1);
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw SyntaxError("expected an integer for Z/" + std::to_string(z->modulus), offset);
        std::uint64_t v = 0;
        for (char c : s) v = (mul_mod(v, 10, z->modulus) + static_cast<std::uint64_t>(c - '0')) % z->modulus;
        return negative && v ? z->modulus - v : v;
    }
    if (auto* p = std::get_if<PolyQuotientFactor>(&f)) {
        Poly x = PolyParser(text, offset, *p->field, poly_is_bare_field(*p) ? 0 : 't').parse();
        return encode_in(*p, poly_mod(*p->field, x, p->modulus));
    }
    const auto& t = *std::get<TableFactor>(f).data;
    const std::string s = strip(text);
    for (std::uint64_t i = 0; i < t.size; ++i)
        if (strip(t.labels[i]) == s) return i;
    throw SyntaxError("no element '" + s + "' in " + t.name, offset);
}

}  // namespace detail

inline std::vector<ParsedFactor> parse_ring_factors(std::string_view src) { return detail::SpecParser(src).parse(); }

/// A spec whose factors are all finite, e.g. "Z/4 x GF(2)[t]/(t^2)".
inline FiniteRing parse_finite_ring(std::string_view src) {
    std::vector<RingFactor> factors;
    for (auto& f : parse_ring_factors(src)) {
        if (auto* pid = std::get_if<PidFactor>(&f))
            throw DomainError("'" + pid->spec() + "' is infinite; a finite ring spec is required here");
        factors.push_back(std::get<RingFactor>(std::move(f)));
    }
    return FiniteRing(std::move(factors));
}

/// "7", "t+1", "(3,t^2)", or a table label; integers may be negative.
inline std::uint64_t parse_element(const FiniteRing& r, std::string_view text) {
    if (r.factor_count() == 1) return detail::parse_factor_element(r.factors()[0], text, 0);
    std::size_t b = text.find_first_not_of(" \t");
    std::size_t e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos || text[b] != '(' || text[e] != ')')
        throw SyntaxError("expected a tuple '(...)' for an element of " + r.spec(), b == std::string_view::npos ? 0 : b);
    auto parts = detail::split_tuple(text.substr(b + 1, e - b - 1), b + 1);
    if (parts.size() != r.factor_count())
        throw SyntaxError("expected " + std::to_string(r.factor_count()) + " coordinates for an element of " + r.spec(), b);
    std::vector<std::uint64_t> c;
    for (std::size_t i = 0; i < parts.size(); ++i)
        c.push_back(detail::parse_factor_element(r.factors()[i], parts[i].first, parts[i].second));
    return r.encode_coords(c);
}

}  // namespace euclid

#endif
