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

#ifndef EUCLID_ORDINAL_PARSE_HPP
#define EUCLID_ORDINAL_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "error.hpp"
#include "ordinal.hpp"

namespace euclid {

/*
 * Ordinal expression grammar (whitespace is ignored):
 *
 *     sum     := operand (('+' | '#') operand)*          left associative
 *     operand := '(' '-' sum ')' '+' product             left subtraction (-a)+b
 *              | product
 *     product := power (('*' | '.') power)*             left associative
 *     power   := atom ('^' power)?                       right associative, base must be w
 *     atom    := NUMBER | 'w' | 'ω' | '(' sum ')'
 *
 * '+' is the ordinal sum, '#' the natural sum, '*' the standard product (w*2 = w + w)
 * and '.' the juxtaposition product (2.w = w + w).
 */
class OrdinalParser {
   public:
    explicit OrdinalParser(std::string_view src, int max_depth = 32) : src_(src), max_depth_(max_depth) {}

    Ordinal parse() {
        skip_ws();
        if (pos_ == src_.size()) throw SyntaxError("empty ordinal expression", pos_);
        Ordinal out = parse_sum();
        skip_ws();
        if (pos_ != src_.size()) throw SyntaxError(std::string("unexpected '") + src_[pos_] + "'", pos_);
        return out;
    }

   private:
    struct DepthGuard {
        explicit DepthGuard(OrdinalParser& p) : p_(p) {
            if (++p_.depth_ > p_.max_depth_)
                throw ResourceError("ordinal expression nested deeper than " + std::to_string(p_.max_depth_));
        }
        ~DepthGuard() { --p_.depth_; }
        OrdinalParser& p_;
    };

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ == src_.size()) throw SyntaxError(std::string("expected '") + c + "' before end of input", pos_);
            throw SyntaxError(std::string("expected '") + c + "'", pos_);
        }
    }

    bool at_left_subtraction() {
        if (!peek('(')) return false;
        std::size_t p = pos_ + 1;
        while (p < src_.size() && std::isspace(static_cast<unsigned char>(src_[p]))) ++p;
        return p < src_.size() && src_[p] == '-';
    }

    Ordinal parse_sum() {
        Ordinal acc = parse_operand();
        for (;;) {
            if (accept('+')) {
                acc = add(acc, parse_operand());
            } else if (accept('#')) {
                acc = natural_sum(acc, parse_operand());
            } else {
                return acc;
            }
        }
    }

    Ordinal parse_operand() {
        if (!at_left_subtraction()) return parse_product();
        DepthGuard guard(*this);
        expect('(');
        expect('-');
        Ordinal subtrahend = parse_sum();
        expect(')');
        if (!accept('+')) throw SyntaxError("left subtraction (-a) must be followed by '+'", pos_);
        return left_subtract(subtrahend, parse_product());
    }

    Ordinal parse_product() {
        Ordinal acc = parse_power();
        for (;;) {
            if (accept('*')) {
                acc = standard_product(acc, parse_power());
            } else if (accept('.')) {
                acc = mul(acc, parse_power());
            } else {
                return acc;
            }
        }
    }

    Ordinal parse_power() {
        skip_ws();
        const std::size_t base_pos = pos_;
        Ordinal base = parse_atom();
        if (!accept('^')) return base;
        if (base != Ordinal::omega())
            throw DomainError("only powers of w are supported (base at position " + std::to_string(base_pos) + ")");
        DepthGuard guard(*this);
        return Ordinal::omega_power(parse_power());
    }

    Ordinal parse_atom() {
        skip_ws();
        if (pos_ == src_.size()) throw SyntaxError("unexpected end of input", pos_);
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return Ordinal(parse_number());
        if (c == 'w') {
            ++pos_;
            return Ordinal::omega();
        }
        if (src_.substr(pos_, 2) == "\xCF\x89") {
            pos_ += 2;
            return Ordinal::omega();
        }
        if (c == '(') {
            if (at_left_subtraction()) throw SyntaxError("left subtraction (-a)+b is only allowed as a summand", pos_);
            DepthGuard guard(*this);
            ++pos_;
            Ordinal inner = parse_sum();
            expect(')');
            return inner;
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
    }

    std::uint64_t parse_number() {
        std::uint64_t n = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            n = checked_add(checked_mul(n, 10), static_cast<std::uint64_t>(src_[pos_] - '0'));
            ++pos_;
        }
        return n;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int depth_ = 0;
    int max_depth_;
};

inline Ordinal parse_ordinal(std::string_view src, int max_depth = 32) { return OrdinalParser(src, max_depth).parse(); }

}  // namespace euclid

#endif
