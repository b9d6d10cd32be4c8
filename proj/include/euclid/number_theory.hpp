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

#ifndef EUCLID_NUMBER_THEORY_HPP
#define EUCLID_NUMBER_THEORY_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace euclid {

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;

    bool operator==(const PrimePower&) const = default;
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw ResourceError("natural number overflow in addition");
    return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("natural number overflow in multiplication");
    return out;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exponent) {
    std::uint64_t out = 1;
    for (std::uint32_t i = 0; i < exponent; ++i) out = checked_mul(out, base);
    return out;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Trial-division factorization, primes ascending. factorize(1) is empty.
inline std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("cannot factor zero");
    std::vector<PrimePower> out;
    for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        std::uint32_t k = 0;
        while (n % d == 0) {
            n /= d;
            ++k;
        }
        out.push_back({d, k});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline std::optional<PrimePower> as_prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    auto f = factorize(n);
    if (f.size() != 1) return std::nullopt;
    return f.front();
}

/// p-adic valuation of a nonzero integer.
inline std::uint32_t valuation(std::uint64_t n, std::uint64_t p) {
    std::uint32_t k = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    __int128 t = 0, new_t = 1;
    __int128 r = static_cast<__int128>(m), new_r = static_cast<__int128>(a % m);
    while (new_r != 0) {
        __int128 q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw DomainError("element is not invertible modulo " + std::to_string(m));
    if (t < 0) t += static_cast<__int128>(m);
    return static_cast<std::uint64_t>(t);
}

}  // namespace euclid

#endif
