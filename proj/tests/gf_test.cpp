#include "euclid/galois.hpp"

#include <gtest/gtest.h>

#include <random>

using euclid::GaloisField;
using euclid::Poly;

namespace {

// Irreducible iff no product of two monic polynomials of positive degree equals m.
bool irreducible_by_products(std::uint32_t p, const Poly& m) {
    auto f = GaloisField::make(p);
    const int n = euclid::poly_degree(m);
    for (int d = 1; d < n; ++d) {
        const auto ca = euclid::checked_pow(p, static_cast<std::uint32_t>(d));
        const auto cb = euclid::checked_pow(p, static_cast<std::uint32_t>(n - d));
        for (std::uint64_t x = 0; x < ca; ++x)
            for (std::uint64_t y = 0; y < cb; ++y)
                if (euclid::poly_mul(*f, euclid::monic_from_code(x, d, p), euclid::monic_from_code(y, n - d, p)) == m)
                    return false;
    }
    return true;
}

Poly random_poly(std::mt19937_64& rng, std::uint32_t q, int max_deg) {
    Poly a(static_cast<std::size_t>(rng() % (max_deg + 1)) + 1);
    for (auto& c : a) c = static_cast<std::uint32_t>(rng() % q);
    euclid::poly_trim(a);
    return a;
}

}  // namespace

TEST(GaloisField, FieldAxiomsExhaustive) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
        auto f = GaloisField::make(q);
        ASSERT_EQ(f->q(), q);
        for (std::uint32_t a = 0; a < q; ++a) {
            EXPECT_EQ(f->add(a, 0), a);
            EXPECT_EQ(f->mul(a, 1), a);
            EXPECT_EQ(f->add(a, f->neg(a)), 0u);
            if (a) {
                EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
            }
            for (std::uint32_t b = 0; b < q; ++b) {
                EXPECT_EQ(f->mul(a, b), f->mul(b, a));
                EXPECT_EQ(f->add(a, b), f->add(b, a));
                if (a && b) {
                    EXPECT_NE(f->mul(a, b), 0u);
                }
                for (std::uint32_t c = 0; c < q; c += 1 + q / 5)
                    EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            }
        }
        EXPECT_THROW(f->inv(0), euclid::DomainError);
    }
}

TEST(GaloisField, DefaultModulusIsLeastIrreducible) {
    for (std::uint64_t q : {4, 8, 9, 16, 27, 25, 32}) {
        auto f = GaloisField::make(q);
        const std::uint32_t p = f->p(), k = f->k();
        for (std::uint64_t lower = 0;; ++lower) {
            Poly m = euclid::monic_from_code(lower, static_cast<int>(k), p);
            if (irreducible_by_products(p, m)) {
                EXPECT_EQ(f->modulus(), m) << q;
                break;
            }
        }
    }
    EXPECT_EQ(GaloisField::make(4)->name(), "GF(4)");
    EXPECT_EQ(GaloisField::make(4)->format(2), "a");
    EXPECT_EQ(GaloisField::make(4)->format(3), "a+1");
}

TEST(GaloisField, RejectsBadOrders) {
    try {
        GaloisField::make(6);
        FAIL();
    } catch (const euclid::SpecError& e) {
        EXPECT_EQ(e.kind(), euclid::SpecError::Kind::NotPrimePower);
    }
    try {
        GaloisField::make(4, Poly{1, 0, 1});  // a^2 + 1 = (a + 1)^2
        FAIL();
    } catch (const euclid::SpecError& e) {
        EXPECT_EQ(e.kind(), euclid::SpecError::Kind::ReducibleModulus);
    }
    auto alt = GaloisField::make(9, Poly{2, 2, 1});  // a^2 + 2a + 2
    EXPECT_FALSE(alt->has_default_modulus());
    EXPECT_EQ(alt->name(), "GF(9,a^2+2a+2)");
}

TEST(Polynomials, DivisionIdentity) {
    std::mt19937_64 rng(5);
    for (std::uint64_t q : {2, 3, 4, 5, 9}) {
        auto f = GaloisField::make(q);
        for (int i = 0; i < 300; ++i) {
            Poly a = random_poly(rng, f->q(), 8), b = random_poly(rng, f->q(), 4);
            if (b.empty()) continue;
            auto [quot, rem] = euclid::poly_divmod(*f, a, b);
            EXPECT_LT(euclid::poly_degree(rem), euclid::poly_degree(b));
            EXPECT_EQ(euclid::poly_add(*f, euclid::poly_mul(*f, quot, b), rem), a);

            Poly g = euclid::poly_gcd(*f, a, b);
            EXPECT_TRUE(euclid::poly_mod(*f, a, g).empty());
            EXPECT_TRUE(euclid::poly_mod(*f, b, g).empty());
            auto [s, t] = euclid::poly_bezout(*f, a, b);
            EXPECT_EQ(euclid::poly_add(*f, euclid::poly_mul(*f, s, a), euclid::poly_mul(*f, t, b)), g);
        }
    }
}

TEST(Polynomials, FactorizationMultipliesBack) {
    std::mt19937_64 rng(9);
    for (std::uint64_t q : {2, 3, 4}) {
        auto f = GaloisField::make(q);
        for (int i = 0; i < 200; ++i) {
            Poly a = random_poly(rng, f->q(), 9);
            if (a.empty()) continue;
            Poly prod{1};
            for (const auto& [g, e] : euclid::poly_factor(*f, a)) {
                EXPECT_TRUE(euclid::poly_is_irreducible(*f, g));
                EXPECT_EQ(g.back(), 1u);
                for (std::uint32_t j = 0; j < e; ++j) prod = euclid::poly_mul(*f, prod, g);
            }
            EXPECT_EQ(prod, euclid::poly_monic(*f, a));
        }
    }
    auto f2 = GaloisField::make(2);
    auto fac = euclid::poly_factor(*f2, Poly{0, 1, 1});  // t^2 + t
    ASSERT_EQ(fac.size(), 2u);
    EXPECT_EQ(fac[0].irreducible, (Poly{0, 1}));
    EXPECT_EQ(fac[1].irreducible, (Poly{1, 1}));
}

TEST(Polynomials, IrreducibilityMatchesProductOracle) {
    for (std::uint32_t p : {2u, 3u}) {
        auto f = GaloisField::make(p);
        for (int d = 1; d <= 4; ++d)
            for (std::uint64_t lower = 0; lower < euclid::checked_pow(p, static_cast<std::uint32_t>(d)); ++lower) {
                Poly m = euclid::monic_from_code(lower, d, p);
                EXPECT_EQ(euclid::poly_is_irreducible(*f, m), irreducible_by_products(p, m));
            }
    }
}

TEST(Polynomials, Format) {
    auto f2 = GaloisField::make(2);
    EXPECT_EQ(euclid::poly_format(*f2, Poly{1, 1, 1}), "t^2+t+1");
    EXPECT_EQ(euclid::poly_format(*f2, Poly{}), "0");
    auto f4 = GaloisField::make(4);
    EXPECT_EQ(euclid::poly_format(*f4, Poly{3, 2}), "a*t+a+1");
    auto f3 = GaloisField::make(3);
    EXPECT_EQ(euclid::poly_format(*f3, Poly{2, 0, 1}), "t^2+2");
}
