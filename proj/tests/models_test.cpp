#include "euclid/models.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <random>

using namespace euclid;

namespace {

Ordinal w() { return Ordinal::omega(); }

Ordinal order_of(const std::string& s) { return order_type_of_spec(std::get<RingSpec>(parse_ring_spec(s))); }

}  // namespace

TEST(IntegerModel, BottomIsBitLengthMinusOne) {
    auto res = windowed_bottom_integers();
    ASSERT_EQ(res.values.size(), 1025u);
    for (std::uint64_t n = 1; n <= 1024; ++n) EXPECT_EQ(res.values[n] + 1, std::bit_width(n)) << n;
    EXPECT_TRUE(res.certificate.witnesses_below);
    EXPECT_EQ(res.certificate.final_window, 2 * res.certificate.previous_window);
    EXPECT_GE(res.certificate.previous_window, 1024u);
}

TEST(IntegerModel, SmallWindowsAgree) {
    auto big = windowed_bottom_integers(64, 8);
    for (std::uint64_t n = 1; n <= 64; ++n) EXPECT_EQ(big.values[n], std::bit_width(n) - 1u);
    EXPECT_THROW(windowed_bottom_integers(64, 8, 32), ResourceError);
    EXPECT_THROW(windowed_bottom_integers(64, 1), DomainError);
}

TEST(PolynomialModel, BottomIsDegreeOverGF2) {
    auto res = windowed_bottom_polynomials(2);
    ASSERT_EQ(res.values.size(), 2048u);
    for (std::uint64_t c = 1; c < res.values.size(); ++c)
        EXPECT_EQ(res.values[c], static_cast<std::uint64_t>(poly_degree(poly_decode(c, 2)))) << c;
    EXPECT_TRUE(res.certificate.witnesses_below);
    EXPECT_EQ(res.certificate.final_window, res.certificate.previous_window + 1);
}

TEST(PolynomialModel, BottomIsDegreeOverSmallFields) {
    for (std::uint64_t q : {3, 4, 5}) {
        auto res = windowed_bottom_polynomials(q, 3, 3, 6);
        for (std::uint64_t c = 1; c < res.values.size(); ++c)
            EXPECT_EQ(res.values[c], static_cast<std::uint64_t>(poly_degree(poly_decode(c, q)))) << q << " " << c;
    }
    EXPECT_THROW(windowed_bottom_polynomials(6), SpecError);
}

TEST(Localization, Values) {
    EXPECT_EQ(localization_value({2, 3}, parse_fraction("12/5")), 3u);
    EXPECT_EQ(localization_value({2}, parse_fraction("-7")), 0u);
    EXPECT_EQ(localization_value({5}, parse_fraction("250/3")), 3u);
    EXPECT_THROW(localization_value({2}, parse_fraction("0")), DomainError);
    EXPECT_THROW(localization_value({2}, parse_fraction("1/4")), DomainError);
    EXPECT_THROW(localization_value({4}, parse_fraction("3")), DomainError);
    EXPECT_THROW(localization_value({}, parse_fraction("3")), DomainError);
    EXPECT_THROW(parse_fraction("3/x"), SyntaxError);
    EXPECT_THROW(parse_fraction("1/0"), DomainError);
}

TEST(Localization, DivisionExamples) {
    const std::vector<std::uint64_t> s{2, 3};
    auto w1 = localization_divide(s, parse_fraction("5"), parse_fraction("12"));
    EXPECT_TRUE(verify_localization_witness(s, w1));
    EXPECT_LT(localization_value(s, w1.r), 3u);
    auto w2 = localization_divide(s, parse_fraction("24/7"), parse_fraction("6"));
    EXPECT_EQ(w2.r, (Fraction{0, 1}));
    EXPECT_EQ(w2.q, (Fraction{4, 7}));
    auto w3 = localization_divide(s, parse_fraction("0"), parse_fraction("6"));
    EXPECT_EQ(w3.q, (Fraction{0, 1}));
    EXPECT_FALSE(verify_localization_witness(s, {Fraction{8, 1}, Fraction{12, 1}, Fraction{0, 1}, Fraction{8, 1}}));
}

TEST(Localization, RandomDivisionsVerify) {
    for (const auto& s : std::vector<std::vector<std::uint64_t>>{{2}, {3}, {2, 3}, {3, 5, 7}, {2, 5, 11}}) {
        auto res = check_localization_euclidean(s, 2000, 17);
        EXPECT_EQ(res.passed, res.samples);
        EXPECT_FALSE(res.failure.has_value());
        EXPECT_GT(res.exact, 0u);
        EXPECT_GT(res.zero_dividend, 0u);
        EXPECT_GT(res.unit_divisor, 0u);
    }
}

TEST(NotLEuclidean, Integers) {
    auto wz = check_not_l_euclidean_integers();
    EXPECT_EQ(wz.b, "5");
    EXPECT_EQ(wz.a, "2");
    EXPECT_TRUE(wz.verified);
}

TEST(NotLEuclidean, Polynomials) {
    auto w2 = check_not_l_euclidean_polys(2);
    EXPECT_EQ(w2.b, "t^2+t+1");
    EXPECT_EQ(w2.a, "t");
    EXPECT_TRUE(w2.verified);
    auto w3 = check_not_l_euclidean_polys(3);
    EXPECT_EQ(w3.b, "t^2+1");
    EXPECT_EQ(w3.a, "t");
    EXPECT_TRUE(w3.verified);
    EXPECT_EQ(w3.remainders.size(), 3u);
}

TEST(RingSpecs, OrderTypes) {
    EXPECT_EQ(order_of("GF(2)[t] x Z/8"), add(w(), Ordinal(3)));
    EXPECT_EQ(order_of("Z"), w());
    EXPECT_EQ(order_of("Z x Z/4 x Z x Z/9"), add(standard_product(w(), Ordinal(2)), Ordinal(4)));
    EXPECT_EQ(order_of("GF(3)[t] x GF(2)[t]/(t^2+t) x Z/12"), add(w(), Ordinal(5)));
    EXPECT_TRUE(std::holds_alternative<FiniteRing>(parse_ring_spec("Z/8 x GF(4)")));
    EXPECT_THROW(order_of("Z x GF(2)[x,y]/(x,y)^2"), DomainError);
    EXPECT_THROW((RingSpec{{}, {2, 0}, std::nullopt}.validate()), DomainError);
    EXPECT_THROW((RingSpec{}.validate()), DomainError);
}

TEST(RingSpecs, PermutationInvariant) {
    std::vector<std::string> parts{"Z", "GF(2)[t]", "Z/8", "GF(3)[t]/(t^2)", "Z/6"};
    std::sort(parts.begin(), parts.end());
    const Ordinal expected = add(standard_product(w(), Ordinal(2)), Ordinal(7));
    do {
        std::string s;
        for (const auto& p : parts) s += (s.empty() ? "" : " x ") + p;
        EXPECT_EQ(order_of(s), expected) << s;
    } while (std::next_permutation(parts.begin(), parts.end()));
}

TEST(RingSpecs, AdditiveInArtinianLengths) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        RingSpec a{std::vector<PidFactor>(rng() % 3 + 1), {}, std::nullopt};
        RingSpec b = a;
        for (int k = static_cast<int>(rng() % 4); k > 0; --k) a.lengths.push_back(rng() % 9 + 1);
        for (int k = static_cast<int>(rng() % 4); k > 0; --k) b.lengths.push_back(rng() % 9 + 1);
        RingSpec ab = a;
        ab.lengths.insert(ab.lengths.end(), b.lengths.begin(), b.lengths.end());
        const Ordinal base = standard_product(w(), Ordinal(a.r()));
        EXPECT_EQ(order_type_of_spec(ab),
                  add(base, add(left_subtract(base, order_type_of_spec(a)), left_subtract(base, order_type_of_spec(b)))));
    }
}

TEST(Bounds, Examples) {
    auto b = product_bounds({Ordinal(3), w()});
    EXPECT_EQ(b.lower, w());
    EXPECT_EQ(b.upper, add(w(), Ordinal(3)));
    auto c = product_bounds({w(), Ordinal(3)});
    EXPECT_EQ(c.lower, add(w(), Ordinal(3)));
    EXPECT_EQ(c.upper, c.lower);
    EXPECT_EQ(product_bounds({}).lower, Ordinal(0));
}

TEST(Bounds, LowerAtMostUpper) {
    std::mt19937_64 rng(11);
    auto random_ordinal = [&] {
        std::vector<CnfTerm> t;
        for (int k = static_cast<int>(rng() % 3); k >= 0; --k) t.push_back({Ordinal(rng() % 3), rng() % 4 + 1});
        return Ordinal::from_terms(t);
    };
    for (int i = 0; i < 300; ++i) {
        std::vector<Ordinal> es(rng() % 4 + 1);
        for (auto& e : es) e = random_ordinal();
        auto b = product_bounds(es);
        EXPECT_LE(b.lower, b.upper);
        auto rev = es;
        std::reverse(rev.begin(), rev.end());
        EXPECT_EQ(product_bounds(rev).upper, b.upper);
    }
}

TEST(Realize, Examples) {
    auto s = realize_ordinal(add(standard_product(w(), Ordinal(2)), Ordinal(3)));
    EXPECT_EQ(s.spec(), "GF(2)[t] x GF(2)[t] x Z/8");
    EXPECT_EQ(realize_ordinal(Ordinal(5)).spec(), "Z/32");
    EXPECT_EQ(realize_ordinal(w()).spec(), "GF(2)[t]");
    EXPECT_THROW(realize_ordinal(Ordinal(0)), DomainError);
    EXPECT_THROW(realize_ordinal(Ordinal::omega_power(Ordinal(2))), DomainError);
    EXPECT_THROW(realize_ordinal(Ordinal(63)), ResourceError);
}

TEST(Realize, RoundTrip) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const std::uint64_t r = rng() % 5, n = rng() % 20 + (r == 0);
        const Ordinal a = add(standard_product(w(), Ordinal(r)), Ordinal(n));
        const auto spec = realize_ordinal(a).spec();
        const auto parsed = parse_ring_spec(spec);
        if (r == 0) {
            const auto& fr = std::get<FiniteRing>(parsed);
            EXPECT_EQ(element_length_structural(fr, 0), n);
            EXPECT_EQ(fr.spec(), spec);
        } else {
            EXPECT_EQ(order_type_of_spec(std::get<RingSpec>(parsed)), a) << spec;
            EXPECT_EQ(std::get<RingSpec>(parsed).spec(), spec);
        }
    }
}
