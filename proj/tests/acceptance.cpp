// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "euclid/euclidean.hpp"
#include "euclid/models.hpp"
#include "euclid/poset.hpp"
#include "euclid/ring_parse.hpp"
#include "small_ordinal_oracle.hpp"
#include "table_gen.hpp"

using namespace euclid;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) note << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

EuclideanTable bottom_of(const FiniteRing& r) {
    auto res = bottom_euclidean(r, r.size());
    if (auto* t = std::get_if<EuclideanTable>(&res)) return *t;
    throw std::runtime_error(r.spec() + " has no bottom table");
}

std::pair<FiniteRing, FiniteRing> split_pair(const std::string& s) {
    const auto bar = s.find('|');
    return {parse_finite_ring(s.substr(0, bar)), parse_finite_ring(s.substr(bar + 1))};
}

std::uint64_t p_adic(std::uint64_t x, std::uint64_t p) {
    std::uint64_t a = 0;
    while (x % p == 0) {
        x /= p;
        ++a;
    }
    return a;
}

void local_artinian(Outcome& o) {
    std::size_t rings = 0;
    for (std::uint64_t p = 2; p <= 512; ++p) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
        if (!prime) continue;
        std::uint64_t k = 1;
        for (std::uint64_t n = p; n <= 512; n *= p, ++k) {
            const auto r = parse_finite_ring("Z/" + std::to_string(n));
            const auto t = bottom_of(r);
            for (std::uint64_t x = 1; x < n; ++x) o.require(t[x] == Ordinal(p_adic(x, p)), r.spec() + " at " + std::to_string(x));
            o.require(order_type(t) == Ordinal(k), "e(" + r.spec() + ")");
            ++rings;
        }
    }
    o.note << rings << " rings Z/p^k";
}

void product_theorem(Outcome& o) {
    std::size_t n = 0;
    for (const auto& pair : corpus::product_pairs()) {
        const auto [r1, r2] = split_pair(pair);
        const Ordinal e1 = order_type(bottom_of(r1)), e2 = order_type(bottom_of(r2));
        const Ordinal e = order_type(bottom_of(product_ring(r1, r2)));
        const auto f1 = e1.finite_value(), f2 = e2.finite_value();
        o.require(f1 && f2 && e == Ordinal(*f1 + *f2), pair);
        o.require(e == natural_sum(e1, e2) && e == add(e1, e2), pair + " bounds");
        ++n;
    }
    o.require(n >= 20, "at least 20 products");
    o.note << n << " products";
}

void quotient_identity(Outcome& o) {
    std::size_t checked = 0;
    for (const auto& spec : corpus::principal_rings()) {
        const auto r = parse_finite_ring(spec);
        const auto t = bottom_of(r);
        for (std::uint64_t b = 1; b < r.size(); ++b) {
            if (r.is_unit(b)) continue;
            const auto q = quotient_euclidean(t, b);
            o.require(q.is_validated() && q.value_at_zero() == t[b], spec + " mod " + r.format(b));
            ++checked;
        }
    }
    o.note << checked << " quotients";
}

void brookfield_hessenberg(Outcome& o) {
    for (std::uint64_t m = 0; m <= 30; ++m)
        for (std::uint64_t n = 0; n <= 30; ++n)
            o.require(Ordinal(brookfield_sum_finite(m, n)) == natural_sum(Ordinal(m), Ordinal(n)),
                      "len at " + std::to_string(m) + "," + std::to_string(n));
    std::mt19937_64 rng(4);
    for (int i = 0; i < 10000; ++i) {
        const auto sa = oracle::random_small(rng, false), sb = oracle::random_small(rng, false);
        const Ordinal a = oracle::to_ordinal(sa), b = oracle::to_ordinal(sb);
        const Ordinal ns = natural_sum(a, b);
        o.require(ns == oracle::to_ordinal(oracle::natural_sum(sa, sb)), "natural sum oracle");
        o.require(std::max(add(a, b), add(b, a)) <= ns, "lower half of the chain");
        o.require(ns <= add(mul(a, b), mul(b, a)), "upper half of the chain");
    }
    o.note << "31x31 poset lengths, 10000 nonzero pairs";
}

void integers_window(Outcome& o) {
    const auto res = windowed_bottom_integers(1024);
    o.require(res.values[1] == 0, "phi(1)");
    for (std::uint64_t n = 2; n <= 1024; ++n) {
        std::uint64_t log2 = 0;
        for (std::uint64_t m = n; m > 1; m /= 2) ++log2;
        o.require(res.values[n] == log2, "phi(" + std::to_string(n) + ")");
        o.require(res.values[n] + 1 == std::bit_width(n), "binary digits of " + std::to_string(n));
    }
    o.require(res.certificate.witnesses_below, "witnesses below");
    o.note << "|n| <= 1024, windows " << res.certificate.previous_window << "/" << res.certificate.final_window;
}

void polynomials_window(Outcome& o) {
    const auto res = windowed_bottom_polynomials(2, 10);
    for (std::uint64_t c = 1; c < res.values.size(); ++c)
        o.require(res.values[c] == static_cast<std::uint64_t>(std::bit_width(c) - 1), "phi at code " + std::to_string(c));
    o.require(res.values.size() == 2048, "deg <= 10 covered");
    o.require(res.certificate.witnesses_below, "witnesses below");
    o.note << "deg <= 10, windows " << res.certificate.previous_window << "/" << res.certificate.final_window;
}

void negative_findings(Outcome& o) {
    const auto fixture = parse_finite_ring("GF(2)[x,y]/(x,y)^2");
    o.require(std::holds_alternative<NotEuclideanReport>(bottom_euclidean(fixture)), "fixture not Euclidean");
    o.require(!is_principal(fixture), "fixture not principal");
    const auto z = check_not_l_euclidean_integers();
    bool missing = true;
    for (int r : {0, 1, -1}) missing = missing && ((2 - r) % 5 + 5) % 5 != 0;
    o.require(z.b == "5" && z.a == "2" && z.verified && missing, "Z witness");
    const auto p = check_not_l_euclidean_polys(2);
    // t - 0 and t - 1 = t + 1 have degree 1 < 2, so neither is a multiple of t^2+t+1
    o.require(p.b == "t^2+t+1" && p.a == "t" && p.verified, "GF(2)[t] witness");
    o.note << "fixture, (5, 2), (t^2+t+1, t)";
}

void samuel_minimization(Outcome& o) {
    std::vector<FiniteRing> rings;
    for (const auto& spec : corpus::principal_rings()) {
        auto r = parse_finite_ring(spec);
        if (r.size() <= 128) rings.push_back(r);
    }
    std::mt19937_64 rng(8);
    std::size_t isotone_inputs = 0;
    for (int i = 0; i < 100; ++i) {
        const auto& r = rings[rng() % rings.size()];
        const auto t = EuclideanTable::from_naturals(r, gen::delayed_fixed_point(r, rng));
        const auto m = isotone_minimization(t);
        o.require(m.is_validated() && static_cast<bool>(m.check()), "validated output on " + r.spec());
        o.require(is_isotone_euclidean(m), "isotone output on " + r.spec());
        for (std::uint64_t x = 1; x < r.size(); ++x) o.require(m[x] <= t[x], "pointwise below on " + r.spec());
        o.require(isotone_minimization(m) == m, "idempotent on " + r.spec());
        o.require(is_weakly_isotone_euclidean(t) == is_isotone_euclidean(t), "predicates agree on input");
        o.require(is_weakly_isotone_euclidean(m) == is_isotone_euclidean(m), "predicates agree on output");
        isotone_inputs += is_isotone_euclidean(t);
    }
    for (const auto& r : rings) {
        const auto b = bottom_of(r);
        o.require(isotone_minimization(b) == b, "bottom fixed on " + r.spec());
    }
    o.note << "100 tables (" << isotone_inputs << " already isotone), " << rings.size() << " bottom tables";
}

void nagata(Outcome& o) {
    std::size_t divisions = 0;
    for (const char* pair : {"Z/4|Z/9", "Z/8|GF(2)[t]/(t^2)"}) {
        const auto [r1, r2] = split_pair(pair);
        const auto pt = nagata_product(bottom_of(r1), bottom_of(r2));
        o.require(!pt.validate().has_value(), std::string(pair) + " pair table");
        const auto c = collapse_pair_table(pt);
        o.require(c.is_validated() && static_cast<bool>(c.check()), std::string(pair) + " collapse");
        divisions += pt.ring().size() * (pt.ring().size() - 1);
    }
    o.note << divisions << " divisions";
}

void length_bounds(Outcome& o) {
    std::size_t rings = 0, residuals = 0;
    for (const auto& spec : corpus::principal_rings()) {
        const auto r = parse_finite_ring(spec);
        const auto t = bottom_of(r);
        const auto l = element_lengths(r, r.size());
        for (std::uint64_t x = 1; x < r.size(); ++x) o.require(Ordinal(l[x]) <= t[x], spec + " at " + r.format(x));
        ++rings;
    }
    auto residual_both = [&](const EuclideanTable& t, std::size_t split, const std::string& name) {
        for (Side side : {Side::First, Side::Second}) {
            const auto psi = residual_euclidean(t, split, side);
            o.require(psi.is_validated() && static_cast<bool>(psi.check()), name);
            ++residuals;
        }
    };
    for (const auto& spec : corpus::principal_rings()) {
        const auto r = parse_finite_ring(spec);
        if (r.factor_count() >= 2) residual_both(bottom_of(r), 1, spec);
    }
    for (const auto& pair : corpus::product_pairs()) {
        const auto [r1, r2] = split_pair(pair);
        residual_both(bottom_of(product_ring(r1, r2)), r1.factor_count(), pair);
    }
    o.note << rings << " rings, " << residuals << " residual tables";
}

void realization(Outcome& o) {
    std::mt19937_64 rng(11);
    std::size_t finite = 0;
    for (int i = 0; i < 50; ++i) {
        const std::uint64_t r = rng() % 5;
        const std::uint64_t n = r == 0 ? 1 + rng() % 9 : rng() % 21;
        const Ordinal a = add(standard_product(Ordinal::omega(), Ordinal(r)), Ordinal(n));
        const auto s = realize_ordinal(a);
        o.require(order_type_of_spec(s) == a, to_string(a));
        if (r == 0) {
            o.require(s.artinian && order_type(bottom_of(*s.artinian)) == a, to_string(a) + " fixed point");
            ++finite;
        }
    }
    o.note << "50 ordinals, " << finite << " checked by fixed point";
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
        {"local Artinian order types", local_artinian},
        {"product theorem at finite scale", product_theorem},
        {"quotient identity", quotient_identity},
        {"Brookfield sum equals Hessenberg sum", brookfield_hessenberg},
        {"windowed bottom function on Z", integers_window},
        {"windowed bottom function on GF(2)[t]", polynomials_window},
        {"negative findings", negative_findings},
        {"Samuel minimization", samuel_minimization},
        {"Nagata construction", nagata},
        {"length bounds and residual tables", length_bounds},
        {"realization below w^2", realization},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.note << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (i == 0 || i == 4) o.require(secs < 60.0, "runtime under a minute");
        std::printf("%s %2zu %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.note.str().c_str(),
                    secs);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
