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

#ifndef EUCLID_CLI_HPP
#define EUCLID_CLI_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "euclidean.hpp"
#include "models.hpp"
#include "ordinal.hpp"
#include "ordinal_parse.hpp"
#include "ring.hpp"
#include "ring_parse.hpp"

namespace euclid {

inline constexpr int schema_version = 1;

enum ExitStatus : int {
    exit_ok = 0,
    exit_domain = 2,
    exit_not_euclidean = 3,
    exit_resource = 4,
    exit_syntax = 5,
};

using json = nlohmann::ordered_json;

// --- serialization ------------------------------------------------------------------

inline json to_json(const Ordinal& a) { return to_string(a); }

/// Ring spec, per-element values in code order, value at zero and validation flag.
inline json to_json(const EuclideanTable& t) {
    const auto& r = t.ring();
    json elements = json::array(), values = json::array();
    for (std::uint64_t x = 0; x < r.size(); ++x) {
        elements.push_back(r.format(x));
        values.push_back(to_string(t[x]));
    }
    return {{"ring", r.spec()},       {"elements", elements},        {"values", values},
            {"value_at_zero", to_string(t.value_at_zero())}, {"validated", t.is_validated()}};
}

inline json to_json(const FiniteRing& r, const Counterexample& c) {
    return {{"a", r.format(c.a)}, {"b", r.format(c.b)}};
}

inline json to_json(const NotEuclideanReport& rep) {
    json stuck = json::array();
    for (auto x : rep.stuck) stuck.push_back(rep.ring.format(x));
    return {{"ring", rep.ring.spec()}, {"stuck", stuck}, {"levels", rep.levels}};
}

inline json to_json(const RingSpec& s) {
    json pids = json::array();
    for (const auto& p : s.pids) pids.push_back(p.spec());
    return {{"spec", s.spec()}, {"r", s.r()}, {"pid_factors", pids}, {"artinian_lengths", s.lengths},
            {"order_type", to_string(order_type_of_spec(s))}};
}

inline json to_json(const StabilizationCertificate& c) {
    return {{"previous_window", c.previous_window}, {"final_window", c.final_window}, {"growths", c.growths},
            {"witnesses_below", c.witnesses_below}};
}

// --- command runner -----------------------------------------------------------------

struct CliResult {
    int status = exit_ok;
    std::string out;
};

namespace detail {

struct Options {
    bool json = false;
    std::uint64_t seed = 1;
    std::uint64_t samples = 1000;
    std::optional<std::uint64_t> window;
    std::uint64_t max_size = default_max_size;
};

/// A report under construction: text lines and a JSON object built side by side.
struct Report {
    std::string verb;
    json body = json::object();
    std::ostringstream text;
    int status = exit_ok;
    std::vector<std::string> tags;
};

inline std::string join(const std::vector<std::string>& xs, const char* sep) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
    return out;
}

inline std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::vector<std::uint64_t> parse_primes(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    for (const auto& part : split_list(s, ',')) {
        std::size_t i = 0;
        while (i < part.size() && part[i] == ' ') ++i;
        std::uint64_t p = 0;
        std::size_t digits = 0;
        for (; i < part.size() && std::isdigit(static_cast<unsigned char>(part[i])); ++i, ++digits)
            p = checked_add(checked_mul(p, 10), static_cast<std::uint64_t>(part[i] - '0'));
        while (i < part.size() && part[i] == ' ') ++i;
        if (digits == 0 || i != part.size()) throw SyntaxError("expected a comma-separated list of primes", pos + i);
        out.push_back(p);
        pos += part.size() + 1;
    }
    return out;
}

inline FiniteRing finite_ring(const std::string& spec) { return parse_finite_ring(spec); }

inline EuclideanTable bottom_or_report(const FiniteRing& r, std::uint64_t max_size) {
    auto res = bottom_euclidean(r, max_size);
    if (auto* t = std::get_if<EuclideanTable>(&res)) return *t;
    const auto& bad = std::get<NotEuclideanReport>(res);
    throw NotEuclideanError(r.spec() + " is not Euclidean: the fixed point stalls at " +
                                std::to_string(bad.stuck.size()) + " elements",
                            Counterexample{0, bad.stuck.front()});
}

inline void print_table(std::ostream& os, const EuclideanTable& t) {
    const auto& r = t.ring();
    std::size_t width = 1;
    for (std::uint64_t x = 1; x < r.size(); ++x) width = std::max(width, r.format(x).size());
    for (std::uint64_t x = 1; x < r.size(); ++x) {
        const auto label = r.format(x);
        os << "  " << label << std::string(width - label.size(), ' ') << "  " << to_string(t[x]) << "\n";
    }
}

inline void ordinal_eval(Report& rep, const std::string& expr) {
    const Ordinal a = parse_ordinal(expr);
    rep.body["input"] = expr;
    rep.body["result"] = to_string(a);
    rep.body["is_limit"] = a.is_limit();
    rep.body["is_finite"] = a.is_finite();
    rep.text << to_string(a) << "\n";
}

inline void ring_analyze(Report& rep, const std::string& spec, const Options& o) {
    rep.body["input"] = spec;
    auto parsed = parse_ring_spec(spec);
    if (auto* s = std::get_if<RingSpec>(&parsed)) {
        rep.body["ring"] = to_json(*s);
        rep.text << "ring        " << s->spec() << "\n"
                 << "domains     " << s->r() << "\n"
                 << "lengths     " << join([&] {
                        std::vector<std::string> v;
                        for (auto l : s->lengths) v.push_back(std::to_string(l));
                        return v;
                    }(), ", ")
                 << "\n"
                 << "order type  " << to_string(order_type_of_spec(*s)) << "\n";
        rep.tags = {"small-euclidean-order-type"};
        return;
    }
    const auto& r = std::get<FiniteRing>(parsed);
    r.require_enumerable(o.max_size, "ring-analyze");
    IdealLattice lattice(r, o.max_size);
    std::uint64_t units = 0;
    for (std::uint64_t x = 0; x < r.size(); ++x) units += r.is_unit(x);
    const bool principal = lattice.is_principal();
    json j{{"spec", r.spec()}, {"size", r.size()}, {"units", units}, {"principal", principal},
           {"principal_ideals", lattice.principal_count()}, {"ideals", lattice.all_ideals().size()}};
    rep.text << "ring              " << r.spec() << "\n"
             << "elements          " << r.size() << "\n"
             << "units             " << units << "\n"
             << "ideals            " << lattice.all_ideals().size() << "\n"
             << "principal ideals  " << lattice.principal_count() << "\n"
             << "principal         " << (principal ? "yes" : "no") << "\n";
    if (principal) {
        CrtDecomposition crt(r, o.max_size);
        json locals = json::array();
        for (const auto& f : crt.local_ring().factors()) locals.push_back(FiniteRing({f}).spec());
        const auto lengths = element_lengths(r, o.max_size);
        json lj = json::array();
        for (auto l : lengths) lj.push_back(l);
        j["local_factors"] = locals;
        j["length"] = lengths[0];
        j["element_lengths"] = lj;
        rep.text << "local factors     " << join(locals.get<std::vector<std::string>>(), " x ") << "\n"
                 << "length            " << lengths[0] << "\n";
    } else {
        auto witness = lattice.non_principal_sum();
        j["non_principal_ideal"] = json::array();
        std::vector<std::string> labels;
        for (auto x : detail::members(*witness, r.size())) {
            j["non_principal_ideal"].push_back(r.format(x));
            labels.push_back(r.format(x));
        }
        rep.text << "non-principal     {" << join(labels, ", ") << "}\n";
    }
    rep.body["ring"] = j;
    rep.tags = {"euclidean-implies-principal", "artinian-length"};
}

inline void euclid_bottom(Report& rep, const std::string& spec, const Options& o) {
    rep.body["input"] = spec;
    const auto r = finite_ring(spec);
    auto res = bottom_euclidean(r, o.max_size);
    rep.tags = {"bottom-fixed-point", "euclidean-implies-principal"};
    if (auto* bad = std::get_if<NotEuclideanReport>(&res)) {
        rep.status = exit_not_euclidean;
        rep.body["euclidean"] = false;
        rep.body["report"] = to_json(*bad);
        std::vector<std::string> stuck;
        for (auto x : bad->stuck) stuck.push_back(r.format(x));
        rep.text << r.spec() << " is not Euclidean\n"
                 << "  the fixed point stalls after " << bad->levels << " levels\n"
                 << "  unassigned: " << join(stuck, ", ") << "\n";
        return;
    }
    const auto& t = std::get<EuclideanTable>(res);
    rep.body["euclidean"] = true;
    rep.body["table"] = to_json(t);
    rep.body["order_type"] = to_string(order_type(t));
    rep.text << "bottom Euclidean function on " << r.spec() << "\n";
    print_table(rep.text, t);
    rep.text << "e = " << to_string(order_type(t)) << "\n";
}

inline void euclid_verify(Report& rep, const std::string& spec, const std::string& values, const Options& o) {
    rep.body["input"] = {{"ring", spec}, {"values", values}};
    const auto r = finite_ring(spec);
    r.require_enumerable(o.max_size, "euclid-verify");
    const auto parts = split_list(values, ',');
    if (parts.size() != r.size() - 1)
        throw DomainError("expected " + std::to_string(r.size() - 1) + " values, one per nonzero element of " + r.spec() +
                          ", got " + std::to_string(parts.size()));
    std::vector<Ordinal> v(r.size());
    for (std::size_t i = 0; i < parts.size(); ++i) v[i + 1] = parse_ordinal(parts[i]);
    const auto t = EuclideanTable::unchecked(r, v);
    const auto check = t.check();
    rep.tags = {"euclidean-definition"};
    if (!check) {
        const auto c = *check.counterexample;
        rep.status = exit_not_euclidean;
        rep.body["euclidean"] = false;
        rep.body["counterexample"] = to_json(r, c);
        rep.text << "not a Euclidean function on " << r.spec() << "\n"
                 << "  no division of " << r.format(c.a) << " by " << r.format(c.b) << " leaves a smaller remainder\n";
        return;
    }
    const auto valid = EuclideanTable::validated(r, v);
    const bool isotone = is_isotone_euclidean(valid);
    const auto bottom = std::get<EuclideanTable>(bottom_euclidean(r, o.max_size));
    const bool is_bottom = bottom.values() == std::vector<Ordinal>(valid.values());
    rep.body["euclidean"] = true;
    rep.body["table"] = to_json(valid);
    rep.body["isotone"] = isotone;
    rep.body["weakly_isotone"] = is_weakly_isotone_euclidean(valid);
    rep.body["bottom"] = is_bottom;
    rep.text << "Euclidean function on " << r.spec() << "\n"
             << "  value at 0  " << to_string(valid.value_at_zero()) << "\n"
             << "  isotone     " << (isotone ? "yes" : "no") << "\n"
             << "  bottom      " << (is_bottom ? "yes" : "no") << "\n";
    if (!isotone) {
        const auto m = isotone_minimization(valid);
        rep.body["isotone_minimization"] = to_json(m);
        rep.text << "isotone minimization\n";
        print_table(rep.text, m);
    }
}

inline void euclid_quotient(Report& rep, const std::string& spec, const std::string& elem, const Options& o) {
    rep.body["input"] = {{"ring", spec}, {"element", elem}};
    const auto r = finite_ring(spec);
    const auto b = parse_element(r, elem);
    if (b == 0) throw DomainError("the quotient by 0 is the ring itself; pick a nonzero nonunit");
    const auto t = bottom_or_report(r, o.max_size);
    const auto q = quotient_euclidean(t, b);
    rep.body["bottom_at_element"] = to_string(t[b]);
    rep.body["quotient"] = to_json(q);
    rep.body["identity_holds"] = q.value_at_zero() == t[b];
    rep.tags = {"quotient-identity"};
    rep.text << r.spec() << " / (" << r.format(b) << ") = " << q.ring().spec() << "\n";
    print_table(rep.text, q);
    rep.text << "value at 0 = " << to_string(q.value_at_zero()) << ", bottom(" << r.format(b)
             << ") = " << to_string(t[b]) << "\n";
}

inline void euclid_product(Report& rep, const std::string& s1, const std::string& s2, const Options& o) {
    rep.body["input"] = {s1, s2};
    const auto r1 = finite_ring(s1), r2 = finite_ring(s2);
    const auto prod = product_ring(r1, r2);
    prod.require_enumerable(o.max_size, "euclid-product");
    const auto t1 = bottom_or_report(r1, o.max_size);
    const auto t2 = bottom_or_report(r2, o.max_size);
    const auto t = bottom_or_report(prod, o.max_size);
    const Ordinal e1 = order_type(t1), e2 = order_type(t2), e = order_type(t);
    const auto bounds = product_bounds({e1, e2});
    const auto pairs = nagata_product(t1, t2);
    const auto bad = pairs.validate();
    std::optional<EuclideanTable> collapsed;
    if (!bad) collapsed = collapse_pair_table(pairs);
    rep.body["product"] = prod.spec();
    rep.body["e1"] = to_string(e1);
    rep.body["e2"] = to_string(e2);
    rep.body["e"] = to_string(e);
    rep.body["lower"] = to_string(bounds.lower);
    rep.body["upper"] = to_string(bounds.upper);
    rep.body["pair_table_validated"] = !bad;
    rep.body["collapsed_validated"] = collapsed && collapsed->is_validated();
    rep.body["sum_holds"] = e == bounds.upper && e == bounds.lower;
    rep.tags = {"product-theorem", "pair-ordering-division"};
    rep.text << prod.spec() << "\n"
             << "  e(" << r1.spec() << ") = " << to_string(e1) << "\n"
             << "  e(" << r2.spec() << ") = " << to_string(e2) << "\n"
             << "  e(product) = " << to_string(e) << "\n"
             << "  bounds [" << to_string(bounds.lower) << ", " << to_string(bounds.upper) << "]\n"
             << "  pair table " << (bad ? "fails" : "validated") << "\n";
}

inline void product_bounds_cmd(Report& rep, const std::vector<std::string>& exprs) {
    std::vector<Ordinal> es;
    for (const auto& e : exprs) es.push_back(parse_ordinal(e));
    const auto b = product_bounds(es);
    rep.body["input"] = exprs;
    rep.body["lower"] = to_string(b.lower);
    rep.body["upper"] = to_string(b.upper);
    rep.tags = {"product-theorem", "hessenberg-bounds"};
    rep.text << "lower  " << to_string(b.lower) << "\n"
             << "upper  " << to_string(b.upper) << "\n";
}

inline void realize_cmd(Report& rep, const std::string& expr) {
    const Ordinal a = parse_ordinal(expr);
    const auto s = realize_ordinal(a);
    const Ordinal back = order_type_of_spec(s);
    rep.body["input"] = expr;
    rep.body["ordinal"] = to_string(a);
    rep.body["spec"] = s.spec();
    rep.body["order_type"] = to_string(back);
    rep.body["round_trip"] = back == a;
    rep.tags = {"small-euclidean-order-type"};
    rep.text << s.spec() << "\n";
}

/// Runs of equal values over 1..n, as "lo..hi  value" lines.
inline void print_runs(std::ostream& os, const std::vector<std::uint64_t>& v, std::uint64_t from = 1) {
    std::uint64_t start = from;
    for (std::uint64_t i = from + 1; i <= v.size(); ++i) {
        if (i < v.size() && v[i] == v[start]) continue;
        os << "  " << start << ".." << i - 1 << "  " << v[start] << "\n";
        start = i;
    }
}

inline void model_z(Report& rep, std::uint64_t range, const Options& o) {
    const auto res = windowed_bottom_integers(range, o.window.value_or(64));
    json phi = json::array(), digits = json::array();
    for (std::uint64_t n = 0; n <= range; ++n) {
        phi.push_back(n == 0 ? json(nullptr) : json(res.values[n]));
        digits.push_back(n == 0 ? json(nullptr) : json(res.values[n] + 1));
    }
    rep.body["input"] = {{"range", range}, {"start_window", o.window.value_or(64)}};
    rep.body["phi"] = phi;
    rep.body["binary_digits"] = digits;
    rep.body["certificate"] = to_json(res.certificate);
    rep.tags = {"integers-bottom", "windowed-certificate"};
    rep.text << "bottom Euclidean function on Z, |n| <= " << range << " (phi(-n) = phi(n))\n";
    print_runs(rep.text, res.values);
    rep.text << "binary digits of n = phi(n) + 1\n"
             << "stable between windows " << res.certificate.previous_window << " and " << res.certificate.final_window
             << "\n";
}

inline void model_poly(Report& rep, std::uint64_t q, std::uint32_t degree, const Options& o) {
    const auto start = static_cast<std::uint32_t>(o.window.value_or(std::min<std::uint64_t>(8, std::max<std::uint32_t>(degree, 2))));
    const auto res = windowed_bottom_polynomials(q, degree, start);
    std::vector<std::uint64_t> by_degree(degree + 1, 0);
    bool degree_constant = true;
    std::vector<bool> seen(degree + 1, false);
    for (std::uint64_t c = 1; c < res.values.size(); ++c) {
        const auto d = static_cast<std::size_t>(poly_degree(poly_decode(c, q)));
        if (seen[d] && by_degree[d] != res.values[c]) degree_constant = false;
        by_degree[d] = res.values[c];
        seen[d] = true;
    }
    rep.body["input"] = {{"q", q}, {"degree", degree}, {"start_window", start}};
    rep.body["phi"] = res.values;
    rep.body["phi_by_degree"] = by_degree;
    rep.body["constant_on_degrees"] = degree_constant;
    rep.body["certificate"] = to_json(res.certificate);
    rep.tags = {"polynomials-bottom", "windowed-certificate"};
    rep.text << "bottom Euclidean function on " << res.field->name() << "[t], deg P <= " << degree << "\n";
    for (std::uint32_t d = 0; d <= degree; ++d) rep.text << "  deg " << d << "  phi " << by_degree[d] << "\n";
    rep.text << "stable between degree windows " << res.certificate.previous_window << " and "
             << res.certificate.final_window << "\n";
}

inline void model_localize(Report& rep, const std::string& primes_text, const std::vector<std::string>& args,
                           const Options& o) {
    const auto primes = parse_primes(primes_text);
    rep.body["input"] = {{"primes", primes}};
    rep.tags = {"localization-euclidean"};
    if (args.size() == 2) {
        const auto a = parse_fraction(args[0]), b = parse_fraction(args[1]);
        const auto w = localization_divide(primes, a, b);
        const bool ok = verify_localization_witness(primes, w);
        rep.body["input"]["a"] = args[0];
        rep.body["input"]["b"] = args[1];
        rep.body["q"] = w.q.str();
        rep.body["r"] = w.r.str();
        rep.body["value_b"] = localization_value(primes, b);
        rep.body["value_r"] = w.r.num == 0 ? json(nullptr) : json(localization_value(primes, w.r));
        rep.body["verified"] = ok;
        rep.text << a.str() << " = (" << w.q.str() << ")(" << b.str() << ") + " << w.r.str() << "\n";
        return;
    }
    if (!args.empty()) throw SyntaxError("model-localize takes a prime list and optionally two elements a b", 0);
    const auto res = check_localization_euclidean(primes, o.samples, o.seed);
    rep.body["seed"] = res.seed;
    rep.body["samples"] = res.samples;
    rep.body["passed"] = res.passed;
    rep.body["exact_divisions"] = res.exact;
    rep.body["zero_dividends"] = res.zero_dividend;
    rep.body["unit_divisors"] = res.unit_divisor;
    if (res.failure) rep.body["failure"] = {{"a", res.failure->a.str()}, {"b", res.failure->b.str()}};
    rep.text << "S = {" << primes_text << "}, seed " << res.seed << "\n"
             << "  " << res.passed << " of " << res.samples << " divisions verified\n";
    if (res.failure) rep.status = exit_not_euclidean;
}

inline void l_euclidean(Report& rep, const std::string& spec, const Options& o) {
    rep.body["input"] = spec;
    rep.tags = {"length-euclidean", "length-bound"};
    auto parsed = parse_ring_factors(spec);
    if (parsed.size() == 1 && std::holds_alternative<PidFactor>(parsed[0])) {
        const auto& p = std::get<PidFactor>(parsed[0]);
        const auto w = p.kind == PidFactor::Kind::Integers ? check_not_l_euclidean_integers()
                                                           : check_not_l_euclidean_polys(p.field->q());
        rep.status = w.verified ? exit_not_euclidean : exit_ok;
        rep.body["l_euclidean"] = !w.verified;
        rep.body["witness"] = {{"b", w.b}, {"a", w.a}, {"remainders", w.remainders}, {"verified", w.verified}};
        rep.text << p.spec() << " is not l-Euclidean\n"
                 << "  l(" << w.b << ") = 1 and no r in {" << join(w.remainders, ", ") << "} has r = " << w.a
                 << " mod " << w.b << "\n";
        return;
    }
    const auto r = finite_ring(spec);
    const auto check = check_l_euclidean(r, o.max_size);
    rep.body["l_euclidean"] = static_cast<bool>(check);
    if (!check) {
        rep.status = exit_not_euclidean;
        rep.body["counterexample"] = to_json(r, *check.counterexample);
        rep.text << r.spec() << " is not l-Euclidean: " << r.format(check.counterexample->a) << " by "
                 << r.format(check.counterexample->b) << "\n";
    } else {
        rep.text << r.spec() << " is l-Euclidean\n";
    }
}

inline json error_json(const std::string& verb, const std::vector<std::string>& args, const char* kind,
                       const std::string& msg) {
    return {{"schema_version", schema_version}, {"command", verb}, {"status", kind}, {"arguments", args}, {"error", msg}};
}

}  // namespace detail

/// Runs one command; args exclude the program name.
inline CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Euclidean functions, ordinals and finite rings", "euclid"};
    app.require_subcommand(1);
    detail::Options o;
    app.add_flag("--json", o.json, "emit a JSON report");
    app.add_option("--seed", o.seed, "seed for randomized checks");
    app.add_option("--samples", o.samples, "sample count for randomized checks");
    app.add_option("--window", o.window, "starting window (integer bound or polynomial degree)");
    app.add_option("--max-size", o.max_size, "largest ring to enumerate");
    app.fallthrough();

    std::string a1, a2;
    std::vector<std::string> rest;
    std::uint64_t range = 1024, q = 2;
    std::uint32_t degree = 10;
    auto* c_ord = app.add_subcommand("ordinal-eval", "evaluate an ordinal expression");
    c_ord->add_option("expr", a1)->required();
    auto* c_ring = app.add_subcommand("ring-analyze", "ideals, lengths and local factors of a ring");
    c_ring->add_option("spec", a1)->required();
    auto* c_bottom = app.add_subcommand("euclid-bottom", "bottom Euclidean function of a finite ring");
    c_bottom->add_option("spec", a1)->required();
    auto* c_verify = app.add_subcommand("euclid-verify", "check a table of values on the nonzero elements");
    c_verify->add_option("spec", a1)->required();
    c_verify->add_option("values", a2, "comma-separated ordinals in element code order")->required();
    auto* c_quot = app.add_subcommand("euclid-quotient", "bottom function of R/(b) from that of R");
    c_quot->add_option("spec", a1)->required();
    c_quot->add_option("element", a2)->required();
    auto* c_prod = app.add_subcommand("euclid-product", "order type of a product of two rings");
    c_prod->add_option("first", a1)->required();
    c_prod->add_option("second", a2)->required();
    auto* c_bounds = app.add_subcommand("product-bounds", "ordinal and natural sums of order types");
    c_bounds->add_option("ordinals", rest)->required();
    auto* c_real = app.add_subcommand("realize", "a ring with a given order type below w^2");
    c_real->add_option("ordinal", a1)->required();
    auto* c_z = app.add_subcommand("model-z", "windowed bottom function on Z");
    c_z->add_option("range", range, "report |n| up to this bound");
    auto* c_poly = app.add_subcommand("model-poly", "windowed bottom function on GF(q)[t]");
    c_poly->add_option("q", q, "field size");
    c_poly->add_option("degree", degree, "report polynomials up to this degree");
    auto* c_loc = app.add_subcommand("model-localize", "division in Z localized away from S");
    c_loc->add_option("primes", a1, "comma-separated primes")->required();
    c_loc->add_option("elements", rest, "optional a b to divide");
    auto* c_l = app.add_subcommand("l-euclidean", "whether the length function is Euclidean");
    c_l->add_option("spec", a1)->required();
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {exit_ok, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return {exit_ok, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        return {exit_syntax, std::string("error: ") + e.what() + "\n"};
    }

    detail::Report rep;
    rep.verb = app.get_subcommands().front()->get_name();
    auto fail = [&](int status, const char* kind, const std::string& msg) -> CliResult {
        if (o.json) return {status, detail::error_json(rep.verb, args, kind, msg).dump(2) + "\n"};
        return {status, "error: " + msg + "\n"};
    };
    try {
        const auto& v = rep.verb;
        if (v == "ordinal-eval") detail::ordinal_eval(rep, a1);
        else if (v == "ring-analyze") detail::ring_analyze(rep, a1, o);
        else if (v == "euclid-bottom") detail::euclid_bottom(rep, a1, o);
        else if (v == "euclid-verify") detail::euclid_verify(rep, a1, a2, o);
        else if (v == "euclid-quotient") detail::euclid_quotient(rep, a1, a2, o);
        else if (v == "euclid-product") detail::euclid_product(rep, a1, a2, o);
        else if (v == "product-bounds") detail::product_bounds_cmd(rep, rest);
        else if (v == "realize") detail::realize_cmd(rep, a1);
        else if (v == "model-z") detail::model_z(rep, range, o);
        else if (v == "model-poly") detail::model_poly(rep, q, degree, o);
        else if (v == "model-localize") detail::model_localize(rep, a1, rest, o);
        else if (v == "l-euclidean") detail::l_euclidean(rep, a1, o);
    } catch (const NotEuclideanError& e) {
        if (!o.json) return {exit_not_euclidean, std::string(e.what()) + "\n"};
        auto j = detail::error_json(rep.verb, args, "not-euclidean", e.what());
        return {exit_not_euclidean, j.dump(2) + "\n"};
    } catch (const SyntaxError& e) {
        return fail(exit_syntax, "syntax-error", e.what());
    } catch (const SpecError& e) {
        return fail(exit_syntax, "spec-error", e.what());
    } catch (const ResourceError& e) {
        return fail(exit_resource, "resource-error", e.what());
    } catch (const DomainError& e) {
        return fail(exit_domain, "domain-error", e.what());
    }

    if (!o.json) return {rep.status, rep.text.str()};
    json out{{"schema_version", schema_version}, {"command", rep.verb}};
    out["status"] = rep.status == exit_ok ? "ok" : "not-euclidean";
    for (auto& [k, val] : rep.body.items()) out[k] = val;
    out["tags"] = rep.tags;
    return {rep.status, out.dump(2) + "\n"};
}

}  // namespace euclid

#endif
