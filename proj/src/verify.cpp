#include "hodgepoly/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "hodgepoly/blocks.hpp"
#include "hodgepoly/error.hpp"
#include "hodgepoly/format.hpp"
#include "hodgepoly/series.hpp"
#include "hodgepoly/triples.hpp"

namespace hodge {

namespace {

const std::vector<std::string> kChecks = {
    "ring-laws",
    "geometric-series",
    "exact-division",
    "palindrome-involution",
    "diagonal-morphism",
    "proj-space-identity",
    "sym-generating",
    "sym-shape",
    "chi-bilinear",
    "emptiness",
    "cross-pipeline",
    "flip-paths",
    "chamber-constancy",
    "hodge-symmetry",
    "palindrome-duality",
    "nonnegativity",
    "duality",
    "pairs-factorization",
    "fixed-det-factorization",
    "thaddeus",
    "bundle-consistency",
    "residue",
};

std::string triple_params(const TripleSpec& s)
{
    std::ostringstream os;
    os << "g=" << s.g << " rank=" << (s.rank == RankPair::R21 ? "2,1" : "1,2") << " d1=" << s.d1 << " d2=" << s.d2;
    return os.str();
}

// x^T coefficient of (1+ux)^g (1+vx)^g / ((1-x)(1-uvx)) as a direct sum over
// compositions of T, without the series type.
LaurentPoly sym_convolution(long g, long T)
{
    LaurentPoly total;
    for (long i = 0; i <= std::min(g, T); ++i) {
        for (long j = 0; i + j <= T && j <= g; ++j) {
            mpz_class bi, bj;
            mpz_bin_uiui(bi.get_mpz_t(), static_cast<unsigned long>(g), static_cast<unsigned long>(i));
            mpz_bin_uiui(bj.get_mpz_t(), static_cast<unsigned long>(g), static_cast<unsigned long>(j));
            for (long l = 0; i + j + l <= T; ++l)
                total.add_term({static_cast<int>(i + l), static_cast<int>(j + l)}, bi * bj);
        }
    }
    return total;
}

// The rank (1,2) chamber formula written with its own exponents, used as the
// oracle for the duality route.
LaurentPoly rank12_formula(long g, long d1, long d2, long d0)
{
    const long top = d1 - d2 - d0;
    if (top < 0)
        return {};
    const auto N = static_cast<unsigned>(top);
    const auto gg = static_cast<unsigned>(g);
    TruncatedSeries base = series_binomial(LaurentPoly::u(), gg, N) * series_binomial(LaurentPoly::v(), gg, N) *
                           series_geometric(LaurentPoly(1), N) * series_geometric(LaurentPoly::uv_power(1), N);
    LaurentPoly a = (base * series_geometric(LaurentPoly::uv_power(-1), N)).coeff(N) *
                    LaurentPoly::uv_power(static_cast<int>(top));
    LaurentPoly b = (base * series_geometric(LaurentPoly::uv_power(2), N)).coeff(N) *
                    LaurentPoly::uv_power(static_cast<int>(d2 + g - 1 + 2 * d0));
    return exact_div(a - b, LaurentPoly(1) - LaurentPoly::uv_power(1)) * pow(jacobian(g), 2);
}

class Runner {
public:
    explicit Runner(const GridConfig& config) : config_(config), rng_(config.seed) {}

    std::vector<CheckReport> run()
    {
        for (const auto& name : kChecks) {
            if (!selected(name))
                continue;
            std::mt19937_64 local(config_.seed ^ std::hash<std::string>{}(name));
            rng_ = local;
            dispatch(name);
        }
        return std::move(reports_);
    }

private:
    bool selected(const std::string& name) const
    {
        return config_.checks.empty() ||
               std::find(config_.checks.begin(), config_.checks.end(), name) != config_.checks.end();
    }

    void record(const std::string& check, const std::string& params, bool ok, std::string detail = {})
    {
        reports_.push_back({check, params, ok ? CheckStatus::Pass : CheckStatus::Fail, ok ? std::string() : std::move(detail)});
    }

    // Applies the injected fault, if any, to the computed side of a comparison.
    template <typename T>
    T maybe_corrupt(const std::string& check, T value) const
    {
        if (config_.inject_fault == check)
            value += T(1);
        return value;
    }

    template <typename T>
    void expect_equal(const std::string& check, const std::string& params, const T& expected, T actual)
    {
        actual = maybe_corrupt(check, std::move(actual));
        if (expected == actual)
            record(check, params, true);
        else
            record(check, params, false, "expected " + describe(expected) + " but got " + describe(actual));
    }

    void expect_true(const std::string& check, const std::string& params, bool ok, const std::string& detail)
    {
        if (config_.inject_fault == check)
            ok = !ok;
        record(check, params, ok, detail);
    }

    static std::string describe(const LaurentPoly& p) { return to_text(p); }
    static std::string describe(const UniPoly& p) { return to_text(p); }
    static std::string describe(const Rational& r) { return r.to_string(); }
    static std::string describe(long x) { return std::to_string(x); }

    // Runs body, turning any exception into a failed report.
    template <typename F>
    void guarded(const std::string& check, const std::string& params, F&& body)
    {
        try {
            body();
        } catch (const std::exception& e) {
            record(check, params, false, std::string("exception: ") + e.what());
        }
    }

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    LaurentPoly random_poly(int exp_lo, int exp_hi, std::size_t max_terms)
    {
        LaurentPoly p;
        const long n = uniform(1, static_cast<long>(max_terms));
        for (long i = 0; i < n; ++i) {
            long c = 0;
            while (c == 0)
                c = uniform(-9, 9);
            p.add_term({static_cast<int>(uniform(exp_lo, exp_hi)), static_cast<int>(uniform(exp_lo, exp_hi))}, c);
        }
        return p;
    }

    LaurentPoly random_nonzero_poly(int lo, int hi, std::size_t max_terms)
    {
        LaurentPoly p;
        while (p.is_zero())
            p = random_poly(lo, hi, max_terms);
        return p;
    }

    Rational random_rational()
    {
        return Rational(uniform(-12, 12), uniform(1, 7));
    }

    std::string case_params(unsigned i) const
    {
        return "seed=" + std::to_string(config_.seed) + " case=" + std::to_string(i);
    }

    std::vector<TripleSpec> grid_specs(RankPair rank) const
    {
        std::vector<TripleSpec> specs;
        for (long g = config_.g_min; g <= config_.g_max; ++g)
            for (long d2 = config_.d2_min; d2 <= config_.d2_max; ++d2)
                for (long d1 = config_.d1_min; d1 <= config_.d1_max; ++d1)
                    specs.push_back({g, rank, d1, d2});
        return specs;
    }

    void dispatch(const std::string& name)
    {
        if (name == "ring-laws") ring_laws();
        else if (name == "geometric-series") geometric_series();
        else if (name == "exact-division") exact_division();
        else if (name == "palindrome-involution") palindrome_involution();
        else if (name == "diagonal-morphism") diagonal_morphism();
        else if (name == "proj-space-identity") proj_space_identity();
        else if (name == "sym-generating") sym_generating();
        else if (name == "sym-shape") sym_shape();
        else if (name == "chi-bilinear") chi_bilinear();
        else if (name == "emptiness") emptiness();
        else if (name == "cross-pipeline") cross_pipeline();
        else if (name == "flip-paths") flip_paths();
        else if (name == "chamber-constancy") chamber_constancy();
        else if (name == "hodge-symmetry" || name == "palindrome-duality" || name == "nonnegativity") structural(name);
        else if (name == "duality") duality();
        else if (name == "pairs-factorization") pairs_factorization();
        else if (name == "fixed-det-factorization") fixed_det_factorization();
        else if (name == "thaddeus") thaddeus();
        else if (name == "bundle-consistency") bundle_consistency();
        else if (name == "residue") residue();
    }

    void ring_laws()
    {
        for (unsigned i = 0; i < config_.random_cases; ++i) {
            LaurentPoly p = random_poly(-5, 5, 8), q = random_poly(-5, 5, 8), r = random_poly(-5, 5, 8);
            guarded("ring-laws", case_params(i), [&] {
                bool ok = (p + q) * r == p * r + q * r && (p * q) * r == p * (q * r) && p * q == q * p;
                expect_true("ring-laws", case_params(i), ok, "distributivity/associativity violated for p=" +
                                                                 to_text(p) + " q=" + to_text(q) + " r=" + to_text(r));
            });
        }
    }

    void geometric_series()
    {
        for (unsigned i = 0; i < config_.random_cases; ++i) {
            long c = 0;
            while (c == 0)
                c = uniform(-3, 3);
            LaurentPoly m = LaurentPoly::monomial(c, static_cast<int>(uniform(-4, 4)), static_cast<int>(uniform(-4, 4)));
            auto T = static_cast<unsigned>(uniform(0, 10));
            guarded("geometric-series", case_params(i), [&] {
                TruncatedSeries prod = series_linear(m, T) * series_geometric(m, T);
                expect_true("geometric-series", case_params(i), prod == TruncatedSeries(LaurentPoly(1), T),
                            "(1 - m x) / (1 - m x) != 1 for m=" + to_text(m));
            });
        }
    }

    void exact_division()
    {
        for (unsigned i = 0; i < config_.random_cases; ++i) {
            LaurentPoly p = random_poly(-4, 4, 6);
            LaurentPoly q = random_nonzero_poly(-3, 3, 4);
            const std::string params = case_params(i);
            guarded("exact-division", params, [&] {
                LaurentPoly r = exact_div(p * q, q);
                expect_equal("exact-division", params, p, r);
            });
            if (q.size() >= 2) {
                LaurentPoly bad = p * q + LaurentPoly::monomial(1, static_cast<int>(uniform(-6, 6)), static_cast<int>(uniform(-6, 6)));
                bool threw = false;
                try {
                    LaurentPoly r = exact_div(bad, q);
                    threw = !(r * q == bad);
                } catch (const Error& e) {
                    threw = e.code() == ErrorCode::NotDivisible;
                }
                expect_true("exact-division", params + " non-divisible", threw,
                            "expected NotDivisible for " + to_text(bad) + " / " + to_text(q));
            }
        }
    }

    void palindrome_involution()
    {
        for (unsigned i = 0; i < config_.random_cases; ++i) {
            const auto n = static_cast<int>(uniform(0, 6));
            LaurentPoly p = random_poly(0, n, 8);
            expect_equal("palindrome-involution", case_params(i), p, palindrome_dual(palindrome_dual(p, n), n));
        }
    }

    void diagonal_morphism()
    {
        for (unsigned i = 0; i < config_.random_cases; ++i) {
            LaurentPoly p = random_poly(-5, 5, 8), q = random_poly(-5, 5, 8);
            expect_equal("diagonal-morphism", case_params(i), specialize_diagonal(p) * specialize_diagonal(q),
                         specialize_diagonal(p * q));
        }
    }

    void proj_space_identity()
    {
        for (long n = 0; n <= 50; ++n) {
            const LaurentPoly one(1);
            expect_equal("proj-space-identity", "n=" + std::to_string(n), one - LaurentPoly::uv_power(static_cast<int>(n)),
                         proj_space(n) * (one - LaurentPoly::uv_power(1)));
        }
    }

    void sym_generating()
    {
        for (long g = config_.g_min; g <= config_.g_max; ++g)
            for (long k = 0; k <= 8; ++k) {
                const std::string params = "g=" + std::to_string(g) + " k=" + std::to_string(k);
                guarded("sym-generating", params, [&] { expect_equal("sym-generating", params, sym_convolution(g, k), sym_power(g, k)); });
            }
    }

    void sym_shape()
    {
        for (long g = config_.g_min; g <= config_.g_max; ++g)
            for (long k = 0; k <= 2 * g - 2; ++k) {
                const std::string params = "g=" + std::to_string(g) + " k=" + std::to_string(k);
                guarded("sym-shape", params, [&] {
                    LaurentPoly s = sym_power(g, k);
                    bool ok = s == s.swapped() && !s.has_negative_exponent() &&
                              std::all_of(s.terms().begin(), s.terms().end(), [](const auto& t) { return sgn(t.second) > 0; }) &&
                              s.leading().first == Monomial{static_cast<int>(k), static_cast<int>(k)};
                    expect_true("sym-shape", params, ok, "unexpected shape: " + to_text(s));
                });
            }
    }

    void chi_bilinear()
    {
        for (long g = config_.g_min; g <= config_.g_max; ++g) {
            for (long qn1 = 0; qn1 <= 2; ++qn1)
                for (long qn2 = 0; qn2 <= 2; ++qn2)
                    for (long sn1 = 1; sn1 <= 2; ++sn1)
                        for (long sn2 = 0; sn2 <= 2; ++sn2) {
                            if (qn1 + qn2 == 0)
                                continue;
                            TypeVector q{qn1, qn2, qn1 ? 3 : 0, qn2 ? -1 : 0};
                            TypeVector s{sn1, sn2, 2, sn2 ? 1 : 0};
                            TypeVector s_up = s;
                            s_up.d1 += 1;
                            std::ostringstream params;
                            params << "g=" << g << " q=(" << q.n1 << "," << q.n2 << "," << q.d1 << "," << q.d2 << ") s=("
                                   << s.n1 << "," << s.n2 << "," << s.d1 << "," << s.d2 << ")";
                            expect_equal("chi-bilinear", params.str(), q.n1 - q.n2,
                                         chi_triples(q, s_up, g) - chi_triples(q, s, g));
                        }
        }
    }

    void emptiness()
    {
        for (const auto& spec : grid_specs(RankPair::R21)) {
            const std::string params = triple_params(spec);
            guarded("emptiness", params, [&] {
                auto interval = sigma_interval(spec);
                if (!interval) {
                    bool threw = false;
                    try {
                        critical_values(spec);
                    } catch (const Error& e) {
                        threw = e.code() == ErrorCode::EmptyFamily;
                    }
                    HodgeResult r = hodge_triples_closed(spec, {Rational(1, 2)});
                    HodgeResult s = hodge_triples_sum(spec, {Rational(1, 2)});
                    expect_true("emptiness", params, threw && r.empty() && r.poly.is_zero() && s.empty(),
                                "empty family did not produce the empty marker");
                    return;
                }
                StabilityValue above{interval->upper + Rational(1)};
                StabilityValue below{interval->lower - Rational(1, 3)};
                StabilityValue last_plus{interval->upper, Side::Plus};
                bool ok = true;
                for (const auto& s : {above, below, last_plus}) {
                    HodgeResult a = hodge_triples_closed(spec, s);
                    HodgeResult b = hodge_triples_sum(spec, s);
                    ok = ok && a.empty() && a.poly.is_zero() && b.empty() && b.poly.is_zero();
                }
                expect_true("emptiness", params, ok, "value outside the interval produced a nonempty result");
            });
        }
    }

    void cross_pipeline()
    {
        for (const auto& spec : grid_specs(RankPair::R21)) {
            if (!sigma_interval(spec))
                continue;
            for (const auto& sigma : chamber_representatives(spec)) {
                const std::string params = triple_params(spec) + " sigma=" + sigma.to_string();
                guarded("cross-pipeline", params, [&] {
                    expect_equal("cross-pipeline", params, hodge_triples_sum(spec, sigma).poly,
                                 hodge_triples_closed(spec, sigma).poly);
                });
            }
        }
    }

    void flip_paths()
    {
        for (const auto& spec : grid_specs(RankPair::R21)) {
            if (!sigma_interval(spec))
                continue;
            for (const auto& wall : critical_values(spec)) {
                if (Rational(wall.d_m) <= spec.mu1())
                    continue;
                const std::string params = triple_params(spec) + " d_M=" + std::to_string(wall.d_m);
                guarded("flip-paths", params, [&] {
                    expect_equal("flip-paths", params, flip_difference_raw(spec, wall.d_m), flip_difference(spec, wall.d_m));
                });
            }
        }
    }

    void chamber_constancy()
    {
        for (const auto& spec : grid_specs(RankPair::R21)) {
            auto interval = sigma_interval(spec);
            if (!interval)
                continue;
            std::vector<Rational> points{interval->lower};
            for (const auto& w : critical_values(spec))
                if (w.sigma > interval->lower)
                    points.push_back(w.sigma);
            for (std::size_t i = 0; i + 1 < points.size(); ++i) {
                const Rational lo = points[i], hi = points[i + 1];
                const Rational width = hi - lo;
                std::vector<StabilityValue> samples{
                    {lo + width / Rational(3)}, {lo + Rational(2) * width / Rational(3)}, {lo, Side::Plus}, {hi, Side::Minus}};
                const std::string params = triple_params(spec) + " chamber=(" + lo.to_string() + "," + hi.to_string() + ")";
                guarded("chamber-constancy", params, [&] {
                    HodgeResult ref = hodge_triples_closed(spec, samples[0]);
                    ChamberIndex ref_d0 = chamber_d0(spec, samples[0]);
                    bool ok = true;
                    for (std::size_t k = 1; k < samples.size(); ++k)
                        ok = ok && hodge_triples_closed(spec, samples[k]) == ref && chamber_d0(spec, samples[k]) == ref_d0;
                    expect_true("chamber-constancy", params, ok, "result changed inside a chamber");
                });
            }
        }
    }

    // Every nonempty result produced over the grid, labelled for reporting.
    std::vector<std::pair<std::string, HodgeResult>> grid_results()
    {
        std::vector<std::pair<std::string, HodgeResult>> out;
        for (RankPair rank : {RankPair::R21, RankPair::R12})
            for (const auto& spec : grid_specs(rank)) {
                if (!sigma_interval(spec))
                    continue;
                for (const auto& sigma : chamber_representatives(spec))
                    out.emplace_back(triple_params(spec) + " sigma=" + sigma.to_string(), hodge_triples_closed(spec, sigma));
            }
        for (long g = config_.g_min; g <= config_.g_max; ++g) {
            for (long d = config_.pair_d_min; d <= config_.pair_d_max; ++d)
                for (const auto& tau : pair_chamber_representatives(d))
                    for (bool fixed : {false, true})
                        out.emplace_back("pair g=" + std::to_string(g) + " d=" + std::to_string(d) + " tau=" + tau.to_string() +
                                             (fixed ? " fixed" : ""),
                                         hodge_pairs(g, d, tau, fixed));
            for (long d : config_.bundle_degrees)
                for (bool fixed : {false, true})
                    out.emplace_back("bundle g=" + std::to_string(g) + " d=" + std::to_string(d) + (fixed ? " fixed" : ""),
                                     hodge_bundles_odd(g, d, fixed));
        }
        return out;
    }

    void structural(const std::string& check)
    {
        std::vector<std::pair<std::string, HodgeResult>> results;
        try {
            results = grid_results();
        } catch (const std::exception& e) {
            record(check, "grid", false, std::string("exception: ") + e.what());
            return;
        }
        for (const auto& [params, r] : results) {
            if (r.empty())
                continue;
            const LaurentPoly& p = r.poly;
            const int n = static_cast<int>(*r.complex_dim);
            if (check == "hodge-symmetry") {
                expect_equal(check, params, p, p.swapped());
            } else if (check == "palindrome-duality") {
                bool ok = !p.is_zero() && p.min_u() >= 0 && p.min_v() >= 0 && p.max_u() <= n && p.max_v() <= n &&
                          palindrome_dual(p, n) == p && p.leading().first == Monomial{n, n} && p.leading().second == 1;
                expect_true(check, params, ok, "not palindromic at dim " + std::to_string(n) + ": " + to_text(p));
            } else {
                bool ok = std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return sgn(t.second) > 0; });
                expect_true(check, params, ok, "negative coefficient in " + to_text(p));
            }
        }
    }

    void duality()
    {
        for (const auto& spec : grid_specs(RankPair::R12)) {
            if (!sigma_interval(spec))
                continue;
            const TripleSpec dual{spec.g, RankPair::R21, -spec.d2, -spec.d1};
            for (const auto& sigma : chamber_representatives(spec)) {
                const std::string params = triple_params(spec) + " sigma=" + sigma.to_string();
                guarded("duality", params, [&] {
                    HodgeResult r12 = hodge_triples_closed(spec, sigma);
                    HodgeResult r21 = hodge_triples_closed(dual, sigma);
                    Rational x = (sigma.value - Rational(spec.d1 + spec.d2)) / Rational(3);
                    const long d0 = x.floor().get_si() + 1;
                    LaurentPoly oracle = rank12_formula(spec.g, spec.d1, spec.d2, d0);
                    expect_true("duality", params, r12.poly == r21.poly && r12.complex_dim == r21.complex_dim,
                                "dual families differ: " + to_text(r12.poly) + " vs " + to_text(r21.poly));
                    expect_equal("duality", params + " closed-form", oracle, r12.poly);
                });
            }
        }
    }

    void pairs_factorization()
    {
        for (const auto& spec : grid_specs(RankPair::R21)) {
            if (!sigma_interval(spec))
                continue;
            for (const auto& sigma : chamber_representatives(spec)) {
                const std::string params = triple_params(spec) + " sigma=" + sigma.to_string();
                guarded("pairs-factorization", params, [&] {
                    StabilityValue tau{(sigma.value + Rational(spec.d1 - 2 * spec.d2)) / Rational(3), sigma.side};
                    LaurentPoly lhs = jacobian(spec.g) * hodge_pairs(spec.g, spec.d1 - 2 * spec.d2, tau, false).poly;
                    expect_equal("pairs-factorization", params, hodge_triples_closed(spec, sigma).poly, lhs);
                });
            }
        }
    }

    void fixed_det_factorization()
    {
        for (long g = config_.g_min; g <= config_.g_max; ++g)
            for (long d = config_.pair_d_min; d <= config_.pair_d_max; ++d)
                for (const auto& tau : pair_chamber_representatives(d)) {
                    const std::string params = "g=" + std::to_string(g) + " d=" + std::to_string(d) + " tau=" + tau.to_string();
                    guarded("fixed-det-factorization", params, [&] {
                        expect_equal("fixed-det-factorization", params, hodge_pairs(g, d, tau, false).poly,
                                     jacobian(g) * hodge_pairs(g, d, tau, true).poly);
                    });
                }
    }

    void thaddeus()
    {
        for (long g = config_.g_min; g <= config_.g_max; ++g)
            for (long d = config_.pair_d_min; d <= config_.pair_d_max; ++d)
                for (const auto& tau : pair_chamber_representatives(d)) {
                    const std::string params = "g=" + std::to_string(g) + " d=" + std::to_string(d) + " tau=" + tau.to_string();
                    guarded("thaddeus", params, [&] {
                        expect_equal("thaddeus", params, poincare_pairs_fixed_det_thaddeus(g, d, tau),
                                     specialize_diagonal(hodge_pairs(g, d, tau, true).poly));
                    });
                }
    }

    void bundle_consistency()
    {
        for (long g = config_.g_min; g <= config_.g_max; ++g)
            for (long d : config_.bundle_degrees) {
                const std::string params = "g=" + std::to_string(g) + " d=" + std::to_string(d);
                guarded("bundle-consistency", params, [&] {
                    expect_equal("bundle-consistency", params, hodge_bundles_odd(g, d, false).poly, hodge_bundles_via_triples(g, d));
                    expect_equal("bundle-consistency", params + " fixed", hodge_bundles_odd(g, d, false).poly,
                                 jacobian(g) * hodge_bundles_odd(g, d, true).poly);
                });
            }
    }

    void residue()
    {
        for (long g = config_.g_min; g <= config_.g_max; ++g) {
            if (g == 2) {
                auto [s, r] = residue_extract_check(2, Rational(1), Rational(2), Rational(3), Rational(0), Rational(0));
                expect_equal("residue", "g=2 fixture (1,2,3) at u=v=0", Rational(25), s);
                expect_equal("residue", "g=2 fixture (1,2,3) at u=v=0", Rational(25), r);
            }
            const unsigned cases = std::max(20u, config_.random_cases / 5);
            for (unsigned i = 0; i < cases; ++i) {
                Rational a, b, c;
                do {
                    a = random_rational();
                    b = random_rational();
                    c = random_rational();
                } while (a.is_zero() || b.is_zero() || c.is_zero() || a == b || b == c || a == c);
                Rational u0 = random_rational(), v0 = random_rational();
                const std::string params = "g=" + std::to_string(g) + " " + case_params(i);
                guarded("residue", params, [&] {
                    auto [s, r] = residue_extract_check(g, a, b, c, u0, v0);
                    expect_equal("residue", params, s, r);
                });
            }
        }
    }

    const GridConfig& config_;
    std::mt19937_64 rng_;
    std::vector<CheckReport> reports_;
};

} // namespace

const std::vector<std::string>& check_names()
{
    return kChecks;
}

std::vector<CheckReport> run_suite(const GridConfig& config)
{
    if (config.g_min > config.g_max || config.d1_min > config.d1_max || config.d2_min > config.d2_max ||
        config.pair_d_min > config.pair_d_max)
        throw Error(ErrorCode::InvalidArgument, "empty parameter range");
    if (config.g_min < 2)
        throw Error(ErrorCode::GenusOutOfRange, "genus must be at least 2");
    for (const auto& name : config.checks)
        if (std::find(kChecks.begin(), kChecks.end(), name) == kChecks.end())
            throw Error(ErrorCode::InvalidArgument, "unknown check '" + name + "'");
    for (long d : config.bundle_degrees)
        if (d % 2 == 0)
            throw Error(ErrorCode::EvenDegree, "bundle degrees must be odd");
    return Runner(config).run();
}

SuiteSummary summarize(const std::vector<CheckReport>& reports)
{
    SuiteSummary s;
    for (const auto& r : reports)
        (r.status == CheckStatus::Pass ? s.passed : s.failed)++;
    return s;
}

} // namespace hodge
