#include "hodgepoly/triples.hpp"

#include <algorithm>
#include <string>

#include "hodgepoly/blocks.hpp"
#include "hodgepoly/error.hpp"
#include "hodgepoly/series.hpp"

namespace hodge {

namespace {

long to_long(const mpz_class& z)
{
    if (!z.fits_slong_p())
        throw Error(ErrorCode::InvalidArgument, "parameter out of range");
    return z.get_si();
}

// Floor of the open-side limit of x.
long resolved_floor(const Rational& x, Side side)
{
    if (side == Side::Minus)
        return to_long(x.ceil()) - 1;
    return to_long(x.floor());
}

// Whether value (with its side) lies in the open interval (lo, hi).
bool inside_open(const StabilityValue& s, const Rational& lo, const Rational& hi)
{
    bool above = s.value > lo || (s.value == lo && s.side == Side::Plus);
    bool below = s.value < hi || (s.value == hi && s.side == Side::Minus);
    return above && below;
}

HodgeResult empty_result()
{
    return {};
}

void require_nonnegative(const LaurentPoly& p, const char* what)
{
    if (p.has_negative_exponent())
        throw Error(ErrorCode::Internal, std::string(what) + " produced a negative exponent");
}

// coeff_{x^N} of  prefactor(x) / ((1-x)(1-uv x)) · ( (uv)^N/(1-(uv)^{-1}x) - (uv)^K/(1-(uv)^2 x) ),
// divided exactly by (1-uv). This is the shared shape of every closed
// chamber formula; prefactor is a product of (1+ux)^g(1+vx)^g-type factors.
LaurentPoly extract_chamber_formula(const TruncatedSeries& prefactor, unsigned N, long K)
{
    TruncatedSeries base = prefactor * series_geometric(LaurentPoly(1), N) * series_geometric(LaurentPoly::uv_power(1), N);
    LaurentPoly first = (base * series_geometric(LaurentPoly::uv_power(-1), N)).coeff(N) *
                        LaurentPoly::uv_power(static_cast<int>(N));
    LaurentPoly second = (base * series_geometric(LaurentPoly::uv_power(2), N)).coeff(N) *
                         LaurentPoly::uv_power(static_cast<int>(K));
    return exact_div(first - second, LaurentPoly(1) - LaurentPoly::uv_power(1));
}

TruncatedSeries curve_factor(long g, unsigned order)
{
    const auto gg = static_cast<unsigned>(g);
    return series_binomial(LaurentPoly::u(), gg, order) * series_binomial(LaurentPoly::v(), gg, order);
}

bool is_critical_21(const TripleSpec& spec, const Rational& sigma)
{
    // sigma = 3 d_M - d1 - d2 with mu1 <= d_M <= d1 - d2
    Rational dm = (sigma + Rational(spec.d1 + spec.d2)) / Rational(3);
    if (!dm.is_integer())
        return false;
    return Rational(dm) >= spec.mu1() && dm <= Rational(spec.d1 - spec.d2);
}

void require_21(const TripleSpec& spec)
{
    if (spec.rank != RankPair::R21)
        throw Error(ErrorCode::RankMismatch, "operation is defined for rank (2,1) only");
}

} // namespace

TripleSpec TripleSpec::dual() const
{
    if (rank == RankPair::R21)
        return *this;
    return TripleSpec{g, RankPair::R21, -d2, -d1};
}

long TripleSpec::complex_dim() const
{
    if (rank == RankPair::R21)
        return 3 * g - 2 + d1 - 2 * d2;
    return 3 * g - 2 + 2 * d1 - d2;
}

StabilityValue StabilityValue::parse(std::string_view text)
{
    StabilityValue s;
    if (text.size() > 1 && (text.back() == '+' || text.back() == '-')) {
        s.side = text.back() == '+' ? Side::Plus : Side::Minus;
        text.remove_suffix(1);
    }
    s.value = Rational::parse(text);
    return s;
}

std::string StabilityValue::to_string() const
{
    std::string r = value.to_string();
    if (side == Side::Plus)
        r += '+';
    else if (side == Side::Minus)
        r += '-';
    return r;
}

std::optional<Interval> sigma_interval(const TripleSpec& spec)
{
    Rational lo = spec.sigma_m();
    if (lo < Rational(0))
        return std::nullopt;
    return Interval{lo, spec.sigma_M()};
}

std::vector<CriticalValue> critical_values(const TripleSpec& spec)
{
    if (!sigma_interval(spec))
        throw Error(ErrorCode::EmptyFamily, "moduli empty: mu1 < mu2");
    const TripleSpec d = spec.dual();
    const long first = to_long(d.mu1().ceil());
    const long last = d.d1 - d.d2;
    std::vector<CriticalValue> walls;
    for (long dm = first; dm <= last; ++dm)
        walls.push_back({Rational(3 * dm - d.d1 - d.d2), dm});
    return walls;
}

ChamberIndex chamber_d0(const TripleSpec& spec, const StabilityValue& sigma)
{
    const TripleSpec d = spec.dual();
    if (sigma.side == Side::Exact && sigma_interval(d) && is_critical_21(d, sigma.value))
        throw Error(ErrorCode::OnWall, "sigma=" + sigma.value.to_string() + " is a critical value; use " +
                                           sigma.value.to_string() + "+ or " + sigma.value.to_string() + "-");
    Rational x = (sigma.value + Rational(d.d1 + d.d2)) / Rational(3);
    return {resolved_floor(x, sigma.side) + 1};
}

LaurentPoly flip_difference(const TripleSpec& spec, long d_m)
{
    require_21(spec);
    require_genus(spec.g);
    if (Rational(d_m) <= spec.mu1())
        throw Error(ErrorCode::WallAtSigmaM, "flip difference is undefined at the sigma_m wall");
    if (d_m > spec.d1 - spec.d2)
        throw Error(ErrorCode::InvalidArgument, "d_M beyond the last wall");

    // S_plus: sub (1,0,d_M,0), quotient (1,1,d1-d_M,d2); S_minus swaps the roles.
    const TypeVector line{1, 0, d_m, 0};
    const TypeVector pair{1, 1, spec.d1 - d_m, spec.d2};
    const long rank_plus = -chi_triples(pair, line, spec.g);
    const long rank_minus = -chi_triples(line, pair, spec.g);
    const LaurentPoly base = jacobian(spec.g) * moduli_11(spec.g, pair.d1, pair.d2, Side11::AboveSigmaM);
    return (proj_space(rank_minus) - proj_space(rank_plus)) * base;
}

LaurentPoly flip_difference_raw(const TripleSpec& spec, long d_m)
{
    require_21(spec);
    require_genus(spec.g);
    if (Rational(d_m) <= spec.mu1())
        throw Error(ErrorCode::WallAtSigmaM, "flip difference is undefined at the sigma_m wall");
    if (d_m > spec.d1 - spec.d2)
        throw Error(ErrorCode::InvalidArgument, "d_M beyond the last wall");

    const long n = spec.d1 - spec.d2 - d_m;
    const long m = 2 * d_m - spec.d1 + spec.g - 1;
    const auto order = static_cast<unsigned>(n);
    const LaurentPoly jac2 = pow(jacobian(spec.g), 2);
    const LaurentPoly numerator = (LaurentPoly::uv_power(static_cast<int>(n)) - LaurentPoly::uv_power(static_cast<int>(m))) * jac2;
    TruncatedSeries s = TruncatedSeries(numerator, order) * curve_factor(spec.g, order) *
                        series_geometric(LaurentPoly(1), order) * series_geometric(LaurentPoly::uv_power(1), order);
    return exact_div(s.coeff(order), LaurentPoly(1) - LaurentPoly::uv_power(1));
}

HodgeResult hodge_triples_closed(const TripleSpec& spec, const StabilityValue& sigma)
{
    require_genus(spec.g);
    const TripleSpec d = spec.dual();
    auto interval = sigma_interval(d);
    if (!interval)
        return empty_result();
    const ChamberIndex chamber = chamber_d0(d, sigma);
    if (!inside_open(sigma, interval->lower, interval->upper))
        return empty_result();
    const long top = d.d1 - d.d2;
    if (chamber.d0 > top)
        return empty_result();

    const auto N = static_cast<unsigned>(top - chamber.d0);
    const long K = -d.d1 + d.g - 1 + 2 * chamber.d0;
    LaurentPoly poly = extract_chamber_formula(curve_factor(d.g, N), N, K) * pow(jacobian(d.g), 2);
    require_nonnegative(poly, "triple formula");
    return {std::move(poly), spec.complex_dim()};
}

HodgeResult hodge_triples_sum(const TripleSpec& spec, const StabilityValue& sigma)
{
    require_genus(spec.g);
    const TripleSpec d = spec.dual();
    auto interval = sigma_interval(d);
    if (!interval)
        return empty_result();
    const ChamberIndex chamber = chamber_d0(d, sigma);
    if (!inside_open(sigma, interval->lower, interval->upper))
        return empty_result();
    const long top = d.d1 - d.d2;
    if (chamber.d0 > top)
        return empty_result();

    LaurentPoly total;
    for (long dm = chamber.d0; dm <= top; ++dm)
        total += flip_difference(d, dm);
    require_nonnegative(total, "flip sum");
    return {std::move(total), spec.complex_dim()};
}

ChamberIndex pair_chamber(long d, const StabilityValue& tau)
{
    if (tau.side == Side::Exact && tau.value.is_integer() && Rational(2) * tau.value >= Rational(d) &&
        tau.value <= Rational(d))
        throw Error(ErrorCode::OnWall, "tau=" + tau.value.to_string() + " is a critical value; use " +
                                           tau.value.to_string() + "+ or " + tau.value.to_string() + "-");
    return {resolved_floor(tau.value, tau.side) + 1};
}

HodgeResult hodge_pairs(long g, long d, const StabilityValue& tau, bool fixed_det)
{
    require_genus(g);
    const ChamberIndex chamber = pair_chamber(d, tau);
    if (!inside_open(tau, Rational(d, 2), Rational(d)))
        return empty_result();
    const long floor_tau = chamber.d0 - 1;
    const long top = d - 1 - floor_tau;
    if (top < 0)
        return empty_result();

    const auto N = static_cast<unsigned>(top);
    const long K = g + 1 - d + 2 * floor_tau;
    LaurentPoly poly = extract_chamber_formula(curve_factor(g, N), N, K);
    if (!fixed_det)
        poly *= jacobian(g);
    require_nonnegative(poly, "pair formula");
    return {std::move(poly), fixed_det ? g - 2 + d : 2 * g - 2 + d};
}

UniPoly poincare_pairs_fixed_det_thaddeus(long g, long d, const StabilityValue& tau)
{
    require_genus(g);
    const ChamberIndex chamber = pair_chamber(d, tau);
    if (!inside_open(tau, Rational(d, 2), Rational(d)))
        return {};
    const long floor_tau = chamber.d0 - 1;
    const long top = d - 1 - floor_tau;
    if (top < 0)
        return {};

    // Univariate in t, carried by the u exponent.
    const auto N = static_cast<unsigned>(top);
    auto t_pow = [](long k) { return LaurentPoly::monomial(1, static_cast<int>(k), 0); };
    TruncatedSeries base = series_binomial(t_pow(1), static_cast<unsigned>(2 * g), N) *
                           series_geometric(LaurentPoly(1), N) * series_geometric(t_pow(2), N);
    LaurentPoly first = (base * series_geometric(t_pow(-2), N)).coeff(N) * t_pow(2 * top);
    LaurentPoly second = (base * series_geometric(t_pow(4), N)).coeff(N) * t_pow(2 * g + 2 - 2 * d + 4 * floor_tau);
    LaurentPoly q = exact_div(first - second, LaurentPoly(1) - t_pow(2));

    UniPoly r;
    for (const auto& [m, c] : q.terms())
        r.add_term(m.u, c);
    return r;
}

HodgeResult hodge_bundles_odd(long g, long d, bool fixed_det)
{
    require_genus(g);
    if (d % 2 == 0)
        throw Error(ErrorCode::EvenDegree, "closed form requires odd degree");
    const auto gg = static_cast<unsigned>(g);
    const LaurentPoly one(1);
    const LaurentPoly jac = jacobian(g);
    const LaurentPoly mixed = pow(one + LaurentPoly::monomial(2, 1), gg) * pow(one + LaurentPoly::monomial(1, 2), gg);
    const LaurentPoly uvg = LaurentPoly::uv_power(static_cast<int>(g));
    LaurentPoly numerator = fixed_det ? mixed - uvg * jac : jac * mixed - uvg * jac * jac;
    LaurentPoly denominator = (one - LaurentPoly::uv_power(1)) * (one - LaurentPoly::uv_power(2));
    LaurentPoly poly = exact_div(numerator, denominator);
    require_nonnegative(poly, "bundle closed form");
    return {std::move(poly), fixed_det ? 3 * g - 3 : 4 * g - 3};
}

LaurentPoly hodge_bundles_via_triples(long g, long d)
{
    require_genus(g);
    if (d % 2 == 0)
        throw Error(ErrorCode::EvenDegree, "triple route requires odd degree");
    // Smallest d1 - 2 d2 with mu1 - mu2 > 2g - 2.
    const long d2 = (d - (4 * g - 3)) / 2;
    const TripleSpec spec{g, RankPair::R21, d, d2};
    HodgeResult small = hodge_triples_closed(spec, StabilityValue{spec.sigma_m(), Side::Plus});
    const long fibre_rank = -chi_triples(TypeVector{0, 1, 0, d2}, TypeVector{2, 0, d, 0}, g);
    return exact_div(small.poly, jacobian(g) * proj_space(fibre_rank));
}

std::pair<Rational, Rational> residue_extract_check(long g, const Rational& a, const Rational& b, const Rational& c,
                                                    const Rational& u0, const Rational& v0)
{
    require_genus(g);
    if (a.is_zero() || b.is_zero() || c.is_zero() || a == b || b == c || a == c)
        throw Error(ErrorCode::DegeneratePoles, "poles must be pairwise distinct and nonzero");

    // coeff_{x^0} x f(x)/(...) = coeff_{x^{2g-2}} (1+u0 x)^g (1+v0 x)^g / ((1-ax)(1-bx)(1-cx)).
    const auto order = static_cast<std::size_t>(2 * g - 2);
    auto mul = [order](const std::vector<Rational>& p, const std::vector<Rational>& q) {
        std::vector<Rational> r(order + 1, Rational(0));
        for (std::size_t i = 0; i <= order; ++i)
            for (std::size_t j = 0; i + j <= order; ++j)
                r[i + j] += p[i] * q[j];
        return r;
    };
    auto geometric = [order](const Rational& t) {
        std::vector<Rational> r(order + 1);
        for (std::size_t j = 0; j <= order; ++j)
            r[j] = pow(t, static_cast<long>(j));
        return r;
    };
    auto binomial = [order, g](const Rational& t) {
        std::vector<Rational> r(order + 1, Rational(0));
        for (std::size_t j = 0; j <= order && j <= static_cast<std::size_t>(g); ++j) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(g), j);
            r[j] = Rational(binom, 1) * pow(t, static_cast<long>(j));
        }
        return r;
    };
    auto s = mul(mul(binomial(u0), binomial(v0)), mul(geometric(a), mul(geometric(b), geometric(c))));
    Rational series_value = s[order];

    auto term = [&](const Rational& t, const Rational& p, const Rational& q) {
        return pow(t + u0, g) * pow(t + v0, g) / ((t - p) * (t - q));
    };
    Rational residue_value = term(a, b, c) + term(b, a, c) + term(c, a, b);
    return {series_value, residue_value};
}

std::vector<StabilityValue> chamber_representatives(const TripleSpec& spec)
{
    auto interval = sigma_interval(spec);
    if (!interval)
        return {};
    std::vector<Rational> points{interval->lower};
    for (const auto& w : critical_values(spec))
        if (w.sigma > interval->lower)
            points.push_back(w.sigma);
    std::vector<StabilityValue> reps;
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        reps.push_back({(points[i] + points[i + 1]) / Rational(2), Side::Exact});
    return reps;
}

std::vector<long> pair_walls(long d)
{
    std::vector<long> walls;
    if (d < 0)
        return walls;
    for (long k = to_long(Rational(d, 2).ceil()); k <= d; ++k)
        walls.push_back(k);
    return walls;
}

std::vector<StabilityValue> pair_chamber_representatives(long d)
{
    if (d <= 0)
        return {};
    std::vector<Rational> points{Rational(d, 2)};
    for (long w : pair_walls(d))
        if (Rational(w) > points.front())
            points.push_back(Rational(w));
    std::vector<StabilityValue> reps;
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        reps.push_back({(points[i] + points[i + 1]) / Rational(2), Side::Exact});
    return reps;
}

} // namespace hodge
