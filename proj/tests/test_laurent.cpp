#include <doctest.h>

#include "hodgepoly/error.hpp"
#include "hodgepoly/format.hpp"
#include "hodgepoly/laurent.hpp"
#include "hodgepoly/series.hpp"
#include "oracle.hpp"

using namespace hodge;
using oracle::from;

namespace {

const LaurentPoly one(1);
const LaurentPoly u = LaurentPoly::u();
const LaurentPoly v = LaurentPoly::v();
LaurentPoly uv(int k) { return LaurentPoly::uv_power(k); }

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::Internal;
}

LaurentPoly m2_lambda_g2()
{
    return one + uv(1) + LaurentPoly::monomial(2, 2, 1) + LaurentPoly::monomial(2, 1, 2) + uv(2) + uv(3);
}

} // namespace

TEST_CASE("rational parsing and rounding")
{
    CHECK(Rational::parse("19/2") == Rational(19, 2));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK(Rational::parse("7").is_integer());
    CHECK(Rational(-5, 2).floor() == -3);
    CHECK(Rational(-5, 2).ceil() == -2);
    CHECK(Rational(13, 5).to_string() == "13/5");
    for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.5", "2//3"})
        CHECK(code_of([&] { Rational::parse(bad); }) == ErrorCode::Parse);
}

TEST_CASE("multiplication")
{
    CHECK(from((one + u) * (one + v)) == oracle::Poly{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}});
    CHECK(((one + u) * LaurentPoly()).is_zero());
    CHECK((one - uv(1)) * (one + uv(1) + uv(2)) == one - uv(3));
    CHECK(uv(-2) * uv(2) == one);
}

TEST_CASE("powers")
{
    CHECK(from(pow(one + u, 2)) == oracle::power(1 + oracle::U, 2));
    CHECK(pow(one + u + v, 0) == one);
    CHECK(pow(uv(1), 3) == LaurentPoly::monomial(1, 3, 3));
    CHECK(from(pow(one + u - v, 7)) == oracle::power(1 + oracle::U - oracle::V, 7));
}

TEST_CASE("exact division")
{
    CHECK(exact_div(one - uv(6), one - uv(1)) == one + uv(1) + uv(2) + uv(3) + uv(4) + uv(5));
    CHECK(code_of([&] { exact_div(one - u, one - uv(1)); }) == ErrorCode::NotDivisible);
    CHECK(code_of([&] { exact_div(one, LaurentPoly()); }) == ErrorCode::InvalidArgument);

    const LaurentPoly lhs = pow(one + LaurentPoly::monomial(2, 1), 2) * pow(one + LaurentPoly::monomial(1, 2), 2) -
                            uv(2) * pow(one + u, 2) * pow(one + v, 2);
    CHECK(exact_div(lhs, (one - uv(1)) * (one - uv(2))) == m2_lambda_g2());

    // Laurent quotients with negative exponents.
    const LaurentPoly q = uv(-1) + u * v * v;
    const LaurentPoly r = LaurentPoly::monomial(3, -2, 1) - v;
    CHECK(exact_div(q * r, q) == r);
    CHECK(exact_div(q * r, r) == q);
    CHECK(code_of([&] { exact_div(q * r + one, q); }) == ErrorCode::NotDivisible);
}

TEST_CASE("series")
{
    TruncatedSeries g = series_geometric(uv(1), 2);
    CHECK(g.coeff(0) == one);
    CHECK(g.coeff(1) == uv(1));
    CHECK(series_coeff(g, 2) == uv(2));
    CHECK(code_of([&] { g.coeff(3); }) == ErrorCode::OrderExceeded);

    TruncatedSeries inv = series_geometric(uv(-1), 1);
    CHECK(inv.coeff(1) == uv(-1));

    TruncatedSeries plain = series_geometric(one, 3);
    for (unsigned j = 0; j <= 3; ++j)
        CHECK(plain.coeff(j) == one);

    TruncatedSeries b = series_binomial(u, 2, 1);
    CHECK(b.coeff(1) == LaurentPoly::monomial(2, 1, 0));
    TruncatedSeries bv = series_binomial(v, 2, 3);
    CHECK(bv.coeff(2) == v * v);
    CHECK(bv.coeff(3).is_zero());
    TruncatedSeries b0 = series_binomial(u, 0, 2);
    CHECK(b0.coeff(0) == one);
    CHECK(b0.coeff(1).is_zero());
    CHECK(b0.coeff(2).is_zero());

    CHECK(code_of([&] { series_geometric(one + u, 2); }) == ErrorCode::NotMonomial);
    CHECK(code_of([&] { series_binomial(one + u, 2, 2); }) == ErrorCode::NotMonomial);

    TruncatedSeries prod = series_binomial(u, 2, 1) * series_binomial(v, 2, 1) * series_geometric(one, 1) *
                           series_geometric(uv(1), 1);
    CHECK(from(prod.coeff(1)) == oracle::sym(2, 1));
    CHECK(from(prod.coeff(1)) == oracle::Poly{{1, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 1, 1}});

    // Mixed orders truncate to the smaller one.
    CHECK((series_geometric(one, 5) * series_geometric(one, 2)).order() == 2);
}

TEST_CASE("specialization")
{
    UniPoly d = specialize_diagonal(m2_lambda_g2());
    CHECK(from(d) == std::map<int, long long>{{0, 1}, {2, 1}, {3, 4}, {4, 1}, {6, 1}});
    CHECK(specialize_point((one + u) * (one + v), Rational(1), Rational(1)) == Rational(4));
    CHECK(specialize_point(uv(-1), Rational(1, 2), Rational(1, 3)) == Rational(6));
    CHECK(code_of([&] { specialize_point(uv(-1), Rational(0), Rational(1)); }) == ErrorCode::ZeroAtPole);
}

TEST_CASE("palindrome dual")
{
    CHECK(palindrome_dual(one + uv(1), 1) == one + uv(1));
    CHECK(palindrome_dual(one, 2) == uv(2));
    CHECK(palindrome_dual(m2_lambda_g2(), 3) == m2_lambda_g2());
    const LaurentPoly p = one + LaurentPoly::monomial(5, 2, 0) + LaurentPoly::monomial(-3, 1, 3);
    CHECK(palindrome_dual(palindrome_dual(p, 4), 4) == p);
}

TEST_CASE("canonical order and formatting")
{
    const LaurentPoly p = m2_lambda_g2();
    CHECK(p.trailing().first == Monomial{0, 0});
    CHECK(p.leading().first == Monomial{3, 3});
    CHECK(to_text(p) == "1 + uv + 2 u v^2 + 2 u^2 v + (uv)^2 + (uv)^3");
    CHECK(to_latex(p) == "1 + uv + 2uv^{2} + 2u^{2}v + (uv)^{2} + (uv)^{3}");
    CHECK(to_text(specialize_diagonal(p)) == "1 + t^2 + 4 t^3 + t^4 + t^6");
    CHECK(to_text(LaurentPoly()) == "0");
    CHECK(to_text(one - u) == "1 - u");
    CHECK(to_text(uv(-1) - LaurentPoly::monomial(3, 0, 2)) == "(uv)^-1 - 3 v^2");
    CHECK(to_text(p) == to_text(p.swapped()));
}
