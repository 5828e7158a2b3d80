#include "hodgepoly/series.hpp"

#include <algorithm>
#include <string>

#include "hodgepoly/error.hpp"

namespace hodge {

namespace {

void require_monomial(const LaurentPoly& m, const char* what)
{
    if (!m.is_monomial())
        throw Error(ErrorCode::NotMonomial, std::string(what) + " expects a single monomial");
}

} // namespace

TruncatedSeries::TruncatedSeries(unsigned order) : order_(order), coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(const LaurentPoly& c, unsigned order) : TruncatedSeries(order)
{
    coeffs_[0] = c;
}

const LaurentPoly& TruncatedSeries::coeff(unsigned j) const
{
    if (j > order_)
        throw Error(ErrorCode::OrderExceeded,
                    "coefficient x^" + std::to_string(j) + " requested from a series known to order " +
                        std::to_string(order_));
    return coeffs_[j];
}

void TruncatedSeries::set_coeff(unsigned j, LaurentPoly c)
{
    if (j > order_)
        throw Error(ErrorCode::OrderExceeded, "coefficient index beyond truncation order");
    coeffs_[j] = std::move(c);
}

void TruncatedSeries::restrict_to(unsigned order)
{
    if (order < order_) {
        order_ = order;
        coeffs_.resize(order + 1);
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    restrict_to(o.order_);
    for (unsigned j = 0; j <= order_; ++j)
        coeffs_[j] += o.coeffs_[j];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o)
{
    restrict_to(o.order_);
    for (unsigned j = 0; j <= order_; ++j)
        coeffs_[j] -= o.coeffs_[j];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const LaurentPoly& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const unsigned order = std::min(a.order_, b.order_);
    TruncatedSeries r(order);
    for (unsigned i = 0; i <= order; ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (unsigned j = 0; i + j <= order; ++j) {
            if (!b.coeffs_[j].is_zero())
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

TruncatedSeries series_geometric(const LaurentPoly& m, unsigned order)
{
    require_monomial(m, "series_geometric");
    TruncatedSeries s(order);
    LaurentPoly power(1);
    for (unsigned j = 0; j <= order; ++j) {
        s.set_coeff(j, power);
        power *= m;
    }
    return s;
}

TruncatedSeries series_binomial(const LaurentPoly& ell, unsigned g, unsigned order)
{
    require_monomial(ell, "series_binomial");
    TruncatedSeries s(order);
    LaurentPoly power(1);
    for (unsigned j = 0; j <= std::min(g, order); ++j) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), g, j);
        s.set_coeff(j, power * LaurentPoly(binom));
        power *= ell;
    }
    return s;
}

TruncatedSeries series_linear(const LaurentPoly& m, unsigned order)
{
    TruncatedSeries s(LaurentPoly(1), order);
    if (order >= 1)
        s.set_coeff(1, -m);
    return s;
}

} // namespace hodge
