#include "hodgepoly/blocks.hpp"

#include <string>

#include "hodgepoly/error.hpp"
#include "hodgepoly/series.hpp"

namespace hodge {

void TypeVector::validate() const
{
    if (n1 < 0 || n2 < 0)
        throw Error(ErrorCode::InvalidArgument, "negative rank in triple type");
    if (n1 == 0 && n2 == 0)
        throw Error(ErrorCode::InvalidArgument, "triple type of rank (0,0)");
    if ((n1 == 0 && d1 != 0) || (n2 == 0 && d2 != 0))
        throw Error(ErrorCode::InvalidArgument, "zero bundle with nonzero degree");
}

void require_genus(long g)
{
    if (g < 2)
        throw Error(ErrorCode::GenusOutOfRange, "genus must be at least 2, got " + std::to_string(g));
}

LaurentPoly proj_space(long n)
{
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "projective space of negative dimension count");
    LaurentPoly r;
    for (long i = 0; i < n; ++i)
        r.add_term({static_cast<int>(i), static_cast<int>(i)}, 1);
    return r;
}

LaurentPoly jacobian(long g)
{
    require_genus(g);
    const auto gg = static_cast<unsigned>(g);
    return pow(LaurentPoly(1) + LaurentPoly::u(), gg) * pow(LaurentPoly(1) + LaurentPoly::v(), gg);
}

LaurentPoly sym_power(long g, long k)
{
    require_genus(g);
    if (k < 0)
        throw Error(ErrorCode::InvalidArgument, "negative symmetric power");
    const auto order = static_cast<unsigned>(k);
    const auto gg = static_cast<unsigned>(g);
    TruncatedSeries s = series_binomial(LaurentPoly::u(), gg, order) * series_binomial(LaurentPoly::v(), gg, order) *
                        series_geometric(LaurentPoly(1), order) * series_geometric(LaurentPoly::uv_power(1), order);
    return s.coeff(order);
}

LaurentPoly moduli_11(long g, long d1, long d2, Side11 side)
{
    require_genus(g);
    if (d1 < d2)
        return {};
    if (side == Side11::AtSigmaM)
        return jacobian(g) * jacobian(g);
    return jacobian(g) * sym_power(g, d1 - d2);
}

long chi_triples(const TypeVector& quotient, const TypeVector& sub, long g)
{
    const TypeVector& q = quotient;
    const TypeVector& s = sub;
    return (1 - g) * (q.n1 * s.n1 + q.n2 * s.n2 - q.n2 * s.n1)
         + q.n1 * s.d1 - s.n1 * q.d1
         + q.n2 * s.d2 - s.n2 * q.d2
         - q.n2 * s.d1 + s.n1 * q.d2;
}

} // namespace hodge
