#include "hodgepoly/laurent.hpp"

#include <algorithm>
#include <limits>

#include "hodgepoly/error.hpp"

namespace hodge {

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(mpz_class(constant)) {}

LaurentPoly::LaurentPoly(const mpz_class& constant)
{
    if (constant != 0)
        terms_.emplace(Monomial{0, 0}, constant);
}

LaurentPoly LaurentPoly::monomial(const mpz_class& coeff, int u_exp, int v_exp)
{
    LaurentPoly p;
    p.add_term({u_exp, v_exp}, coeff);
    return p;
}

mpz_class LaurentPoly::coeff(int u_exp, int v_exp) const
{
    auto it = terms_.find({u_exp, v_exp});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_u() const
{
    int r = std::numeric_limits<int>::max();
    for (const auto& [m, c] : terms_)
        r = std::min(r, m.u);
    return r;
}

int LaurentPoly::max_u() const
{
    int r = std::numeric_limits<int>::min();
    for (const auto& [m, c] : terms_)
        r = std::max(r, m.u);
    return r;
}

int LaurentPoly::min_v() const
{
    int r = std::numeric_limits<int>::max();
    for (const auto& [m, c] : terms_)
        r = std::min(r, m.v);
    return r;
}

int LaurentPoly::max_v() const
{
    int r = std::numeric_limits<int>::min();
    for (const auto& [m, c] : terms_)
        r = std::max(r, m.v);
    return r;
}

bool LaurentPoly::has_negative_exponent() const
{
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.u < 0 || t.first.v < 0; });
}

void LaurentPoly::add_term(const Monomial& m, const mpz_class& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly r;
    mpz_class prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            prod = ca * cb;
            r.add_term(ma * mb, prod);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::swapped() const
{
    LaurentPoly r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(Monomial{m.v, m.u}, c);
    return r;
}

LaurentPoly pow(const LaurentPoly& p, unsigned k)
{
    LaurentPoly result(1);
    LaurentPoly base = p;
    while (k > 0) {
        if (k & 1u)
            result *= base;
        k >>= 1u;
        if (k > 0)
            base *= base;
    }
    return result;
}

// Long division from the top of the canonical order. If p = q·r then the
// Newton polygon of r is the Minkowski difference of those of p and q, so
// every quotient term must fall inside the exponent box computed below; a
// term outside it, or a leading coefficient that does not divide, proves
// that no Laurent quotient exists. The remainder's leading monomial strictly
// decreases and the box is finite, so the loop terminates.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q)
{
    if (q.is_zero())
        throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
    if (p.is_zero())
        return {};

    const int lo_u = p.min_u() - q.min_u();
    const int hi_u = p.max_u() - q.max_u();
    const int lo_v = p.min_v() - q.min_v();
    const int hi_v = p.max_v() - q.max_v();
    const auto& [q_lead_m, q_lead_c] = q.leading();

    LaurentPoly quotient;
    LaurentPoly rem = p;
    while (!rem.is_zero()) {
        const auto [r_lead_m, r_lead_c] = rem.leading();
        Monomial m = r_lead_m / q_lead_m;
        if (m.u < lo_u || m.u > hi_u || m.v < lo_v || m.v > hi_v || !mpz_divisible_p(r_lead_c.get_mpz_t(), q_lead_c.get_mpz_t()))
            throw Error(ErrorCode::NotDivisible, "polynomial is not an exact multiple of the divisor");
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), r_lead_c.get_mpz_t(), q_lead_c.get_mpz_t());
        for (const auto& [mq, cq] : q.terms())
            rem.add_term(mq * m, -(cq * c));
        quotient.add_term(m, c);
    }
    return quotient;
}

LaurentPoly palindrome_dual(const LaurentPoly& p, int n)
{
    LaurentPoly r;
    for (const auto& [m, c] : p.terms())
        r.add_term({n - m.u, n - m.v}, c);
    return r;
}

UniPoly::UniPoly(long constant)
{
    if (constant != 0)
        terms_.emplace(0, constant);
}

UniPoly UniPoly::monomial(const mpz_class& coeff, int exp)
{
    UniPoly p;
    p.add_term(exp, coeff);
    return p;
}

mpz_class UniPoly::coeff(int exp) const
{
    auto it = terms_.find(exp);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void UniPoly::add_term(int exp, const mpz_class& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    UniPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

UniPoly specialize_diagonal(const LaurentPoly& p)
{
    UniPoly r;
    for (const auto& [m, c] : p.terms())
        r.add_term(m.total_degree(), c);
    return r;
}

Rational specialize_point(const LaurentPoly& p, const Rational& u0, const Rational& v0)
{
    Rational sum(0);
    for (const auto& [m, c] : p.terms()) {
        if ((m.u < 0 && u0.is_zero()) || (m.v < 0 && v0.is_zero()))
            throw Error(ErrorCode::ZeroAtPole, "negative exponent evaluated at a zero coordinate");
        sum += Rational(c, 1) * pow(u0, m.u) * pow(v0, m.v);
    }
    return sum;
}

} // namespace hodge
