#ifndef HODGEPOLY_LAURENT_HPP
#define HODGEPOLY_LAURENT_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hodgepoly/rational.hpp"

namespace hodge {

/// Exponent pair of the monomial u^u v^v. Either exponent may be negative.
struct Monomial {
    int u = 0;
    int v = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    Monomial operator*(const Monomial& o) const { return {u + o.u, v + o.v}; }
    Monomial operator/(const Monomial& o) const { return {u - o.u, v - o.v}; }
    int total_degree() const { return u + v; }
};

/// Canonical term order: total degree ascending, then the u exponent
/// ascending. It is translation invariant, so leading and trailing terms of a
/// product are the products of leading and trailing terms.
struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree();
        return a.u < b.u;
    }
};

class UniPoly;

/// Sparse bivariate Laurent polynomial in u, v with integer coefficients.
/// Zero coefficients are never stored, so equality is structural.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, mpz_class, CanonicalOrder>;

    LaurentPoly() = default;
    LaurentPoly(long constant);
    LaurentPoly(const mpz_class& constant);

    static LaurentPoly monomial(const mpz_class& coeff, int u_exp, int v_exp);
    static LaurentPoly monomial(int u_exp, int v_exp) { return monomial(1, u_exp, v_exp); }
    /// (uv)^k
    static LaurentPoly uv_power(int k) { return monomial(1, k, k); }
    static LaurentPoly u() { return monomial(1, 1, 0); }
    static LaurentPoly v() { return monomial(1, 0, 1); }

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    mpz_class coeff(int u_exp, int v_exp) const;

    /// Largest and smallest terms in the canonical order. Undefined on zero.
    const std::pair<const Monomial, mpz_class>& leading() const { return *terms_.rbegin(); }
    const std::pair<const Monomial, mpz_class>& trailing() const { return *terms_.begin(); }

    int min_u() const;
    int max_u() const;
    int min_v() const;
    int max_v() const;
    bool has_negative_exponent() const;

    /// Adds c·u^a v^b, dropping the term if it cancels.
    void add_term(const Monomial& m, const mpz_class& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// p(v, u)
    LaurentPoly swapped() const;

private:
    TermMap terms_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned k);

/// Exact quotient p / q in the Laurent ring. Throws Error(NotDivisible) when
/// no Laurent polynomial r with r·q = p exists, and Error(InvalidArgument)
/// when q is zero.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// (uv)^n · p(1/u, 1/v)
LaurentPoly palindrome_dual(const LaurentPoly& p, int n);

/// Univariate Laurent polynomial in t, used for Poincaré polynomials.
class UniPoly {
public:
    using TermMap = std::map<int, mpz_class>;

    UniPoly() = default;
    UniPoly(long constant);
    static UniPoly monomial(const mpz_class& coeff, int exp);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpz_class coeff(int exp) const;
    void add_term(int exp, const mpz_class& c);

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

/// Poincaré specialization p(t, t).
UniPoly specialize_diagonal(const LaurentPoly& p);

/// Exact value p(u0, v0). Throws Error(ZeroAtPole) if a negative exponent
/// meets a zero coordinate.
Rational specialize_point(const LaurentPoly& p, const Rational& u0, const Rational& v0);

} // namespace hodge

#endif
