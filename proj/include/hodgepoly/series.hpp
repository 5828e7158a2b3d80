#ifndef HODGEPOLY_SERIES_HPP
#define HODGEPOLY_SERIES_HPP

#include <vector>

#include "hodgepoly/laurent.hpp"

namespace hodge {

/// Power series in x over LaurentPoly, known exactly up to x^order.
class TruncatedSeries {
public:
    /// The zero series at the given order.
    explicit TruncatedSeries(unsigned order);
    /// The constant series c at the given order.
    TruncatedSeries(const LaurentPoly& c, unsigned order);

    unsigned order() const { return order_; }
    const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

    /// Coefficient of x^j. Throws Error(OrderExceeded) if j > order().
    const LaurentPoly& coeff(unsigned j) const;
    void set_coeff(unsigned j, LaurentPoly c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const LaurentPoly& scalar);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const LaurentPoly& s) { return a *= s; }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

private:
    void restrict_to(unsigned order);

    unsigned order_;
    std::vector<LaurentPoly> coeffs_;
};

/// 1/(1 - m·x) up to x^order. Throws Error(NotMonomial) unless m is a single term.
TruncatedSeries series_geometric(const LaurentPoly& m, unsigned order);

/// (1 + ell·x)^g up to x^order. Throws Error(NotMonomial) unless ell is a single term.
TruncatedSeries series_binomial(const LaurentPoly& ell, unsigned g, unsigned order);

/// 1 - m·x as a series (used for identity checks).
TruncatedSeries series_linear(const LaurentPoly& m, unsigned order);

inline const LaurentPoly& series_coeff(const TruncatedSeries& s, unsigned j) { return s.coeff(j); }

} // namespace hodge

#endif
