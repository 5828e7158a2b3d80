#ifndef HODGEPOLY_BLOCKS_HPP
#define HODGEPOLY_BLOCKS_HPP

#include "hodgepoly/laurent.hpp"

namespace hodge {

/// Numerical type (n1, n2, d1, d2) of a triple E2 -> E1.
struct TypeVector {
    long n1 = 0;
    long n2 = 0;
    long d1 = 0;
    long d2 = 0;

    /// Throws Error(InvalidArgument) for rank (0,0), negative ranks, or a
    /// nonzero degree on a zero bundle.
    void validate() const;

    friend bool operator==(const TypeVector&, const TypeVector&) = default;
};

enum class Side11 { AboveSigmaM, AtSigmaM };

void require_genus(long g);

/// e(P^{n-1}) = 1 + uv + ... + (uv)^{n-1}; zero for n = 0.
LaurentPoly proj_space(long n);

/// e(Jac X) = (1+u)^g (1+v)^g.
LaurentPoly jacobian(long g);

/// e(Sym^k X): the x^k coefficient of (1+ux)^g (1+vx)^g / ((1-x)(1-uvx)).
LaurentPoly sym_power(long g, long k);

/// Rank (1,1) triple moduli, chamber above sigma_m or the polystable locus at it.
LaurentPoly moduli_11(long g, long d1, long d2, Side11 side);

/// chi(T'', T') for quotient type `quotient` and sub type `sub`.
long chi_triples(const TypeVector& quotient, const TypeVector& sub, long g);

} // namespace hodge

#endif
