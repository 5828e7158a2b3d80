#ifndef HODGEPOLY_TRIPLES_HPP
#define HODGEPOLY_TRIPLES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hodgepoly/laurent.hpp"
#include "hodgepoly/rational.hpp"

namespace hodge {

enum class RankPair { R21, R12 };

/// Discrete parameters of a family of triple moduli spaces of rank (2,1) or (1,2).
struct TripleSpec {
    long g = 2;
    RankPair rank = RankPair::R21;
    long d1 = 0;
    long d2 = 0;

    long n1() const { return rank == RankPair::R21 ? 2 : 1; }
    long n2() const { return rank == RankPair::R21 ? 1 : 2; }
    Rational mu1() const { return Rational(d1, n1()); }
    Rational mu2() const { return Rational(d2, n2()); }
    Rational sigma_m() const { return mu1() - mu2(); }
    Rational sigma_M() const { return Rational(4) * sigma_m(); }

    /// The rank (2,1) family isomorphic to this one under E -> E^*.
    TripleSpec dual() const;
    /// Complex dimension of the stable locus.
    long complex_dim() const;

    friend bool operator==(const TripleSpec&, const TripleSpec&) = default;
};

enum class Side { Exact, Plus, Minus };

/// A stability parameter. Plus and Minus select the open side of the value,
/// i.e. value + epsilon and value - epsilon for infinitesimal epsilon.
struct StabilityValue {
    Rational value;
    Side side = Side::Exact;

    /// Accepts "p", "p/q", and either form followed by '+' or '-'.
    static StabilityValue parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const StabilityValue&, const StabilityValue&) = default;
};

struct ChamberIndex {
    long d0 = 0;
    friend bool operator==(const ChamberIndex&, const ChamberIndex&) = default;
};

struct HodgeResult {
    LaurentPoly poly;
    std::optional<long> complex_dim;  ///< empty for an empty moduli space

    bool empty() const { return !complex_dim.has_value(); }
    friend bool operator==(const HodgeResult&, const HodgeResult&) = default;
};

struct Interval {
    Rational lower;
    Rational upper;
};

struct CriticalValue {
    Rational sigma;
    long d_m = 0;
};

std::optional<Interval> sigma_interval(const TripleSpec& spec);

/// Walls sigma_c ascending, each with its d_M. Throws Error(EmptyFamily).
std::vector<CriticalValue> critical_values(const TripleSpec& spec);

/// Throws Error(OnWall) for an exact critical value.
ChamberIndex chamber_d0(const TripleSpec& spec, const StabilityValue& sigma);

/// e(S_minus) - e(S_plus) at the wall labelled d_M, as a product of blocks.
LaurentPoly flip_difference(const TripleSpec& spec, long d_m);
/// Same quantity by direct coefficient extraction from its generating function.
LaurentPoly flip_difference_raw(const TripleSpec& spec, long d_m);

HodgeResult hodge_triples_closed(const TripleSpec& spec, const StabilityValue& sigma);
HodgeResult hodge_triples_sum(const TripleSpec& spec, const StabilityValue& sigma);

/// Rank-2 pairs of degree d, with or without fixed determinant.
HodgeResult hodge_pairs(long g, long d, const StabilityValue& tau, bool fixed_det);
/// Chamber index [tau] + 1 of a pair stability value. Throws Error(OnWall).
ChamberIndex pair_chamber(long d, const StabilityValue& tau);
/// One-variable Poincaré formula for fixed-determinant pairs, extracted directly.
UniPoly poincare_pairs_fixed_det_thaddeus(long g, long d, const StabilityValue& tau);

/// Rank 2 odd degree bundle moduli from the closed form.
HodgeResult hodge_bundles_odd(long g, long d, bool fixed_det);
/// The same polynomial (non-fixed) recovered from the small-sigma triple moduli.
LaurentPoly hodge_bundles_via_triples(long g, long d);

/// (series value, residue value) of F(a,b,c) at (u0, v0).
std::pair<Rational, Rational> residue_extract_check(long g, const Rational& a, const Rational& b, const Rational& c,
                                                    const Rational& u0, const Rational& v0);

/// One value strictly inside each chamber of (sigma_m, sigma_M), ascending.
std::vector<StabilityValue> chamber_representatives(const TripleSpec& spec);

/// Walls (integers in [d/2, d]) and chamber midpoints for pairs of degree d.
std::vector<long> pair_walls(long d);
std::vector<StabilityValue> pair_chamber_representatives(long d);

} // namespace hodge

#endif
