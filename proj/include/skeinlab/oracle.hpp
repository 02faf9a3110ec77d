#pragma once

/// \file oracle.hpp
/// \brief Independent cross-checks for the Hecke engine.
///
/// Two classical constructions recompute the specializations of P without
/// touching the Hecke algebra:
///
///  * alexander_burau -- the reduced Burau representation of the braid gives
///    the Alexander polynomial of the closure via
///        det(I - Burau(b)) * (1 - t)/(1 - t^n),
///    defined up to a unit +-s^k (t = s^2).
///
///  * jones_kauffman -- the Kauffman bracket state sum over all 2^c
///    smoothings of the closure diagram gives the Jones polynomial exactly,
///        V = (-A)^{-3w} <D>,  re-expressed in s = t^{1/2} = A^{-2}.
///
/// Agreement of both with the engine's own specializations validates the
/// trace computation end to end.

#include "skeinlab/algebra.hpp"
#include "skeinlab/braid.hpp"

namespace skeinlab {

/// Thrown by jones_kauffman when the word has more crossings than the
/// state-sum bound allows.
class StateSumBound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Maximum crossing count accepted by jones_kauffman (2^c states).
inline constexpr int kBracketCrossingCap = 24;

/// Reduced Burau matrix of a braid word: (n-1)x(n-1) with entries Laurent
/// in s, t = s^2.  The product follows word order (leftmost letter first).
std::vector<std::vector<LaurentPoly>> burau_reduced(const BraidWord& b);

/// Alexander polynomial of the closure, up to a unit +-s^k.  Zero for
/// split closures.  Variable "s" with t = s^2.
LaurentPoly alexander_burau(const BraidWord& b);

/// Jones polynomial of the closure via the Kauffman bracket state sum,
/// in the variable s = t^{1/2}.  Exact (no unit ambiguity).
/// Throws StateSumBound when the word exceeds kBracketCrossingCap letters.
LaurentPoly jones_kauffman(const BraidWord& b);

/// True when a == +-s^k * b for some integer k (both zero counts as equal).
bool unit_equal(const LaurentPoly& a, const LaurentPoly& b);

/// Checks Delta(1/t) == (-1)^(mu-1) Delta(t) for a nonzero Alexander
/// polynomial given up to unit: reflects the exponent range and compares
/// with the sign demanded by the component count mu.  Zero passes trivially.
bool alexander_symmetric(const LaurentPoly& delta, int mu);

} // namespace skeinlab
