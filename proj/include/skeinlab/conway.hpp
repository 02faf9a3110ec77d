// The one-parameter family C_p of Conway polynomials of (p,2) torus closures,
// defined for every integer p by
//
//   C_0 = 0,  C_1 = 1,  C_{p+1} = z*C_p + C_{p-1},  C_{-p} = (-1)^{p+1} C_p,
//
// together with exact checkers for the algebraic identities the family
// satisfies.  All functions work in the variable "z".
#pragma once

#include "skeinlab/algebra.hpp"

namespace skeinlab {

// C_p by the memoized recursion (cache is per-thread and append-only).
const LaurentPoly& conway_torus(long p);

// C_p by the closed binomial form
//   C_p = sum_j binom(p-1-j, j) z^{p-2j-1}   (p > 0),
// extended by the sign rule; computed independently of the recursion so the
// two can cross-check each other.
LaurentPoly conway_torus_closed_form(long p);

// C_p(1); the Fibonacci numbers for p >= 1.
Int fibonacci_value(long p);

// C_{x+y} = C_x C_{y+1} + C_{x-1} C_y.
bool check_sum_rel(long x, long y);

// C_x C_k = sum_{j=0}^{k-1} (-1)^j C_{x+k-1-2j}, for k >= 1.
bool check_prod_expansion(long x, long k);

// C_x C_y - C_p C_q = (-1)^kappa { C_{x-kappa} C_{y-kappa} - C_{p-kappa} C_{q-kappa} }
// whenever x + y = p + q.
bool check_diff_prod(long x, long y, long p, long q, long kappa);

// z^m C_p = sum_{j=0}^{m} binom(m,j) (-1)^j C_{m+p-2j}, for m >= 0.
bool check_power_expansion(long m, long p);

// gcd(C_a, C_b) = C_{gcd(a,b)} up to sign, and C_a | C_{a*b} (a != 0);
// preconditions: not both zero.
bool check_gcd_props(long a, long b);

}  // namespace skeinlab
