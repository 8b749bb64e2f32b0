#ifndef DIVCURVE_INTPOLY_HPP
#define DIVCURVE_INTPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "divcurve/dense_poly.hpp"

namespace divcurve {

// Exact univariate polynomials: IntPoly over Z, QPoly over Q, and IntPoly2
// for Z[t][s] (inner variable t, outer variable s) used by elimination.
using IntPoly = DensePoly<mpz_class>;
using QPoly = DensePoly<mpq_class>;
using IntPoly2 = DensePoly<IntPoly>;

IntPoly intpoly_from_coeffs(std::vector<long> ascending);

mpz_class content(const IntPoly& a);          // gcd of coefficients, >= 0
IntPoly primitive_part(const IntPoly& a);     // content removed, sign kept
IntPoly normalized(const IntPoly& a);         // primitive with positive leading coefficient

// Primitive normalized gcd via a primitive pseudo-remainder sequence.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

bool divides(const IntPoly& d, const IntPoly& a);
IntPoly divexact_poly(const IntPoly& a, const IntPoly& d);

// Pseudo-remainder of a by b: lc(b)^(da-db+1) * a mod b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

IntPoly squarefree_part(const IntPoly& a);

// Yun decomposition: list of (primitive squarefree factor, multiplicity),
// multiplicities ascending; product of f^m times a constant equals the input.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& a);

IntPoly cyclotomic(unsigned m);

// Number of distinct real roots of a in the closed interval [lo, hi].
int sturm_count(const IntPoly& a, const mpq_class& lo, const mpq_class& hi);
int sturm_count_all(const IntPoly& a);

QPoly to_qpoly(const IntPoly& a);
IntPoly clear_denominators(const QPoly& a);  // primitive integer multiple

QPoly qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& rem);
QPoly qpoly_gcd_monic(const QPoly& a, const QPoly& b);

// String rendering in the project grammar, e.g. "t^2 - 3*t + 1".
std::string to_string(const IntPoly& a, const std::string& var = "t");

}  // namespace divcurve

#endif
