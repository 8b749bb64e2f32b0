#ifndef DIVCURVE_ALGNUM_HPP
#define DIVCURVE_ALGNUM_HPP

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "divcurve/factor.hpp"
#include "divcurve/rootbox.hpp"

namespace divcurve {

// An algebraic number: irreducible primitive minimal polynomial with positive
// leading coefficient, plus a box isolating one of its complex roots.
class AlgebraicNumber {
  public:
    AlgebraicNumber();  // zero
    AlgebraicNumber(IntPoly minpoly, RootBox box);

    static AlgebraicNumber from_rational(const mpq_class& v);
    static AlgebraicNumber from_int(long v);

    const IntPoly& minpoly() const { return minpoly_; }
    const RootBox& box() const { return box_; }
    int degree() const { return minpoly_.degree(); }

    bool is_rational() const { return degree() == 1; }
    mpq_class rational_value() const;
    bool is_zero() const;
    bool is_one() const;
    bool is_real() const;
    int real_sign() const;  // sign of a real algebraic number

    ComplexInterval interval(mpfr_prec_t prec) const;
    void refine(const mpq_class& width) const;

    AlgebraicNumber neg() const;
    AlgebraicNumber inv() const;
    AlgebraicNumber pow(long n) const;
    friend AlgebraicNumber mul(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber add(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber sub(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber div(const AlgebraicNumber& a, const AlgebraicNumber& b);

    bool equals(const AlgebraicNumber& o) const;

  private:
    IntPoly minpoly_;
    mutable RootBox box_;
};

// All roots of a nonzero polynomial, grouped by irreducible factor, sorted.
std::vector<AlgebraicNumber> algebraic_roots(const IntPoly& a);

// The unique root of `vanishing` approximated by `value` at increasing
// precision. `vanishing` need not be irreducible.
AlgebraicNumber algnum_from_value(const IntPoly& vanishing,
                                  const std::function<ComplexInterval(mpfr_prec_t)>& value);

// ---------------------------------------------------------------------------
// Heights and places
// ---------------------------------------------------------------------------

struct PadicEntry {
    mpq_class value_exponent;  // |x|_v = p^value_exponent
    int weight;                // sum of local degrees sharing this value
};

struct PadicAbsProfile {
    unsigned long p;
    std::vector<PadicEntry> entries;  // weights sum to deg(minpoly)
};

struct TupleHeightReport {
    std::vector<double> coordinate_heights;
    double tuple_height;
    double exponential_height;
};

// Absolute logarithmic Weil height via the Mahler-measure formula
// (1/deg P) * log(a0 * prod max{1,|conjugate|}), certified to `tol`.
double weil_height(const AlgebraicNumber& x, double tol = 1e-12);
RealInterval weil_height_interval(const AlgebraicNumber& x, double tol);

// The same height assembled from local data: archimedean terms over the
// conjugates plus finite places read off p-adic Newton polygon slopes.
double height_by_places(const AlgebraicNumber& x, double tol = 1e-12);

PadicAbsProfile padic_profile(const AlgebraicNumber& x, unsigned long p);

// Lower Newton-polygon segments of an arbitrary nonzero polynomial at p:
// (slope, horizontal length) pairs; root absolute values are p^slope.
std::vector<PadicEntry> padic_newton_slopes(const IntPoly& P, unsigned long p);

bool is_S_integral(const std::vector<AlgebraicNumber>& x, const std::set<unsigned long>& S);

// Order m with minpoly == cyclotomic(m), if the number is a root of unity.
std::optional<unsigned long> is_root_of_unity(const AlgebraicNumber& x);

struct MultDependence {
    long k;
    long l;
    unsigned long torsion_order;
};

// Search for a reduced pair (k,l), max(|k|,|l|) <= bound, with z^k * a^l a
// root of unity; candidates pre-filtered by k*h(z) == |l|*h(a) within
// certified error, winners verified exactly.
std::optional<MultDependence> mult_dependence(const AlgebraicNumber& z, const AlgebraicNumber& a, long bound);

TupleHeightReport tuple_height(const std::vector<AlgebraicNumber>& x, double tol = 1e-12);

}  // namespace divcurve

#endif
