#ifndef DIVCURVE_FACTOR_HPP
#define DIVCURVE_FACTOR_HPP

#include <utility>
#include <vector>

#include "divcurve/intpoly.hpp"

namespace divcurve {

struct Factorization {
    mpz_class content;  // signed; content * prod(factor^mult) == input
    std::vector<std::pair<IntPoly, int>> factors;
};

// Irreducible factorization over the rationals, factors primitive with
// positive leading coefficient, deterministic order.
Factorization factor(const IntPoly& a);

bool is_irreducible(const IntPoly& a);

}  // namespace divcurve

#endif
