#ifndef DIVCURVE_LAURENT_HPP
#define DIVCURVE_LAURENT_HPP

#include <array>
#include <optional>
#include <utility>

#include "divcurve/algnum.hpp"
#include "divcurve/errors.hpp"

namespace divcurve {

enum class AbsMode { archimedean, nonarchimedean };

struct LaurentTerm {
    long e1, e2;
    mpq_class coeff;
};

// Bivariate Laurent polynomial with rational coefficients; at least the
// support bookkeeping assumes two or more terms.
class LaurentPoly2 {
  public:
    explicit LaurentPoly2(std::vector<LaurentTerm> terms);
    const std::vector<LaurentTerm>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    ComplexInterval eval(const ComplexInterval& x1, const ComplexInterval& x2) const;

  private:
    std::vector<LaurentTerm> terms_;  // sorted by (e1,e2), coefficients nonzero
};

struct NewtonData {
    mpq_class diameter_sq;  // exact D^2 = max squared support-point distance
    double diameter;        // D
    int sigma;              // term count - 1 (archimedean) or 1
    mpq_class max_ratio;    // exact max |p_i / p_j| >= 1
    double coeff_gap;       // log(max_ratio)
    double threshold;       // 16 D^2 (log sigma + coeff_gap)
};

struct EdgeData {
    std::pair<long, long> direction;             // reduced vector j
    QPoly edge_poly;                             // one-variable polynomial collected along the support line
    std::vector<AlgebraicNumber> roots;          // nonzero roots (contribution to Sigma)
    std::vector<int> multiplicities;
};

struct Certificate {
    std::pair<long, long> j;
    AlgebraicNumber alpha;
    bool exact;     // x1^j1 * x2^j2 == alpha exactly
    double lhs;     // log|x1^j1 x2^j2 - alpha| (upper bound; -inf when exact)
    double bound;   // -||L|| / (16 D^2)
    std::array<double, 2> L;
    double L_norm;
};

struct PadicCertificate {
    std::pair<long, long> j;
    AlgebraicNumber alpha;
    bool exact;
    mpq_class lhs_valuation;    // certified lower bound on v_p(x^j - alpha)
    mpq_class bound_sq_scaled;  // (16 D^2 lhs_valuation)^2 vs d^2 ||w||^2 comparison data
    std::array<mpq_class, 2> w; // valuation vector
    unsigned long p;
    double lhs_log;             // -lhs_valuation * log p
    double bound_log;           // -||w|| log p / (16 D^2)
};

NewtonData newton_data(const LaurentPoly2& P, AbsMode mode);

// The proof's finite set: for every support line in every reduced direction,
// the one-variable edge polynomial and its nonzero roots. Point-independent.
std::vector<EdgeData> build_sigma(const LaurentPoly2& P);

// Archimedean certificate for a zero (x1, x2) of P whose log-vector norm
// exceeds the threshold of newton_data.
Certificate certify(const LaurentPoly2& P, const AlgebraicNumber& x1, const AlgebraicNumber& x2);

// Non-archimedean mode with unit coefficients: everything runs in exact
// rational arithmetic on valuations. A rational on-curve point sharpens the
// result; without one the forced edge must have a single distinct root.
PadicCertificate certify_padic(const LaurentPoly2& P, unsigned long p, const mpq_class& v1, const mpq_class& v2,
                               std::optional<std::pair<mpq_class, mpq_class>> point = std::nullopt);

}  // namespace divcurve

#endif
