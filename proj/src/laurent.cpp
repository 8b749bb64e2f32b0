#include "divcurve/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace divcurve {
namespace {

std::pair<long, long> reduce_direction(long d1, long d2) {
    if (d1 == 0 && d2 == 0) throw std::logic_error("zero direction");
    long g = std::gcd(std::abs(d1), std::abs(d2));
    d1 /= g;
    d2 /= g;
    if (d1 < 0 || (d1 == 0 && d2 < 0)) {
        d1 = -d1;
        d2 = -d2;
    }
    return {d1, d2};
}

long vp_int(mpz_class n, unsigned long p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    long v = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++v;
    }
    return v;
}

long vp_rat(const mpq_class& q, unsigned long p) { return vp_int(q.get_num(), p) - vp_int(q.get_den(), p); }

bool poly_less_int(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        int c = cmp(a[static_cast<size_t>(i)], b[static_cast<size_t>(i)]);
        if (c != 0) return c < 0;
    }
    return false;
}

// Keep the operand interval away from zero so negative powers stay defined.
ComplexInterval nonzero_interval(const AlgebraicNumber& x, mpfr_prec_t prec) {
    if (x.is_zero()) throw std::domain_error("coordinate is zero");
    ComplexInterval v = x.interval(prec);
    mpq_class w(1, 1024);
    while (v.abs2().contains_zero()) {
        x.refine(w);
        v = x.interval(prec);
        w /= 1024;
    }
    return v;
}

}  // namespace

LaurentPoly2::LaurentPoly2(std::vector<LaurentTerm> terms) {
    std::map<std::pair<long, long>, mpq_class> acc;
    for (const auto& t : terms) acc[{t.e1, t.e2}] += t.coeff;
    for (auto& [e, c] : acc) {
        c.canonicalize();
        if (c != 0) terms_.push_back({e.first, e.second, c});
    }
}

ComplexInterval LaurentPoly2::eval(const ComplexInterval& x1, const ComplexInterval& x2) const {
    mpfr_prec_t prec = std::max(x1.prec(), x2.prec());
    ComplexInterval acc(prec);
    acc.re = RealInterval::exact_int(0, prec);
    acc.im = RealInterval::exact_int(0, prec);
    for (const auto& t : terms_) {
        ComplexInterval term = x1.pow(t.e1) * x2.pow(t.e2);
        ComplexInterval c = ComplexInterval::from_mpq(t.coeff, mpq_class(0), prec);
        acc = acc + term * c;
    }
    return acc;
}

NewtonData newton_data(const LaurentPoly2& P, AbsMode mode) {
    const auto& ts = P.terms();
    if (ts.size() < 2) throw std::invalid_argument("newton_data: at least 2 nonzero terms required");
    NewtonData nd;
    nd.diameter_sq = 0;
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = i + 1; j < ts.size(); ++j) {
            long d1 = ts[i].e1 - ts[j].e1, d2 = ts[i].e2 - ts[j].e2;
            mpq_class d2q(d1 * d1 + d2 * d2);
            if (d2q > nd.diameter_sq) nd.diameter_sq = d2q;
        }
    nd.diameter = std::sqrt(nd.diameter_sq.get_d());
    nd.sigma = mode == AbsMode::archimedean ? static_cast<int>(ts.size()) - 1 : 1;
    mpq_class maxc(0), minc(0);
    for (const auto& t : ts) {
        mpq_class a = abs(t.coeff);
        if (maxc == 0 || a > maxc) maxc = a;
        if (minc == 0 || a < minc) minc = a;
    }
    nd.max_ratio = maxc / minc;
    nd.coeff_gap = std::log(nd.max_ratio.get_d());
    nd.threshold = 16.0 * nd.diameter_sq.get_d() * (std::log(static_cast<double>(nd.sigma)) + nd.coeff_gap);
    return nd;
}

std::vector<EdgeData> build_sigma(const LaurentPoly2& P) {
    const auto& ts = P.terms();
    if (ts.size() < 2) throw std::invalid_argument("build_sigma: at least 2 nonzero terms required");
    // group support points into lines: key (reduced direction, cross-product offset)
    std::map<std::pair<std::pair<long, long>, long>, std::vector<size_t>> lines;
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = i + 1; j < ts.size(); ++j) {
            auto dir = reduce_direction(ts[j].e1 - ts[i].e1, ts[j].e2 - ts[i].e2);
            long c = ts[i].e1 * dir.second - ts[i].e2 * dir.first;
            auto& members = lines[{dir, c}];
            for (size_t k : {i, j})
                if (std::find(members.begin(), members.end(), k) == members.end()) members.push_back(k);
        }
    std::vector<EdgeData> out;
    for (auto& [key, members] : lines) {
        const auto& [dir, cross] = key;
        (void)cross;
        // collect lambda-offsets along the line
        std::sort(members.begin(), members.end());
        long base1 = ts[members[0]].e1, base2 = ts[members[0]].e2;
        long lmin = 0, lmax = 0;
        std::vector<std::pair<long, mpq_class>> entries;
        for (size_t k : members) {
            long lam;
            if (dir.first != 0)
                lam = (ts[k].e1 - base1) / dir.first;
            else
                lam = (ts[k].e2 - base2) / dir.second;
            entries.emplace_back(lam, ts[k].coeff);
            lmin = std::min(lmin, lam);
            lmax = std::max(lmax, lam);
        }
        std::vector<mpq_class> coeffs(static_cast<size_t>(lmax - lmin) + 1, mpq_class(0));
        for (const auto& [lam, c] : entries) coeffs[static_cast<size_t>(lam - lmin)] = c;
        QPoly G(std::move(coeffs));
        EdgeData e;
        e.direction = dir;
        e.edge_poly = G;
        IntPoly Gz = clear_denominators(G);
        Factorization f = factor(Gz);
        for (const auto& [g, mult] : f.factors) {
            if (g == IntPoly(std::vector<mpz_class>{0, 1})) continue;  // T = 0 is not a root in the torus
            for (const auto& b : isolate_roots(g, mpq_class(1, 4))) {
                e.roots.emplace_back(g, b);
                e.multiplicities.push_back(mult);
            }
        }
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const EdgeData& a, const EdgeData& b) {
        long na = a.direction.first * a.direction.first + a.direction.second * a.direction.second;
        long nb = b.direction.first * b.direction.first + b.direction.second * b.direction.second;
        if (na != nb) return na < nb;
        return a.direction < b.direction;
    });
    return out;
}

namespace {

struct Cand {
    std::pair<long, long> j;
    AlgebraicNumber alpha;
    bool exact_checked = false;
    bool failed = false;
};

std::vector<Cand> candidate_list(const LaurentPoly2& P, const mpq_class& diameter_sq) {
    std::vector<Cand> cands;
    for (const auto& e : build_sigma(P)) {
        mpq_class jn(e.direction.first * e.direction.first + e.direction.second * e.direction.second);
        if (jn > diameter_sq) continue;  // the statement only allows ||j|| <= D
        for (const auto& r : e.roots) {
            bool dup = false;
            for (const auto& c : cands)
                if (c.j == e.direction && c.alpha.minpoly() == r.minpoly() && c.alpha.box().re_lo == r.box().re_lo &&
                    c.alpha.box().im_lo == r.box().im_lo)
                    dup = true;
            if (!dup) cands.push_back({e.direction, r});
        }
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        long na = a.j.first * a.j.first + a.j.second * a.j.second;
        long nb = b.j.first * b.j.first + b.j.second * b.j.second;
        if (na != nb) return na < nb;
        if (a.j != b.j) return a.j < b.j;
        if (a.alpha.minpoly() != b.alpha.minpoly()) return poly_less_int(a.alpha.minpoly(), b.alpha.minpoly());
        return rootbox_less(a.alpha.box(), b.alpha.box());
    });
    return cands;
}

}  // namespace

Certificate certify(const LaurentPoly2& P, const AlgebraicNumber& x1, const AlgebraicNumber& x2) {
    NewtonData nd = newton_data(P, AbsMode::archimedean);

    // on-curve verification to certified precision
    for (mpfr_prec_t prec : {128, 256, 512}) {
        ComplexInterval v = P.eval(nonzero_interval(x1, prec), nonzero_interval(x2, prec));
        if (!v.contains_zero()) throw std::invalid_argument("certify: point is not a zero of the polynomial");
    }

    // threshold as an interval from its exact ingredients
    auto threshold_iv = [&](mpfr_prec_t prec) {
        RealInterval logsig = RealInterval::exact_int(nd.sigma, prec).log();
        RealInterval gap = RealInterval::from_mpq(nd.max_ratio, prec).log();
        return RealInterval::from_mpq(16 * nd.diameter_sq, prec) * (logsig + gap);
    };
    auto lnorm_iv = [&](mpfr_prec_t prec) {
        ComplexInterval a = nonzero_interval(x1, prec), b = nonzero_interval(x2, prec);
        RealInterval l1 = a.abs().log(), l2 = b.abs().log();
        return std::make_tuple((l1.sqr() + l2.sqr()).sqrt(), l1, l2);
    };

    mpfr_prec_t prec = 160;
    bool hyp = false;
    RealInterval Lnorm(prec), L1(prec), L2(prec);
    for (int round = 0; round < 8 && !hyp; ++round) {
        std::tie(Lnorm, L1, L2) = lnorm_iv(prec);
        RealInterval thr = threshold_iv(prec);
        if (Lnorm.certainly_gt(thr)) {
            hyp = true;
            break;
        }
        if (Lnorm.certainly_le(thr))
            throw hypothesis_not_met("certify: ||L|| does not exceed 16 D^2 (log sigma + coeff gap)");
        prec *= 2;
    }
    if (!hyp) throw hypothesis_not_met("certify: hypothesis could not be certified");

    std::vector<Cand> cands = candidate_list(P, nd.diameter_sq);

    for (int round = 0; round < 14; ++round) {
        std::tie(Lnorm, L1, L2) = lnorm_iv(prec);
        RealInterval bound = -(Lnorm / RealInterval::from_mpq(16 * nd.diameter_sq, prec));
        ComplexInterval x1i = nonzero_interval(x1, prec), x2i = nonzero_interval(x2, prec);
        bool blocked = false;
        for (auto& c : cands) {
            if (c.failed) continue;
            ComplexInterval z = x1i.pow(c.j.first) * x2i.pow(c.j.second);
            ComplexInterval diff = z - c.alpha.interval(prec);
            RealInterval a2 = diff.abs2();
            if (a2.contains_zero()) {
                if (!c.exact_checked && round >= 1) {
                    c.exact_checked = true;
                    AlgebraicNumber zval = mul(x1.pow(c.j.first), x2.pow(c.j.second));
                    if (zval.equals(c.alpha)) {
                        Certificate cert;
                        cert.j = c.j;
                        cert.alpha = c.alpha;
                        cert.exact = true;
                        cert.lhs = -std::numeric_limits<double>::infinity();
                        cert.bound = mpfr_get_d(bound.lo.get(), MPFR_RNDD);
                        cert.L = {L1.mid(), L2.mid()};
                        cert.L_norm = Lnorm.mid();
                        return cert;
                    }
                }
                blocked = true;
                break;  // cannot resolve this candidate yet; better ones must not be skipped
            }
            RealInterval lhs = a2.log() / RealInterval::exact_int(2, prec);
            if (lhs.certainly_le(bound)) {
                Certificate cert;
                cert.j = c.j;
                cert.alpha = c.alpha;
                cert.exact = false;
                cert.lhs = mpfr_get_d(lhs.hi.get(), MPFR_RNDU);
                cert.bound = mpfr_get_d(bound.lo.get(), MPFR_RNDD);
                cert.L = {L1.mid(), L2.mid()};
                cert.L_norm = Lnorm.mid();
                return cert;
            }
            if (lhs.certainly_gt(bound)) {
                c.failed = true;
                continue;
            }
            blocked = true;
            break;
        }
        if (!blocked) {
            bool all_failed = true;
            for (const auto& c : cands)
                if (!c.failed) all_failed = false;
            if (all_failed) throw no_certificate_found("certify: all Sigma candidates certified to fail");
        }
        prec *= 2;
        mpq_class w(1, 1);
        mpz_class den(1);
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(std::min<mpfr_prec_t>(prec, 1 << 14)));
        w = mpq_class(mpz_class(1), den);
        x1.refine(w);
        x2.refine(w);
    }
    throw no_certificate_found("certify: search did not terminate within precision budget");
}

PadicCertificate certify_padic(const LaurentPoly2& P, unsigned long p, const mpq_class& v1, const mpq_class& v2,
                               std::optional<std::pair<mpq_class, mpq_class>> point) {
    const auto& ts = P.terms();
    if (ts.size() < 2) throw std::invalid_argument("certify_padic: at least 2 nonzero terms required");
    for (const auto& t : ts)
        if (vp_rat(t.coeff, p) != 0)
            throw std::invalid_argument("certify_padic: coefficients must be p-adic units");
    if (v1 == 0 && v2 == 0) throw hypothesis_not_met("certify_padic: valuation vector is zero");

    NewtonData nd = newton_data(P, AbsMode::nonarchimedean);

    if (point) {
        mpq_class val = 0;
        // exact on-curve check
        mpq_class sum = 0;
        for (const auto& t : ts) {
            mpq_class term = t.coeff;
            auto powq = [](mpq_class b, long e) {
                mpq_class r(1);
                bool inv = e < 0;
                for (long i = 0; i < std::abs(e); ++i) r *= b;
                if (inv) r = 1 / r;
                return r;
            };
            term *= powq(point->first, t.e1);
            term *= powq(point->second, t.e2);
            sum += term;
        }
        if (sum != 0) throw std::invalid_argument("certify_padic: point is not on the curve");
        if (vp_rat(point->first, p) != v1 || vp_rat(point->second, p) != v2)
            throw std::invalid_argument("certify_padic: point valuations disagree with the supplied vector");
        (void)val;
    }

    // minimizing face of <i, w> over the support
    mpq_class best;
    bool first = true;
    std::vector<size_t> mins;
    for (size_t i = 0; i < ts.size(); ++i) {
        mpq_class v = v1 * ts[i].e1 + v2 * ts[i].e2;
        if (first || v < best) {
            best = v;
            mins.assign(1, i);
            first = false;
        } else if (v == best) {
            mins.push_back(i);
        }
    }
    if (mins.size() < 2)
        throw std::invalid_argument("certify_padic: valuation vector is inconsistent with a zero of P");

    auto dir = reduce_direction(ts[mins[1]].e1 - ts[mins[0]].e1, ts[mins[1]].e2 - ts[mins[0]].e2);

    // gap to the nearest off-face support point
    mpq_class gap = 0;
    bool has_off = false;
    for (size_t i = 0; i < ts.size(); ++i) {
        mpq_class v = v1 * ts[i].e1 + v2 * ts[i].e2;
        if (v == best) continue;
        mpq_class d = v - best;
        if (!has_off || d < gap) gap = d;
        has_off = true;
    }

    // edge polynomial along the minimizing face
    long base1 = ts[mins[0]].e1, base2 = ts[mins[0]].e2;
    long lmin = 0, lmax = 0;
    std::vector<std::pair<long, mpq_class>> entries;
    for (size_t k : mins) {
        long lam;
        if (dir.first != 0)
            lam = (ts[k].e1 - base1) / dir.first;
        else
            lam = (ts[k].e2 - base2) / dir.second;
        entries.emplace_back(lam, ts[k].coeff);
        lmin = std::min(lmin, lam);
        lmax = std::max(lmax, lam);
    }
    std::vector<mpq_class> coeffs(static_cast<size_t>(lmax - lmin) + 1, mpq_class(0));
    for (const auto& [lam, c] : entries) coeffs[static_cast<size_t>(lam - lmin)] = c;
    QPoly G(std::move(coeffs));
    IntPoly Gz = clear_denominators(G);
    long edge_deg = Gz.degree();
    Factorization f = factor(Gz);

    PadicCertificate cert;
    cert.p = p;
    cert.j = dir;
    cert.w = {v1, v2};
    cert.exact = false;

    auto finish = [&](const AlgebraicNumber& alpha, const mpq_class& lhs_val, bool exact) {
        cert.alpha = alpha;
        cert.lhs_valuation = lhs_val;
        cert.exact = exact;
        mpq_class wn2 = v1 * v1 + v2 * v2;
        mpq_class lhs16 = 16 * nd.diameter_sq * lhs_val;
        cert.bound_sq_scaled = lhs16 * lhs16 - wn2;
        // exact verification of v(x^j - alpha) >= ||w|| / (16 D^2)
        if (!exact && (lhs_val <= 0 || lhs16 * lhs16 < wn2))
            throw no_certificate_found("certify_padic: certified valuation below the guaranteed bound");
        double logp = std::log(static_cast<double>(p));
        cert.lhs_log = exact ? -std::numeric_limits<double>::infinity() : -lhs_val.get_d() * logp;
        cert.bound_log = -std::sqrt(wn2.get_d()) * logp / (16.0 * nd.diameter_sq.get_d());
        return cert;
    };

    if (point) {
        // z = x^j exactly; choose the root alpha maximizing v_p(z - alpha)
        auto powq = [](mpq_class b, long e) {
            mpq_class r(1);
            for (long i = 0; i < std::abs(e); ++i) r *= b;
            if (e < 0) r = 1 / r;
            return r;
        };
        mpq_class z = powq(point->first, dir.first) * powq(point->second, dir.second);
        std::optional<mpq_class> best_v;
        AlgebraicNumber best_alpha;
        bool exact = false;
        for (const auto& [g, mult] : f.factors) {
            (void)mult;
            if (g == IntPoly(std::vector<mpz_class>{0, 1})) continue;
            if (g.degree() == 1) {
                mpq_class alpha(-g[0], g[1]);
                alpha.canonicalize();
                if (alpha == z) {
                    return finish(AlgebraicNumber::from_rational(alpha), mpq_class(0), true);
                }
                mpq_class v = mpq_class(vp_rat(z - alpha, p));
                if (!best_v || v > *best_v) {
                    best_v = v;
                    best_alpha = AlgebraicNumber::from_rational(alpha);
                }
            } else {
                // The roots of g(z - X) are z - alpha over the conjugates of
                // alpha; their valuations are minus the Newton polygon slopes.
                QPoly gz;
                QPoly zmx(std::vector<mpq_class>{z, mpq_class(-1)});
                for (int i = g.degree(); i >= 0; --i) {
                    gz = gz * zmx;
                    gz = gz + QPoly(mpq_class(g[static_cast<size_t>(i)]));
                }
                IntPoly W = clear_denominators(gz);
                mpq_class vmax;
                bool first2 = true;
                for (const auto& e2 : padic_newton_slopes(W, p)) {
                    mpq_class cand = -e2.value_exponent;
                    if (first2 || cand > vmax) {
                        vmax = cand;
                        first2 = false;
                    }
                }
                if (!first2 && (!best_v || vmax > *best_v)) {
                    best_v = vmax;
                    // the certified valuation is attained at some conjugate and
                    // some place above p; report a deterministic representative
                    best_alpha = AlgebraicNumber(g, isolate_roots(g, mpq_class(1, 4)).front());
                }
            }
        }
        if (!best_v || *best_v <= 0)
            throw no_certificate_found("certify_padic: no root approximates the edge value");
        return finish(best_alpha, *best_v, false);
    }

    // valuations only: the edge must force a unique alpha
    std::vector<std::pair<IntPoly, int>> nontrivial;
    for (const auto& [g, mult] : f.factors)
        if (!(g == IntPoly(std::vector<mpz_class>{0, 1}))) nontrivial.emplace_back(g, mult);
    if (nontrivial.size() != 1 || nontrivial[0].first.degree() != 1)
        throw std::invalid_argument(
            "certify_padic: residue data required, the edge polynomial has several roots");
    mpq_class alpha(-nontrivial[0].first[0], nontrivial[0].first[1]);
    alpha.canonicalize();
    int d_mult = nontrivial[0].second;
    if (!has_off) {
        // no off-face terms: the edge relation is exact
        return finish(AlgebraicNumber::from_rational(alpha), mpq_class(0), true);
    }
    mpq_class lhs_val = gap / d_mult;
    return finish(AlgebraicNumber::from_rational(alpha), lhs_val, false);
}

}  // namespace divcurve
