#include <map>
#include <numeric>

#include "divcurve/algnum.hpp"

namespace divcurve {
namespace {

void factor_integer_rec(mpz_class n, std::map<mpz_class, int>& out) {
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
        out[n] += 1;
        return;
    }
    // Pollard rho (Brent variant) for composite n
    mpz_class x = 2, y = 2, d = 1, c = 1;
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 0 && d != n && d != 1) break;
        c += 1;
    }
    factor_integer_rec(d, out);
    factor_integer_rec(n / d, out);
}

std::map<mpz_class, int> factor_integer(mpz_class n) {
    std::map<mpz_class, int> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul, 43ul, 47ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[mpz_class(p)] += 1;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    unsigned long p = 53;
    while (n > 1 && p < 100000) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[mpz_class(p)] += 1;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
        p += 2;
    }
    factor_integer_rec(n, out);
    return out;
}

unsigned long euler_phi(unsigned long m) {
    unsigned long result = m;
    unsigned long n = m;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace

RealInterval weil_height_interval(const AlgebraicNumber& x, double tol) {
    if (x.is_zero()) throw std::domain_error("height of zero");
    const IntPoly& P = x.minpoly();
    int d = P.degree();
    std::vector<RootBox> boxes = isolate_roots(P, mpq_class(1, 4));
    mpfr_prec_t prec = 96;
    mpq_class width(1, 1024);
    for (int round = 0; round < 40; ++round) {
        RealInterval H = RealInterval::from_mpz(P.leading(), prec).log();
        for (auto& b : boxes) {
            ComplexInterval z = to_interval(b, prec);
            H = H + z.abs().max1().log();
        }
        H = H / RealInterval::exact_int(d, prec);
        if (H.width_d() <= tol) return H;
        for (auto& b : boxes) b = refine_box(P, b, width);
        width /= 1024;
        prec *= 2;
    }
    throw std::runtime_error("weil_height: tolerance not reached");
}

double weil_height(const AlgebraicNumber& x, double tol) {
    RealInterval H = weil_height_interval(x, tol);
    return std::max(0.0, H.mid());
}

std::vector<PadicEntry> padic_newton_slopes(const IntPoly& P, unsigned long p) {
    if (P.is_zero()) throw std::domain_error("newton slopes of zero polynomial");
    // lower convex hull of (i, v_p(c_i)) over nonzero coefficients
    std::vector<std::pair<long, long>> pts;
    mpz_class pz(p);
    for (int i = 0; i <= P.degree(); ++i) {
        const mpz_class& c = P[static_cast<size_t>(i)];
        if (c == 0) continue;
        mpz_class a = abs(c);
        long v = 0;
        while (mpz_divisible_p(a.get_mpz_t(), pz.get_mpz_t())) {
            mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t());
            ++v;
        }
        pts.emplace_back(i, v);
    }
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // keep lower hull: drop b if it lies on or above segment a->pt
            if ((b.second - a.second) * (pt.first - a.first) >= (pt.second - a.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    std::vector<PadicEntry> out;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        mpq_class slope(hull[i + 1].second - hull[i].second, hull[i + 1].first - hull[i].first);
        slope.canonicalize();
        out.push_back({slope, static_cast<int>(hull[i + 1].first - hull[i].first)});
    }
    return out;
}

PadicAbsProfile padic_profile(const AlgebraicNumber& x, unsigned long p) {
    if (x.is_zero()) throw std::domain_error("padic profile of zero");
    PadicAbsProfile prof;
    prof.p = p;
    prof.entries = padic_newton_slopes(x.minpoly(), p);
    if (prof.entries.empty()) prof.entries.push_back({mpq_class(0), x.minpoly().degree()});
    return prof;
}

double height_by_places(const AlgebraicNumber& x, double tol) {
    if (x.is_zero()) throw std::domain_error("height of zero");
    const IntPoly& P = x.minpoly();
    int d = P.degree();
    // Finite places contribute only above primes dividing the leading term;
    // per prime the contribution is the exact rational sum of positive
    // Newton-polygon slopes, weighted by segment length.
    std::vector<std::pair<mpz_class, mpq_class>> finite_terms;
    for (const auto& [pz, e] : factor_integer(P.leading())) {
        (void)e;
        PadicAbsProfile prof = padic_profile(x, pz.get_ui());
        mpq_class s(0);
        for (const auto& entry : prof.entries)
            if (entry.value_exponent > 0) s += entry.value_exponent * entry.weight;
        if (s != 0) finite_terms.emplace_back(pz, s);
    }

    std::vector<RootBox> boxes = isolate_roots(P, mpq_class(1, 4));
    mpfr_prec_t prec = 96;
    mpq_class width(1, 1024);
    for (int round = 0; round < 40; ++round) {
        RealInterval H = RealInterval::exact_int(0, prec);
        for (const auto& [pz, s] : finite_terms)
            H = H + RealInterval::from_mpq(s, prec) * RealInterval::from_mpz(pz, prec).log();
        for (auto& b : boxes) {
            ComplexInterval z = to_interval(b, prec);
            H = H + z.abs().max1().log();
        }
        H = H / RealInterval::exact_int(d, prec);
        if (H.width_d() <= tol) return std::max(0.0, H.mid());
        for (auto& b : boxes) b = refine_box(P, b, width);
        width /= 1024;
        prec *= 2;
    }
    throw std::runtime_error("height_by_places: tolerance not reached");
}

bool is_S_integral(const std::vector<AlgebraicNumber>& x, const std::set<unsigned long>& S) {
    for (const auto& c : x) {
        if (c.is_zero()) throw std::domain_error("S-integrality of a tuple with zero coordinate");
        mpz_class lead = c.minpoly().leading();
        for (unsigned long p : S)
            while (mpz_divisible_ui_p(lead.get_mpz_t(), p)) mpz_divexact_ui(lead.get_mpz_t(), lead.get_mpz_t(), p);
        if (lead != 1) return false;
    }
    return true;
}

std::optional<unsigned long> is_root_of_unity(const AlgebraicNumber& x) {
    const IntPoly& P = x.minpoly();
    int d = P.degree();
    if (abs(P.leading()) != 1 || abs(P[0]) != 1) return std::nullopt;
    unsigned long bound = 2ul * static_cast<unsigned long>(d) * static_cast<unsigned long>(d) + 2;
    for (unsigned long m = 1; m <= bound; ++m) {
        if (euler_phi(m) != static_cast<unsigned long>(d)) continue;
        if (P == cyclotomic(static_cast<unsigned>(m))) return m;
    }
    return std::nullopt;
}

namespace {
RealInterval scale_interval(const RealInterval& h, long k, mpfr_prec_t prec) {
    return h * RealInterval::exact_int(k, prec);
}
}  // namespace

std::optional<MultDependence> mult_dependence(const AlgebraicNumber& z, const AlgebraicNumber& a, long bound) {
    if (bound <= 0) throw std::domain_error("mult_dependence: bound must be positive");
    if (z.is_zero() || a.is_zero()) throw std::domain_error("mult_dependence: inputs must be nonzero");
    const double tol = 1e-11;
    RealInterval Hz = weil_height_interval(z, tol);
    RealInterval Ha = weil_height_interval(a, tol);
    mpfr_prec_t prec = 96;
    for (long k = 0; k <= bound; ++k) {
        for (long labs = 0; labs <= bound; ++labs) {
            if (k == 0 && labs == 0) continue;
            if (std::gcd(k, labs) != 1) continue;
            RealInterval lhs = scale_interval(Hz, k, prec);
            RealInterval rhs = scale_interval(Ha, labs, prec);
            if (!lhs.intersects(rhs)) continue;  // heights must match on a torsion relation
            for (int sg : {+1, -1}) {
                long l = sg * labs;
                if (labs == 0 && sg < 0) continue;
                if (k == 0 && l < 0) continue;  // reduced representative (0,1)
                AlgebraicNumber w = mul(z.pow(k), a.pow(l));
                if (auto ord = is_root_of_unity(w)) return MultDependence{k, l, *ord};
            }
        }
    }
    return std::nullopt;
}

}  // namespace divcurve
