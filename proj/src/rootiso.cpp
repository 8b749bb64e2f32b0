#include "divcurve/rootbox.hpp"

#include <algorithm>
#include <cmath>

namespace divcurve {
namespace {

// Plain complex floating point at a given precision (round to nearest),
// only used to drive the iteration; all certification goes through
// ComplexInterval afterwards.
struct CF {
    MpFloat re, im;
    explicit CF(mpfr_prec_t p) : re(p), im(p) {}
};

void c_set(CF& z, double re, double im) {
    mpfr_set_d(z.re.get(), re, MPFR_RNDN);
    mpfr_set_d(z.im.get(), im, MPFR_RNDN);
}

void c_sub(CF& r, const CF& a, const CF& b) {
    mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void c_mul(CF& r, const CF& a, const CF& b) {
    MpFloat t1(r.re.prec()), t2(r.re.prec()), nre(r.re.prec());
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(nre.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_set(r.re.get(), nre.get(), MPFR_RNDN);
}

void c_div(CF& r, const CF& a, const CF& b) {
    MpFloat n(r.re.prec()), t1(r.re.prec()), t2(r.re.prec()), nre(r.re.prec()), nim(r.re.prec());
    mpfr_mul(t1.get(), b.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), b.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(n.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(nre.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(nre.get(), nre.get(), n.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(nim.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(r.im.get(), nim.get(), n.get(), MPFR_RNDN);
    mpfr_set(r.re.get(), nre.get(), MPFR_RNDN);
}

void c_add_assign(CF& r, const CF& a) {
    mpfr_add(r.re.get(), r.re.get(), a.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), r.im.get(), a.im.get(), MPFR_RNDN);
}

double c_abs_d(const CF& a) {
    double x = mpfr_get_d(a.re.get(), MPFR_RNDN), y = mpfr_get_d(a.im.get(), MPFR_RNDN);
    return std::sqrt(x * x + y * y);
}

// Horner evaluation of integer polynomial at CF.
void eval_cf(const IntPoly& p, const CF& z, CF& out, mpfr_prec_t prec) {
    CF acc(prec), t(prec), c(prec);
    mpfr_set_z(acc.re.get(), p.leading().get_mpz_t(), MPFR_RNDN);
    mpfr_set_zero(acc.im.get(), 1);
    for (int i = p.degree() - 1; i >= 0; --i) {
        c_mul(t, acc, z);
        mpfr_set_z(c.re.get(), p[static_cast<size_t>(i)].get_mpz_t(), MPFR_RNDN);
        mpfr_set_zero(c.im.get(), 1);
        mpfr_add(acc.re.get(), t.re.get(), c.re.get(), MPFR_RNDN);
        mpfr_set(acc.im.get(), t.im.get(), MPFR_RNDN);
    }
    out = acc;
}

ComplexInterval eval_interval(const IntPoly& p, const ComplexInterval& z, mpfr_prec_t prec) {
    ComplexInterval acc(prec);
    if (p.is_zero()) return acc;
    acc.re = RealInterval::from_mpz(p.leading(), prec);
    acc.im = RealInterval::exact_int(0, prec);
    for (int i = p.degree() - 1; i >= 0; --i) {
        acc = acc * z;
        acc.re = acc.re + RealInterval::from_mpz(p[static_cast<size_t>(i)], prec);
    }
    return acc;
}

ComplexInterval point_interval(const CF& z, mpfr_prec_t prec) {
    ComplexInterval c(prec);
    mpfr_set(c.re.lo.get(), z.re.get(), MPFR_RNDD);
    mpfr_set(c.re.hi.get(), z.re.get(), MPFR_RNDU);
    mpfr_set(c.im.lo.get(), z.im.get(), MPFR_RNDD);
    mpfr_set(c.im.hi.get(), z.im.get(), MPFR_RNDU);
    return c;
}

struct CertifiedDisk {
    CF center;
    mpq_class radius;  // certified upper bound, exact rational
    CertifiedDisk(mpfr_prec_t p) : center(p) {}
};

// Try to certify one disk around approximation z: radius n*|p(z)/p'(z)|
// rounded up. Fails if p'(z) cannot be bounded away from zero.
bool certify_disk(const IntPoly& p, const IntPoly& dp, const CF& z, mpfr_prec_t prec, mpq_class& radius_out) {
    ComplexInterval zi = point_interval(z, prec);
    ComplexInterval pv = eval_interval(p, zi, prec);
    ComplexInterval dv = eval_interval(dp, zi, prec);
    RealInterval dabs = dv.abs2();
    if (dabs.contains_zero()) return false;
    RealInterval ratio2 = pv.abs2() / dabs;
    MpFloat up(prec);
    mpfr_sqrt(up.get(), ratio2.hi.get(), MPFR_RNDU);
    mpfr_mul_ui(up.get(), up.get(), static_cast<unsigned long>(p.degree()), MPFR_RNDU);
    if (!mpfr_number_p(up.get())) return false;
    radius_out = up.to_mpq();
    return true;
}

mpq_class mpq_from(const MpFloat& f) { return f.to_mpq(); }

RootBox make_box(const CF& z, const mpq_class& r, long prec) {
    RootBox b;
    mpq_class cre = mpq_from(z.re), cim = mpq_from(z.im);
    mpq_class pad = 2 * r;
    b.re_lo = cre - pad;
    b.re_hi = cre + pad;
    b.im_lo = cim - pad;
    b.im_hi = cim + pad;
    b.prec = prec;
    return b;
}

// squared euclidean distance lower bound between approximation points, exact
mpq_class dist2_exact(const CF& a, const CF& b) {
    mpq_class dre = mpq_from(a.re) - mpq_from(b.re);
    mpq_class dim = mpq_from(a.im) - mpq_from(b.im);
    return dre * dre + dim * dim;
}

}  // namespace

bool rootbox_less(const RootBox& a, const RootBox& b) {
    if (a.re_lo != b.re_lo) return a.re_lo < b.re_lo;
    return a.im_lo < b.im_lo;
}

ComplexInterval to_interval(const RootBox& b, mpfr_prec_t prec) {
    ComplexInterval c(prec);
    c.re = RealInterval::hull_mpq(b.re_lo, b.re_hi, prec);
    c.im = RealInterval::hull_mpq(b.im_lo, b.im_hi, prec);
    return c;
}

std::vector<RootBox> isolate_roots(const IntPoly& a, const mpq_class& width) {
    if (a.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
    if (width <= 0) throw std::domain_error("isolate_roots: width must be positive");
    IntPoly p = squarefree_part(a);
    int n = p.degree();
    std::vector<RootBox> out;
    if (n == 0) return out;
    if (n == 1) {
        mpq_class root(-p[0], p[1]);
        root.canonicalize();
        RootBox b;
        b.re_lo = b.re_hi = root;
        b.im_lo = b.im_hi = 0;
        b.prec = 64;
        out.push_back(b);
        return out;
    }
    IntPoly dp = p.derivative();

    mpfr_prec_t prec = 128;
    std::vector<CF> zs;
    bool have_start = false;
    while (prec <= (mpfr_prec_t(1) << 22)) {
        // (re)initialize or upgrade precision of approximations
        std::vector<CF> cur;
        cur.reserve(static_cast<size_t>(n));
        if (!have_start) {
            double r0 = 1.0;
            double lead = std::abs(p.leading().get_d());
            for (int i = 0; i < n; ++i) {
                double c = std::abs(p[static_cast<size_t>(i)].get_d());
                if (c > 0) r0 = std::max(r0, 2.0 * std::pow(c / lead, 1.0 / (n - i)));
            }
            for (int i = 0; i < n; ++i) {
                CF z(prec);
                double ang = 2.0 * 3.14159265358979 * (i + 0.25) / n + 0.42;
                c_set(z, r0 * std::cos(ang), r0 * std::sin(ang));
                cur.push_back(std::move(z));
            }
        } else {
            for (auto& z : zs) {
                CF nz(prec);
                mpfr_set(nz.re.get(), z.re.get(), MPFR_RNDN);
                mpfr_set(nz.im.get(), z.im.get(), MPFR_RNDN);
                cur.push_back(std::move(nz));
            }
        }

        // Aberth-Ehrlich iterations
        int iters = 40 + 12 * n;
        CF pv(prec), dv(prec), w(prec), s(prec), d(prec), t(prec), corr(prec), one(prec);
        c_set(one, 1.0, 0.0);
        for (int it = 0; it < iters; ++it) {
            double max_step = 0.0;
            for (int i = 0; i < n; ++i) {
                eval_cf(p, cur[static_cast<size_t>(i)], pv, prec);
                eval_cf(dp, cur[static_cast<size_t>(i)], dv, prec);
                if (mpfr_zero_p(dv.re.get()) && mpfr_zero_p(dv.im.get())) {
                    // nudge off a critical point
                    mpfr_add_d(cur[static_cast<size_t>(i)].re.get(), cur[static_cast<size_t>(i)].re.get(), 1e-3, MPFR_RNDN);
                    continue;
                }
                c_div(w, pv, dv);
                c_set(s, 0.0, 0.0);
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    c_sub(d, cur[static_cast<size_t>(i)], cur[static_cast<size_t>(j)]);
                    if (mpfr_zero_p(d.re.get()) && mpfr_zero_p(d.im.get())) {
                        mpfr_add_d(cur[static_cast<size_t>(i)].re.get(), cur[static_cast<size_t>(i)].re.get(), 1e-4 * (i + 1), MPFR_RNDN);
                        c_sub(d, cur[static_cast<size_t>(i)], cur[static_cast<size_t>(j)]);
                    }
                    c_div(t, one, d);
                    c_add_assign(s, t);
                }
                c_mul(t, w, s);
                CF denom(prec);
                c_sub(denom, one, t);
                if (mpfr_zero_p(denom.re.get()) && mpfr_zero_p(denom.im.get()))
                    corr = w;
                else
                    c_div(corr, w, denom);
                c_sub(cur[static_cast<size_t>(i)], cur[static_cast<size_t>(i)], corr);
                max_step = std::max(max_step, c_abs_d(corr) / (1.0 + c_abs_d(cur[static_cast<size_t>(i)])));
            }
            if (max_step < 1e-30 && it > 4) break;
        }
        zs = std::move(cur);
        have_start = true;

        // certification
        std::vector<mpq_class> radii(static_cast<size_t>(n));
        bool ok = true;
        mpq_class max_allowed = width / 4;
        for (int i = 0; i < n && ok; ++i) {
            if (!certify_disk(p, dp, zs[static_cast<size_t>(i)], prec, radii[static_cast<size_t>(i)])) ok = false;
            else if (radii[static_cast<size_t>(i)] > max_allowed) ok = false;
        }
        if (ok) {
            for (int i = 0; i < n && ok; ++i)
                for (int j = i + 1; j < n && ok; ++j) {
                    mpq_class rr = radii[static_cast<size_t>(i)] + radii[static_cast<size_t>(j)];
                    if (dist2_exact(zs[static_cast<size_t>(i)], zs[static_cast<size_t>(j)]) <= 64 * rr * rr) ok = false;
                }
        }
        if (ok) {
            for (int i = 0; i < n; ++i) out.push_back(make_box(zs[static_cast<size_t>(i)], radii[static_cast<size_t>(i)], prec));
            std::sort(out.begin(), out.end(), rootbox_less);
            return out;
        }
        prec *= 2;
    }
    throw std::runtime_error("isolate_roots: certification failed at maximal precision");
}

RootBox refine_box(const IntPoly& poly, const RootBox& box, const mpq_class& width) {
    if (width <= 0) throw std::domain_error("refine_box: width must be positive");
    if (box.re_width() <= width && box.im_width() <= width) return box;
    IntPoly p = squarefree_part(poly);
    IntPoly dp = p.derivative();
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max<long>(box.prec * 2, 128));
    mpq_class smaller = std::min(box.re_width(), box.im_width());
    smaller /= 4;
    mpq_class target = std::min(width, smaller);
    if (target <= 0) target = width;

    while (prec <= (mpfr_prec_t(1) << 22)) {
        // Newton from the box centre; accept only if the certified disk box
        // lands inside the original box (then it isolates the same root).
        CF z(prec);
        mpq_class cre = (box.re_lo + box.re_hi) / 2, cim = (box.im_lo + box.im_hi) / 2;
        mpfr_set_q(z.re.get(), cre.get_mpq_t(), MPFR_RNDN);
        mpfr_set_q(z.im.get(), cim.get_mpq_t(), MPFR_RNDN);
        CF pv(prec), dv(prec), step(prec);
        int steps = 12 + static_cast<int>(prec / 8);
        for (int it = 0; it < steps; ++it) {
            eval_cf(p, z, pv, prec);
            eval_cf(dp, z, dv, prec);
            if (mpfr_zero_p(dv.re.get()) && mpfr_zero_p(dv.im.get())) break;
            c_div(step, pv, dv);
            c_sub(z, z, step);
        }
        mpq_class radius;
        if (certify_disk(p, dp, z, prec, radius) && 4 * radius <= width) {
            RootBox cand = make_box(z, radius, static_cast<long>(prec));
            if (box.contains(cand)) return cand;
        }
        // Fallback: re-isolate globally and take the unique box meeting ours.
        std::vector<RootBox> all = isolate_roots(p, target);
        const RootBox* hit = nullptr;
        bool unique = true;
        for (const auto& b : all)
            if (b.intersects(box)) {
                if (hit) unique = false;
                hit = &b;
            }
        if (hit && unique) {
            RootBox r = *hit;
            r.re_lo = std::max(r.re_lo, box.re_lo);
            r.re_hi = std::min(r.re_hi, box.re_hi);
            r.im_lo = std::max(r.im_lo, box.im_lo);
            r.im_hi = std::min(r.im_hi, box.im_hi);
            return r;
        }
        prec *= 2;
        target /= 16;
    }
    throw std::runtime_error("refine_box: failed to refine");
}

ComplexInterval root_interval(const IntPoly& poly, RootBox& box, mpfr_prec_t prec) {
    // Tighten the box to about 2^-prec relative accuracy before converting.
    mpz_class den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(std::min<mpfr_prec_t>(prec, 1 << 16)));
    mpq_class scale = std::max(mpq_class(abs(box.re_lo) + abs(box.re_hi) + abs(box.im_lo) + abs(box.im_hi)), mpq_class(1));
    mpq_class want = scale / den;
    if (box.re_width() > want || box.im_width() > want) box = refine_box(poly, box, want);
    return to_interval(box, prec);
}

}  // namespace divcurve
