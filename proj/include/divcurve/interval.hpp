#ifndef DIVCURVE_INTERVAL_HPP
#define DIVCURVE_INTERVAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace divcurve {

// Thin RAII wrapper around mpfr_t.
class MpFloat {
  public:
    explicit MpFloat(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    MpFloat(const MpFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    MpFloat(MpFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    MpFloat& operator=(const MpFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MpFloat& operator=(MpFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MpFloat() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    mpq_class to_mpq() const {
        if (!mpfr_number_p(v_)) throw std::domain_error("non-finite mpfr value");
        mpq_class q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }

  private:
    mpfr_t v_;
};

// Closed real interval [lo, hi] with outward-rounded endpoints.
class RealInterval {
  public:
    MpFloat lo, hi;

    explicit RealInterval(mpfr_prec_t prec = 64) : lo(prec), hi(prec) {}
    RealInterval(const MpFloat& l, const MpFloat& h) : lo(l), hi(h) {}

    static RealInterval exact_int(long v, mpfr_prec_t prec) {
        RealInterval r(prec);
        mpfr_set_si(r.lo.get(), v, MPFR_RNDD);
        mpfr_set_si(r.hi.get(), v, MPFR_RNDU);
        return r;
    }
    static RealInterval from_mpz(const mpz_class& v, mpfr_prec_t prec) {
        RealInterval r(prec);
        mpfr_set_z(r.lo.get(), v.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(r.hi.get(), v.get_mpz_t(), MPFR_RNDU);
        return r;
    }
    static RealInterval from_mpq(const mpq_class& v, mpfr_prec_t prec) {
        RealInterval r(prec);
        mpfr_set_q(r.lo.get(), v.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi.get(), v.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static RealInterval hull_mpq(const mpq_class& a, const mpq_class& b, mpfr_prec_t prec) {
        RealInterval r(prec);
        const mpq_class& l = a <= b ? a : b;
        const mpq_class& h = a <= b ? b : a;
        mpfr_set_q(r.lo.get(), l.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi.get(), h.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static RealInterval pi(mpfr_prec_t prec) {
        RealInterval r(prec);
        mpfr_const_pi(r.lo.get(), MPFR_RNDD);
        mpfr_const_pi(r.hi.get(), MPFR_RNDU);
        return r;
    }

    mpfr_prec_t prec() const { return std::max(lo.prec(), hi.prec()); }

    bool contains_zero() const { return mpfr_sgn(lo.get()) <= 0 && mpfr_sgn(hi.get()) >= 0; }
    bool is_positive() const { return mpfr_sgn(lo.get()) > 0; }
    bool is_negative() const { return mpfr_sgn(hi.get()) < 0; }
    bool is_nonnegative() const { return mpfr_sgn(lo.get()) >= 0; }

    double mid() const { return (lo.to_double() + hi.to_double()) / 2; }
    double width_d() const {
        MpFloat w(prec());
        mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
        return w.to_double();
    }

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.prec(), b.prec()));
        mpfr_add(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
        mpfr_add(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
        return r;
    }
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
        mpfr_sub(r.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
        return r;
    }
    RealInterval operator-() const {
        RealInterval r(prec());
        mpfr_neg(r.lo.get(), hi.get(), MPFR_RNDD);
        mpfr_neg(r.hi.get(), lo.get(), MPFR_RNDU);
        return r;
    }
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b) {
        mpfr_prec_t p = std::max(a.prec(), b.prec());
        RealInterval r(p);
        MpFloat t(p);
        bool first = true;
        auto consider = [&](mpfr_srcptr x, mpfr_srcptr y) {
            mpfr_mul(t.get(), x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t.get(), r.lo.get()) < 0) mpfr_set(r.lo.get(), t.get(), MPFR_RNDD);
            mpfr_mul(t.get(), x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t.get(), r.hi.get()) > 0) mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
            first = false;
        };
        consider(a.lo.get(), b.lo.get());
        consider(a.lo.get(), b.hi.get());
        consider(a.hi.get(), b.lo.get());
        consider(a.hi.get(), b.hi.get());
        return r;
    }
    friend RealInterval operator/(const RealInterval& a, const RealInterval& b) {
        if (b.contains_zero()) throw std::domain_error("interval division by interval containing zero");
        mpfr_prec_t p = std::max(a.prec(), b.prec());
        RealInterval r(p);
        MpFloat t(p);
        bool first = true;
        auto consider = [&](mpfr_srcptr x, mpfr_srcptr y) {
            mpfr_div(t.get(), x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t.get(), r.lo.get()) < 0) mpfr_set(r.lo.get(), t.get(), MPFR_RNDD);
            mpfr_div(t.get(), x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t.get(), r.hi.get()) > 0) mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
            first = false;
        };
        consider(a.lo.get(), b.lo.get());
        consider(a.lo.get(), b.hi.get());
        consider(a.hi.get(), b.lo.get());
        consider(a.hi.get(), b.hi.get());
        return r;
    }

    RealInterval sqr() const {
        RealInterval r = (*this) * (*this);
        if (contains_zero()) mpfr_set_zero(r.lo.get(), 1);
        return r;
    }
    RealInterval abs() const {
        RealInterval r(prec());
        if (is_nonnegative()) return *this;
        if (is_negative()) return -*this;
        mpfr_set_zero(r.lo.get(), 1);
        MpFloat na(prec());
        mpfr_neg(na.get(), lo.get(), MPFR_RNDU);
        if (mpfr_cmp(na.get(), hi.get()) > 0)
            mpfr_set(r.hi.get(), na.get(), MPFR_RNDU);
        else
            mpfr_set(r.hi.get(), hi.get(), MPFR_RNDU);
        return r;
    }
    RealInterval sqrt() const {
        RealInterval r(prec());
        if (mpfr_sgn(lo.get()) < 0) {
            if (mpfr_sgn(hi.get()) < 0) throw std::domain_error("sqrt of negative interval");
            mpfr_set_zero(r.lo.get(), 1);
        } else {
            mpfr_sqrt(r.lo.get(), lo.get(), MPFR_RNDD);
        }
        mpfr_sqrt(r.hi.get(), hi.get(), MPFR_RNDU);
        return r;
    }
    RealInterval log() const {
        if (mpfr_sgn(lo.get()) <= 0) throw std::domain_error("log of interval reaching zero");
        RealInterval r(prec());
        mpfr_log(r.lo.get(), lo.get(), MPFR_RNDD);
        mpfr_log(r.hi.get(), hi.get(), MPFR_RNDU);
        return r;
    }
    RealInterval exp() const {
        RealInterval r(prec());
        mpfr_exp(r.lo.get(), lo.get(), MPFR_RNDD);
        mpfr_exp(r.hi.get(), hi.get(), MPFR_RNDU);
        return r;
    }
    // max(1, x) componentwise
    RealInterval max1() const {
        RealInterval r(*this);
        if (mpfr_cmp_ui(r.lo.get(), 1) < 0) mpfr_set_ui(r.lo.get(), 1, MPFR_RNDD);
        if (mpfr_cmp_ui(r.hi.get(), 1) < 0) mpfr_set_ui(r.hi.get(), 1, MPFR_RNDU);
        return r;
    }

    static RealInterval hull(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.prec(), b.prec()));
        mpfr_set(r.lo.get(), mpfr_cmp(a.lo.get(), b.lo.get()) <= 0 ? a.lo.get() : b.lo.get(), MPFR_RNDD);
        mpfr_set(r.hi.get(), mpfr_cmp(a.hi.get(), b.hi.get()) >= 0 ? a.hi.get() : b.hi.get(), MPFR_RNDU);
        return r;
    }
    static RealInterval max(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.prec(), b.prec()));
        mpfr_max(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
        mpfr_max(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
        return r;
    }

    // certified comparisons
    bool certainly_lt(const RealInterval& o) const { return mpfr_cmp(hi.get(), o.lo.get()) < 0; }
    bool certainly_le(const RealInterval& o) const { return mpfr_cmp(hi.get(), o.lo.get()) <= 0; }
    bool certainly_gt(const RealInterval& o) const { return mpfr_cmp(lo.get(), o.hi.get()) > 0; }
    bool intersects(const RealInterval& o) const {
        return mpfr_cmp(hi.get(), o.lo.get()) >= 0 && mpfr_cmp(o.hi.get(), lo.get()) >= 0;
    }
    bool contains(const RealInterval& o) const {
        return mpfr_cmp(lo.get(), o.lo.get()) <= 0 && mpfr_cmp(hi.get(), o.hi.get()) >= 0;
    }

    // Unique integer n with the interval inside [n, n+1), if determined.
    bool floor_unique(mpz_class& out) const {
        MpFloat fl(prec()), fh(prec());
        mpfr_floor(fl.get(), lo.get());
        mpfr_floor(fh.get(), hi.get());
        if (mpfr_cmp(fl.get(), fh.get()) != 0) return false;
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), fl.get(), MPFR_RNDN);
        out = z;
        return true;
    }
};

// Axis-aligned complex interval (rectangle).
class ComplexInterval {
  public:
    RealInterval re, im;

    explicit ComplexInterval(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    ComplexInterval(RealInterval r, RealInterval i) : re(std::move(r)), im(std::move(i)) {}

    ComplexInterval(const mpz_class& v) : re(RealInterval::from_mpz(v, 64)), im(RealInterval::exact_int(0, 64)) {}
    ComplexInterval(const mpq_class& v) : re(RealInterval::from_mpq(v, 64)), im(RealInterval::exact_int(0, 64)) {}

    static ComplexInterval from_mpq(const mpq_class& r, const mpq_class& i, mpfr_prec_t prec) {
        return ComplexInterval(RealInterval::from_mpq(r, prec), RealInterval::from_mpq(i, prec));
    }

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re - b.re, a.im - b.im};
    }
    ComplexInterval operator-() const { return {-re, -im}; }
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
        RealInterval n = b.re.sqr() + b.im.sqr();
        if (n.contains_zero()) throw std::domain_error("complex interval division by region containing zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    ComplexInterval pow(long e) const {
        if (e == 0) {
            ComplexInterval one(prec());
            one.re = RealInterval::exact_int(1, prec());
            one.im = RealInterval::exact_int(0, prec());
            return one;
        }
        bool invert = e < 0;
        unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        ComplexInterval base = *this, acc(prec());
        acc.re = RealInterval::exact_int(1, prec());
        acc.im = RealInterval::exact_int(0, prec());
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        if (invert) {
            ComplexInterval one(prec());
            one.re = RealInterval::exact_int(1, prec());
            one.im = RealInterval::exact_int(0, prec());
            return one / acc;
        }
        return acc;
    }

    RealInterval abs2() const { return re.sqr() + im.sqr(); }
    RealInterval abs() const { return abs2().sqrt(); }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    double mid_re() const { return re.mid(); }
    double mid_im() const { return im.mid(); }
};

}  // namespace divcurve

#endif
