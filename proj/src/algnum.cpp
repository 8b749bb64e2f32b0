#include "divcurve/algnum.hpp"

#include <algorithm>
#include <cmath>

namespace divcurve {
namespace {

RootBox exact_box(const mpq_class& re, const mpq_class& im = mpq_class(0)) {
    RootBox b;
    b.re_lo = b.re_hi = re;
    b.im_lo = b.im_hi = im;
    b.prec = 64;
    return b;
}

IntPoly minpoly_of_rational(const mpq_class& v) {
    // den * X - num, positive leading
    std::vector<mpz_class> c{-v.get_num(), v.get_den()};
    return normalized(IntPoly(std::move(c)));
}

// Substitute X -> r*X into p (r = num/den rational, nonzero) and clear
// denominators: used for minpoly of x/r given minpoly of x, etc.
IntPoly subst_scale(const IntPoly& p, const mpq_class& r) {
    int d = p.degree();
    std::vector<mpz_class> c(static_cast<size_t>(d) + 1);
    mpz_class num_pow = 1;
    // coeff_i * num^i * den^(d-i)
    std::vector<mpz_class> den_pow(static_cast<size_t>(d) + 1);
    den_pow[static_cast<size_t>(d)] = 1;
    for (int i = d - 1; i >= 0; --i) den_pow[static_cast<size_t>(i)] = den_pow[static_cast<size_t>(i) + 1] * r.get_den();
    for (int i = 0; i <= d; ++i) {
        c[static_cast<size_t>(i)] = p[static_cast<size_t>(i)] * num_pow * den_pow[static_cast<size_t>(i)];
        num_pow *= r.get_num();
    }
    return normalized(IntPoly(std::move(c)));
}

// Substitute X -> X + r and clear denominators.
IntPoly subst_shift(const IntPoly& p, const mpq_class& r) {
    QPoly acc;  // result over Q via Horner: p(X+r)
    QPoly shift(std::vector<mpq_class>{r, mpq_class(1)});
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * shift;
        acc = acc + QPoly(mpq_class(p[static_cast<size_t>(i)]));
    }
    return clear_denominators(acc);
}

}  // namespace

AlgebraicNumber::AlgebraicNumber() : minpoly_(IntPoly(std::vector<mpz_class>{0, 1})), box_(exact_box(0)) {}

AlgebraicNumber::AlgebraicNumber(IntPoly minpoly, RootBox box) : minpoly_(std::move(minpoly)), box_(std::move(box)) {
    if (minpoly_.degree() < 1) throw std::domain_error("minimal polynomial must have positive degree");
    minpoly_ = normalized(minpoly_);
}

AlgebraicNumber AlgebraicNumber::from_rational(const mpq_class& v) {
    mpq_class c(v);
    c.canonicalize();
    return AlgebraicNumber(minpoly_of_rational(c), exact_box(c));
}

AlgebraicNumber AlgebraicNumber::from_int(long v) { return from_rational(mpq_class(v)); }

mpq_class AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw std::domain_error("not a rational number");
    mpq_class v(-minpoly_[0], minpoly_[1]);
    v.canonicalize();
    return v;
}

bool AlgebraicNumber::is_zero() const { return minpoly_ == IntPoly(std::vector<mpz_class>{0, 1}); }
bool AlgebraicNumber::is_one() const { return minpoly_ == IntPoly(std::vector<mpz_class>{-1, 1}); }

bool AlgebraicNumber::is_real() const {
    if (!(box_.im_lo <= 0 && 0 <= box_.im_hi)) return false;
    return sturm_count(minpoly_, box_.re_lo, box_.re_hi) >= 1;
}

int AlgebraicNumber::real_sign() const {
    if (!is_real()) throw std::domain_error("real_sign of a non-real number");
    if (is_zero()) return 0;
    RootBox b = box_;
    while (sgn(b.re_lo) != sgn(b.re_hi)) {
        mpq_class w = b.re_width() / 4;
        if (w == 0) break;
        b = refine_box(minpoly_, b, w);
    }
    box_ = b;
    return sgn(b.re_lo) != 0 ? sgn(b.re_lo) : sgn(b.re_hi);
}

ComplexInterval AlgebraicNumber::interval(mpfr_prec_t prec) const { return root_interval(minpoly_, box_, prec); }

void AlgebraicNumber::refine(const mpq_class& width) const { box_ = refine_box(minpoly_, box_, width); }

std::vector<AlgebraicNumber> algebraic_roots(const IntPoly& a) {
    if (a.is_zero()) throw std::domain_error("roots of the zero polynomial");
    std::vector<AlgebraicNumber> out;
    Factorization f = factor(a);
    for (const auto& [g, mult] : f.factors) {
        (void)mult;
        for (const auto& b : isolate_roots(g, mpq_class(1, 4))) out.emplace_back(g, b);
    }
    std::sort(out.begin(), out.end(),
              [](const AlgebraicNumber& x, const AlgebraicNumber& y) { return rootbox_less(x.box(), y.box()); });
    return out;
}

AlgebraicNumber algnum_from_value(const IntPoly& vanishing,
                                  const std::function<ComplexInterval(mpfr_prec_t)>& value) {
    if (vanishing.is_zero()) throw std::domain_error("algnum_from_value: zero polynomial");
    struct Cand {
        IntPoly poly;
        RootBox box;
        bool alive = true;
    };
    std::vector<Cand> cands;
    Factorization f = factor(vanishing);
    for (const auto& [g, mult] : f.factors) {
        (void)mult;
        for (const auto& b : isolate_roots(g, mpq_class(1, 4))) cands.push_back({g, b, true});
    }
    if (cands.empty()) throw std::domain_error("algnum_from_value: constant polynomial");
    mpfr_prec_t prec = 96;
    mpq_class width(1, 16);
    for (int round = 0; round < 64; ++round) {
        ComplexInterval v = value(prec);
        RealInterval vre = v.re, vim = v.im;
        size_t alive = 0;
        Cand* last = nullptr;
        for (auto& c : cands) {
            if (!c.alive) continue;
            ComplexInterval bi = to_interval(c.box, prec);
            if (!vre.intersects(bi.re) || !vim.intersects(bi.im)) {
                c.alive = false;
                continue;
            }
            ++alive;
            last = &c;
        }
        if (alive == 0) throw std::runtime_error("algnum_from_value: value matches no root");
        if (alive == 1) return AlgebraicNumber(last->poly, last->box);
        for (auto& c : cands)
            if (c.alive) c.box = refine_box(c.poly, c.box, width);
        prec *= 2;
        width /= 256;
    }
    throw std::runtime_error("algnum_from_value: could not separate candidate roots");
}

AlgebraicNumber AlgebraicNumber::neg() const {
    if (is_rational()) return from_rational(-rational_value());
    std::vector<mpz_class> c(minpoly_.coeffs());
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    RootBox b;
    b.re_lo = -box_.re_hi;
    b.re_hi = -box_.re_lo;
    b.im_lo = -box_.im_hi;
    b.im_hi = -box_.im_lo;
    b.prec = box_.prec;
    return AlgebraicNumber(normalized(IntPoly(std::move(c))), b);
}

AlgebraicNumber AlgebraicNumber::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational()) return from_rational(mpq_class(1) / rational_value());
    IntPoly rp = normalized(minpoly_.reversed());
    AlgebraicNumber self = *this;
    return algnum_from_value(rp, [self](mpfr_prec_t prec) {
        ComplexInterval one(prec);
        one.re = RealInterval::exact_int(1, prec);
        one.im = RealInterval::exact_int(0, prec);
        return one / self.interval(prec);
    });
}

namespace {

// P(Y) viewed as a polynomial in Y with constant IntPoly coefficients.
IntPoly2 lift_const(const IntPoly& p) {
    std::vector<IntPoly> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(IntPoly(x));
    return IntPoly2(std::move(c));
}

}  // namespace

AlgebraicNumber mul(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_zero() || b.is_zero()) return AlgebraicNumber::from_int(0);
    if (a.is_rational() && b.is_rational()) return AlgebraicNumber::from_rational(a.rational_value() * b.rational_value());
    if (a.is_rational() || b.is_rational()) {
        const AlgebraicNumber& alg = a.is_rational() ? b : a;
        mpq_class r = (a.is_rational() ? a : b).rational_value();
        IntPoly mp = subst_scale(alg.minpoly(), mpq_class(1) / r);
        // box scales exactly by the rational factor
        const RootBox& s = alg.box();
        RootBox nb;
        mpq_class c1 = s.re_lo * r, c2 = s.re_hi * r, d1 = s.im_lo * r, d2 = s.im_hi * r;
        nb.re_lo = std::min(c1, c2);
        nb.re_hi = std::max(c1, c2);
        nb.im_lo = std::min(d1, d2);
        nb.im_hi = std::max(d1, d2);
        nb.prec = s.prec;
        return AlgebraicNumber(mp, nb);
    }
    // resultant_Y(P(Y), Y^m Q(X/Y)); vanishes at products x*y
    const IntPoly& P = a.minpoly();
    const IntPoly& Q = b.minpoly();
    int m = Q.degree();
    std::vector<IntPoly> bc(static_cast<size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) bc[static_cast<size_t>(m - j)] = IntPoly::monomial(Q[static_cast<size_t>(j)], j);
    IntPoly2 B(std::move(bc));
    IntPoly res = resultant(lift_const(P), B);
    AlgebraicNumber ac = a, bcopy = b;
    return algnum_from_value(res, [ac, bcopy](mpfr_prec_t prec) { return ac.interval(prec) * bcopy.interval(prec); });
}

AlgebraicNumber add(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_rational() && b.is_rational()) return AlgebraicNumber::from_rational(a.rational_value() + b.rational_value());
    if (a.is_rational() || b.is_rational()) {
        const AlgebraicNumber& alg = a.is_rational() ? b : a;
        mpq_class r = (a.is_rational() ? a : b).rational_value();
        IntPoly mp = subst_shift(alg.minpoly(), -r);
        const RootBox& s = alg.box();
        RootBox nb = s;
        nb.re_lo = s.re_lo + r;
        nb.re_hi = s.re_hi + r;
        return AlgebraicNumber(mp, nb);
    }
    // resultant_Y(P(Y), Q(X - Y)) vanishes at sums x + y
    const IntPoly& P = a.minpoly();
    const IntPoly& Q = b.minpoly();
    IntPoly2 xminus(std::vector<IntPoly>{IntPoly(std::vector<mpz_class>{0, 1}), IntPoly(mpz_class(-1))});
    IntPoly2 B;  // Q(X - Y) via Horner in Y-poly ring
    for (int j = Q.degree(); j >= 0; --j) {
        B = B * xminus;
        B = B + IntPoly2(IntPoly(Q[static_cast<size_t>(j)]));
    }
    IntPoly res = resultant(lift_const(P), B);
    AlgebraicNumber ac = a, bc = b;
    return algnum_from_value(res, [ac, bc](mpfr_prec_t prec) { return ac.interval(prec) + bc.interval(prec); });
}

AlgebraicNumber sub(const AlgebraicNumber& a, const AlgebraicNumber& b) { return add(a, b.neg()); }

AlgebraicNumber div(const AlgebraicNumber& a, const AlgebraicNumber& b) { return mul(a, b.inv()); }

AlgebraicNumber AlgebraicNumber::pow(long n) const {
    if (n == 0) {
        if (is_zero()) throw std::domain_error("0^0 undefined here");
        return from_int(1);
    }
    if (is_zero()) {
        if (n < 0) throw std::domain_error("zero base with negative exponent");
        return from_int(0);
    }
    if (n < 0) return inv().pow(-n);
    if (n == 1) return *this;
    if (is_rational()) {
        mpq_class r = rational_value(), acc(1);
        for (long i = 0; i < n; ++i) acc *= r;
        return from_rational(acc);
    }
    // resultant_Y(P(Y), X - Y^n)
    const IntPoly& P = minpoly_;
    std::vector<IntPoly> bc(static_cast<size_t>(n) + 1);
    bc[0] = IntPoly(std::vector<mpz_class>{0, 1});  // X
    bc[static_cast<size_t>(n)] = IntPoly(mpz_class(-1));
    IntPoly2 B(std::move(bc));
    IntPoly res = resultant(lift_const(P), B);
    AlgebraicNumber self = *this;
    return algnum_from_value(res, [self, n](mpfr_prec_t prec) { return self.interval(prec).pow(n); });
}

bool AlgebraicNumber::equals(const AlgebraicNumber& o) const {
    if (minpoly_ != o.minpoly_) return false;
    if (is_rational()) return true;  // same degree-1 minpoly determines the value
    for (mpfr_prec_t prec = 96; prec <= 4096; prec *= 2) {
        ComplexInterval x = interval(prec), y = o.interval(prec);
        if (!x.re.intersects(y.re) || !x.im.intersects(y.im)) return false;
    }
    return sub(*this, o).is_zero();
}

TupleHeightReport tuple_height(const std::vector<AlgebraicNumber>& x, double tol) {
    TupleHeightReport r;
    r.tuple_height = 0;
    for (const auto& c : x) {
        double h = weil_height(c, tol);
        r.coordinate_heights.push_back(h);
        r.tuple_height = std::max(r.tuple_height, h);
    }
    r.exponential_height = std::exp(r.tuple_height);
    return r;
}

}  // namespace divcurve
