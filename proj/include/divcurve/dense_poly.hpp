#ifndef DIVCURVE_DENSE_POLY_HPP
#define DIVCURVE_DENSE_POLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace divcurve {

// Coefficient-ring hooks. Every ring used as a DensePoly coefficient needs
// ring_is_zero and ring_divexact (exact division in an integral domain).
inline bool ring_is_zero(const mpz_class& a) { return sgn(a) == 0; }
inline bool ring_is_zero(const mpq_class& a) { return sgn(a) == 0; }

inline mpz_class ring_divexact(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline mpq_class ring_divexact(const mpq_class& a, const mpq_class& b) {
    mpq_class q = a / b;
    q.canonicalize();
    return q;
}

// Dense univariate polynomial over a commutative ring R, coefficients
// ascending by degree, highest coefficient nonzero (zero poly = empty).
template <class R>
class DensePoly {
  public:
    DensePoly() = default;
    DensePoly(const R& constant) {
        if (!ring_is_zero(constant)) c_.push_back(constant);
    }
    explicit DensePoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static DensePoly monomial(const R& coeff, int deg) {
        DensePoly p;
        if (!ring_is_zero(coeff)) {
            p.c_.assign(static_cast<size_t>(deg) + 1, R());
            p.c_.back() = coeff;
        }
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }
    const R& operator[](size_t i) const {
        static const R zero{};
        return i < c_.size() ? c_[i] : zero;
    }
    const R& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    void set_coeff(size_t i, const R& v) {
        if (i >= c_.size()) c_.resize(i + 1, R());
        c_[i] = v;
        trim();
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

    DensePoly operator-() const {
        DensePoly r(*this);
        for (auto& x : r.c_) x = R() - x;
        return r;
    }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        DensePoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), R());
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a[i] + b[i];
        r.trim();
        return r;
    }
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
        DensePoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), R());
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a[i] - b[i];
        r.trim();
        return r;
    }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return DensePoly();
        DensePoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, R());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (ring_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend DensePoly operator*(const DensePoly& a, const R& s) {
        DensePoly r(a);
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }

    DensePoly derivative() const {
        DensePoly r;
        for (size_t i = 1; i < c_.size(); ++i) {
            R k{};
            for (size_t j = 0; j < i; ++j) k = k + R(1);  // i as ring element
            r.c_.push_back(c_[i] * k);
        }
        r.trim();
        return r;
    }

    // Horner evaluation into any value type V supporting V*V, V+V and
    // construction from R.
    template <class V>
    V eval(const V& x) const {
        if (c_.empty()) return V(R());
        V acc(c_.back());
        for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + V(c_[i]);
        return acc;
    }

    DensePoly pow(unsigned e) const {
        DensePoly base = *this, r(R(1));
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // Coefficient reversal: X^deg * p(1/X).
    DensePoly reversed() const {
        DensePoly r(*this);
        std::reverse(r.c_.begin(), r.c_.end());
        r.trim();
        return r;
    }

    // p(c*X) and p(X+c) for ring constants.
    DensePoly scale_arg(const R& c) const {
        DensePoly r(*this);
        R f(1);
        for (size_t i = 1; i < r.c_.size(); ++i) {
            f = f * c;
            r.c_[i] = r.c_[i] * f;
        }
        r.trim();
        return r;
    }

  private:
    void trim() {
        while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

template <class R>
bool ring_is_zero(const DensePoly<R>& p) {
    return p.is_zero();
}

// Exact polynomial division over an integral domain: requires b | a.
template <class R>
DensePoly<R> ring_divexact(const DensePoly<R>& a, const DensePoly<R>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return {};
    int da = a.degree(), db = b.degree();
    if (da < db) throw std::domain_error("inexact polynomial division");
    std::vector<R> rem(a.coeffs());
    std::vector<R> quot(static_cast<size_t>(da - db) + 1, R());
    for (int k = da - db; k >= 0; --k) {
        R q = ring_divexact(rem[static_cast<size_t>(k + db)], b.leading());
        quot[static_cast<size_t>(k)] = q;
        if (!ring_is_zero(q))
            for (int j = 0; j <= db; ++j)
                rem[static_cast<size_t>(k + j)] = rem[static_cast<size_t>(k + j)] - q * b[static_cast<size_t>(j)];
    }
    for (const auto& r : rem)
        if (!ring_is_zero(r)) throw std::domain_error("inexact polynomial division");
    return DensePoly<R>(std::move(quot));
}

// Sylvester resultant of a and b with respect to their variable, computed by
// fraction-free Bareiss elimination so all intermediate values stay in R.
// Both inputs must have positive degree in the eliminated variable.
template <class R>
R resultant(const DensePoly<R>& a, const DensePoly<R>& b) {
    int m = a.degree(), n = b.degree();
    if (m < 1 || n < 1) throw std::domain_error("resultant: input degenerate in eliminated variable");
    size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<R>> M(dim, std::vector<R>(dim, R()));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) M[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = a[static_cast<size_t>(m - j)];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) M[static_cast<size_t>(n + r)][static_cast<size_t>(r + j)] = b[static_cast<size_t>(n - j)];

    bool negate = false;
    R prev(1);
    for (size_t k = 0; k + 1 < dim; ++k) {
        if (ring_is_zero(M[k][k])) {
            size_t swap_row = k;
            for (size_t i = k + 1; i < dim; ++i)
                if (!ring_is_zero(M[i][k])) {
                    swap_row = i;
                    break;
                }
            if (swap_row == k) return R();  // singular: resultant vanishes
            std::swap(M[k], M[swap_row]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < dim; ++i) {
            for (size_t j = k + 1; j < dim; ++j)
                M[i][j] = ring_divexact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
            M[i][k] = R();
        }
        prev = M[k][k];
    }
    R det = M[dim - 1][dim - 1];
    return negate ? R() - det : det;
}

}  // namespace divcurve

#endif
