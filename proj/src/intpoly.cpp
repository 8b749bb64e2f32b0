#include "divcurve/intpoly.hpp"

#include <map>
#include <sstream>

namespace divcurve {

IntPoly intpoly_from_coeffs(std::vector<long> ascending) {
    std::vector<mpz_class> c;
    c.reserve(ascending.size());
    for (long v : ascending) c.emplace_back(v);
    return IntPoly(std::move(c));
}

mpz_class content(const IntPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& a) {
    if (a.is_zero()) return a;
    mpz_class ct = content(a);
    std::vector<mpz_class> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) c.push_back(ring_divexact(x, ct));
    return IntPoly(std::move(c));
}

IntPoly normalized(const IntPoly& a) {
    if (a.is_zero()) return a;
    IntPoly p = primitive_part(a);
    if (sgn(p.leading()) < 0) p = -p;
    return p;
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo_rem by zero");
    int da = a.degree(), db = b.degree();
    if (da < db) return a;
    std::vector<mpz_class> rem(a.coeffs());
    const mpz_class& lb = b.leading();
    for (int k = da; k >= db; --k) {
        mpz_class top = rem[static_cast<size_t>(k)];
        for (auto& r : rem) r *= lb;
        if (top != 0)
            for (int j = 0; j <= db; ++j)
                rem[static_cast<size_t>(k - db + j)] -= top * b[static_cast<size_t>(j)];
        rem[static_cast<size_t>(k)] = 0;
    }
    rem.resize(static_cast<size_t>(db));
    return IntPoly(std::move(rem));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0,0) undefined");
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    IntPoly u = primitive_part(a), v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (v.degree() > 0) {
        IntPoly r = pseudo_rem(u, v);
        if (r.is_zero()) return normalized(v);
        u = v;
        v = primitive_part(r);
    }
    // Primitive parts are coprime (v is a nonzero constant here).
    return IntPoly(mpz_class(1));
}

bool divides(const IntPoly& d, const IntPoly& a) {
    if (d.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < d.degree()) return false;
    try {
        (void)ring_divexact(a, d);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

IntPoly divexact_poly(const IntPoly& a, const IntPoly& d) { return ring_divexact(a, d); }

IntPoly squarefree_part(const IntPoly& a) {
    if (a.is_zero()) throw std::domain_error("squarefree part of zero");
    if (a.degree() == 0) return IntPoly(mpz_class(1));
    IntPoly g = poly_gcd(a, a.derivative());
    return normalized(ring_divexact(primitive_part(a), g));
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& a) {
    std::vector<std::pair<IntPoly, int>> out;
    if (a.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    IntPoly p = normalized(a);
    if (p.degree() == 0) return out;
    // Yun's algorithm.
    IntPoly d = p.derivative();
    IntPoly g = poly_gcd(p, d);
    IntPoly w = ring_divexact(p, g);
    IntPoly y = ring_divexact(d, g);
    int i = 1;
    while (w.degree() > 0) {
        IntPoly z = y - w.derivative();
        if (z.is_zero()) {
            out.emplace_back(normalized(w), i);
            break;
        }
        IntPoly f = poly_gcd(w, z);
        if (f.degree() > 0) out.emplace_back(normalized(f), i);
        w = ring_divexact(w, f);
        y = ring_divexact(z, f);
        ++i;
    }
    return out;
}

IntPoly cyclotomic(unsigned m) {
    if (m == 0) throw std::domain_error("cyclotomic index must be positive");
    static std::map<unsigned, IntPoly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // X^m - 1 divided by all lower-order cyclotomics at divisors of m.
    std::vector<mpz_class> c(m + 1, mpz_class(0));
    c[0] = -1;
    c[m] = 1;
    IntPoly phi = IntPoly(std::move(c));
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) phi = ring_divexact(phi, cyclotomic(d));
    cache[m] = phi;
    return phi;
}

namespace {
int sign_at(const QPoly& p, const mpq_class& x) { return sgn(p.eval(x)); }

std::vector<QPoly> sturm_chain(const IntPoly& a) {
    std::vector<QPoly> chain;
    QPoly p0 = to_qpoly(squarefree_part(a));
    if (p0.degree() <= 0) return chain;
    chain.push_back(p0);
    chain.push_back(to_qpoly(squarefree_part(a).derivative()));
    while (chain.back().degree() > 0) {
        QPoly rem;
        qpoly_divmod(chain[chain.size() - 2], chain.back(), rem);
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    return chain;
}

int sign_changes(const std::vector<int>& s) {
    int n = 0, prev = 0;
    for (int v : s) {
        if (v == 0) continue;
        if (prev != 0 && v != prev) ++n;
        prev = v;
    }
    return n;
}
}  // namespace

int sturm_count(const IntPoly& a, const mpq_class& lo, const mpq_class& hi) {
    if (a.is_zero()) throw std::domain_error("sturm on zero polynomial");
    if (lo > hi) return 0;
    auto chain = sturm_chain(a);
    if (chain.empty()) return 0;
    // Closed-interval semantics: nudge endpoints outward past any root.
    auto eval_signs = [&](const mpq_class& x) {
        std::vector<int> s;
        s.reserve(chain.size());
        for (const auto& p : chain) s.push_back(sign_at(p, x));
        return s;
    };
    int count = sign_changes(eval_signs(lo)) - sign_changes(eval_signs(hi));
    // Sturm counts roots in (lo, hi]; add lo if it is a root.
    if (sign_at(chain[0], lo) == 0) ++count;
    return count;
}

int sturm_count_all(const IntPoly& a) {
    auto chain = sturm_chain(a);
    if (chain.empty()) return 0;
    auto signs_at_inf = [&](int dir) {
        std::vector<int> s;
        for (const auto& p : chain) {
            int lead = sgn(p.leading());
            if (dir < 0 && p.degree() % 2 == 1) lead = -lead;
            s.push_back(lead);
        }
        return s;
    };
    return sign_changes(signs_at_inf(-1)) - sign_changes(signs_at_inf(+1));
}

QPoly to_qpoly(const IntPoly& a) {
    std::vector<mpq_class> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) c.emplace_back(x);
    return QPoly(std::move(c));
}

IntPoly clear_denominators(const QPoly& a) {
    mpz_class lcm = 1;
    for (const auto& c : a.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) {
        mpq_class s = c * lcm;
        out.push_back(s.get_num());
    }
    return normalized(IntPoly(std::move(out)));
}

QPoly qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& rem) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<mpq_class> r(a.coeffs());
    int da = a.degree(), db = b.degree();
    if (da < db) {
        rem = a;
        return QPoly();
    }
    std::vector<mpq_class> q(static_cast<size_t>(da - db) + 1, mpq_class(0));
    for (int k = da - db; k >= 0; --k) {
        mpq_class f = r[static_cast<size_t>(k + db)] / b.leading();
        q[static_cast<size_t>(k)] = f;
        if (f != 0)
            for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k + j)] -= f * b[static_cast<size_t>(j)];
    }
    r.resize(static_cast<size_t>(db));
    rem = QPoly(std::move(r));
    return QPoly(std::move(q));
}

QPoly qpoly_gcd_monic(const QPoly& a, const QPoly& b) {
    QPoly u = a, v = b;
    while (!v.is_zero()) {
        QPoly rem;
        qpoly_divmod(u, v, rem);
        u = v;
        v = rem;
    }
    if (u.is_zero()) return u;
    return u * (mpq_class(1) / u.leading());
}

std::string to_string(const IntPoly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = a.degree(); i >= 0; --i) {
        const mpz_class& c = a[static_cast<size_t>(i)];
        if (c == 0) continue;
        mpz_class abs_c = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        bool need_coeff = (abs_c != 1) || i == 0;
        if (need_coeff) os << abs_c.get_str();
        if (i > 0) {
            if (need_coeff) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace divcurve
