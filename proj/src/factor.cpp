#include "divcurve/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace divcurve {
namespace {

using u64 = std::uint64_t;

// ---------------------------------------------------------------------------
// Dense polynomials over F_p, p an odd prime < 2^31, coefficients in [0, p).
// ---------------------------------------------------------------------------
using ModPoly = std::vector<u64>;

void mp_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
int mp_deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 inv_mod(u64 a, u64 p) {
    // extended Euclid on integers
    long long t = 0, nt = 1, r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<u64>(t);
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    mp_trim(r);
    return r;
}

ModPoly mp_scale(const ModPoly& a, u64 s, u64 p) {
    ModPoly r(a);
    for (auto& x : r) x = x * s % p;
    mp_trim(r);
    return r;
}

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, u64 p) {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    mp_trim(r);
    return r;
}

// a mod b, b nonzero
ModPoly mp_rem(ModPoly a, const ModPoly& b, u64 p) {
    u64 li = inv_mod(b.back(), p);
    while (mp_deg(a) >= mp_deg(b)) {
        u64 f = a.back() * li % p;
        size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[off + j] = (a[off + j] + p - f * b[j] % p) % p;
        mp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

ModPoly mp_monic(const ModPoly& a, u64 p) {
    if (a.empty()) return a;
    return mp_scale(a, inv_mod(a.back(), p), p);
}

ModPoly mp_gcd(ModPoly a, ModPoly b, u64 p) {
    while (!b.empty()) {
        ModPoly r = mp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a, p);
}

ModPoly mp_deriv(const ModPoly& a, u64 p) {
    ModPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
    mp_trim(r);
    return r;
}

ModPoly mp_powmod_x(u64 e, const ModPoly& f, u64 p) {
    // x^e mod f by square-and-multiply
    ModPoly base{0, 1}, r{1};
    base = mp_rem(base, f, p);
    while (e) {
        if (e & 1) r = mp_rem(mp_mul(r, base, p), f, p);
        base = mp_rem(mp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

ModPoly to_modpoly(const IntPoly& a, u64 p) {
    ModPoly r;
    r.reserve(a.coeffs().size());
    mpz_class pz(static_cast<unsigned long>(p));
    for (const auto& c : a.coeffs()) {
        mpz_class m = c % pz;
        if (m < 0) m += pz;
        r.push_back(m.get_ui());
    }
    mp_trim(r);
    return r;
}

// Berlekamp kernel dimension (= number of irreducible factors for monic
// squarefree f), and optionally the full kernel basis.
int berlekamp_kernel(const ModPoly& f, u64 p, std::vector<ModPoly>* basis_out) {
    int n = mp_deg(f);
    ModPoly xp = mp_powmod_x(p, f, p);
    // rows[i] = x^{i*p} mod f
    std::vector<ModPoly> rows(static_cast<size_t>(n));
    rows[0] = ModPoly{1};
    for (int i = 1; i < n; ++i) rows[static_cast<size_t>(i)] = mp_rem(mp_mul(rows[static_cast<size_t>(i - 1)], xp, p), f, p);
    // M = Q - I, column-major elimination on rows as vectors of length n
    std::vector<std::vector<u64>> M(static_cast<size_t>(n), std::vector<u64>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        for (size_t j = 0; j < rows[static_cast<size_t>(i)].size(); ++j) M[static_cast<size_t>(i)][j] = rows[static_cast<size_t>(i)][j];
        M[static_cast<size_t>(i)][static_cast<size_t>(i)] = (M[static_cast<size_t>(i)][static_cast<size_t>(i)] + p - 1) % p;
    }
    // Row-reduce M (treating rows of M as vectors to combine); we need the
    // kernel of the matrix whose ROWS are M[i] acting as v -> v*M ... use
    // standard kernel of M^T: solve sum_i v_i M[i][j] = 0 for all j.
    // Transpose and eliminate.
    std::vector<std::vector<u64>> A(static_cast<size_t>(n), std::vector<u64>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[static_cast<size_t>(j)][static_cast<size_t>(i)] = M[static_cast<size_t>(i)][static_cast<size_t>(j)];
    std::vector<int> pivot_col(static_cast<size_t>(n), -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pr = -1;
        for (int r = rank; r < n; ++r)
            if (A[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(A[static_cast<size_t>(rank)], A[static_cast<size_t>(pr)]);
        u64 inv = inv_mod(A[static_cast<size_t>(rank)][static_cast<size_t>(col)], p);
        for (int j = 0; j < n; ++j) A[static_cast<size_t>(rank)][static_cast<size_t>(j)] = A[static_cast<size_t>(rank)][static_cast<size_t>(j)] * inv % p;
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            u64 f2 = A[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f2 == 0) continue;
            for (int j = 0; j < n; ++j)
                A[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                    (A[static_cast<size_t>(r)][static_cast<size_t>(j)] + (p - f2) * A[static_cast<size_t>(rank)][static_cast<size_t>(j)]) % p;
        }
        pivot_col[static_cast<size_t>(rank)] = col;
        ++rank;
    }
    int dim = n - rank;
    if (basis_out) {
        basis_out->clear();
        std::vector<bool> is_pivot(static_cast<size_t>(n), false);
        for (int r = 0; r < rank; ++r) is_pivot[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = true;
        for (int free_col = 0; free_col < n; ++free_col) {
            if (is_pivot[static_cast<size_t>(free_col)]) continue;
            std::vector<u64> v(static_cast<size_t>(n), 0);
            v[static_cast<size_t>(free_col)] = 1;
            for (int r = 0; r < rank; ++r) {
                u64 val = A[static_cast<size_t>(r)][static_cast<size_t>(free_col)];
                if (val) v[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = p - val;
            }
            ModPoly vp(v.begin(), v.end());
            mp_trim(vp);
            basis_out->push_back(std::move(vp));
        }
    }
    return dim;
}

// quotient of a by h (h | a assumed, h monic up to unit)
ModPoly mp_quo(const ModPoly& a, const ModPoly& h, u64 p) {
    ModPoly rem = a, q;
    u64 li = inv_mod(h.back(), p);
    if (mp_deg(rem) < mp_deg(h)) return {};
    q.assign(rem.size() - h.size() + 1, 0);
    for (int k = static_cast<int>(rem.size() - h.size()); k >= 0; --k) {
        u64 f = rem[static_cast<size_t>(k) + h.size() - 1] * li % p;
        q[static_cast<size_t>(k)] = f;
        for (size_t j = 0; j < h.size(); ++j)
            rem[static_cast<size_t>(k) + j] = (rem[static_cast<size_t>(k) + j] + p - f * h[j] % p) % p;
    }
    mp_trim(q);
    return q;
}

// Full Berlekamp splitting of monic squarefree f mod p.
std::vector<ModPoly> berlekamp_factor(const ModPoly& f, u64 p) {
    std::vector<ModPoly> basis;
    int r = berlekamp_kernel(f, p, &basis);
    std::vector<ModPoly> factors{f};
    if (r == 1) return factors;
    for (const ModPoly& v : basis) {
        if (static_cast<int>(factors.size()) >= r) break;
        if (mp_deg(v) < 1) continue;  // constant kernel vector splits nothing
        std::vector<ModPoly> next;
        for (const ModPoly& g : factors) {
            if (mp_deg(g) <= 1) {
                next.push_back(g);
                continue;
            }
            ModPoly remaining = g;
            for (u64 c = 0; c < p && mp_deg(remaining) > 0; ++c) {
                ModPoly shifted = v.empty() ? ModPoly{0} : v;
                if (shifted.empty()) shifted.push_back(0);
                shifted[0] = (shifted[0] + p - c) % p;
                mp_trim(shifted);
                if (shifted.empty()) continue;
                ModPoly h = mp_gcd(remaining, shifted, p);
                if (mp_deg(h) > 0 && mp_deg(h) < mp_deg(remaining)) {
                    next.push_back(h);
                    remaining = mp_quo(remaining, h, p);
                }
            }
            if (mp_deg(remaining) > 0) next.push_back(remaining);
        }
        factors = std::move(next);
    }
    for (auto& g : factors) g = mp_monic(g, p);
    std::sort(factors.begin(), factors.end());
    return factors;
}

// ---------------------------------------------------------------------------
// Integer polynomials modulo m (mpz modulus) for Hensel lifting.
// ---------------------------------------------------------------------------
IntPoly zp_reduce(const IntPoly& a, const mpz_class& m) {
    std::vector<mpz_class> c(a.coeffs());
    for (auto& x : c) {
        x %= m;
        if (x < 0) x += m;
    }
    return IntPoly(std::move(c));
}

IntPoly zp_symmetric(const IntPoly& a, const mpz_class& m) {
    std::vector<mpz_class> c(zp_reduce(a, m).coeffs());
    mpz_class half = m / 2;
    for (auto& x : c)
        if (x > half) x -= m;
    return IntPoly(std::move(c));
}

IntPoly zp_mul(const IntPoly& a, const IntPoly& b, const mpz_class& m) { return zp_reduce(a * b, m); }

// divide a by monic h modulo m: a = q*h + r
void zp_divmod_monic(const IntPoly& a, const IntPoly& h, const mpz_class& m, IntPoly& q, IntPoly& r) {
    std::vector<mpz_class> rem(a.coeffs());
    int da = a.degree(), dh = h.degree();
    if (da < dh) {
        q = IntPoly();
        r = zp_reduce(a, m);
        return;
    }
    std::vector<mpz_class> quot(static_cast<size_t>(da - dh) + 1, mpz_class(0));
    for (int k = da - dh; k >= 0; --k) {
        mpz_class f = rem[static_cast<size_t>(k + dh)] % m;
        if (f < 0) f += m;
        quot[static_cast<size_t>(k)] = f;
        if (f != 0)
            for (int j = 0; j <= dh; ++j) {
                mpz_class& tgt = rem[static_cast<size_t>(k + j)];
                tgt = (tgt - f * h[static_cast<size_t>(j)]) % m;
            }
        rem[static_cast<size_t>(k + dh)] = 0;
    }
    for (auto& x : rem)
        if (x < 0) x += m;
    rem.resize(static_cast<size_t>(dh));
    q = IntPoly(std::move(quot));
    r = zp_reduce(IntPoly(std::move(rem)), m);
}

IntPoly modpoly_to_int(const ModPoly& a) {
    std::vector<mpz_class> c;
    c.reserve(a.size());
    for (u64 x : a) c.emplace_back(static_cast<unsigned long>(x));
    return IntPoly(std::move(c));
}

// Extended Euclid mod p: s*g + t*h = 1.
void mp_extgcd(const ModPoly& g, const ModPoly& h, u64 p, ModPoly& s, ModPoly& t) {
    ModPoly r0 = g, r1 = h, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // q, rem of r0 / r1
        ModPoly a = r0, q;
        u64 li = inv_mod(r1.back(), p);
        if (mp_deg(a) >= mp_deg(r1)) {
            q.assign(a.size() - r1.size() + 1, 0);
            for (int k = static_cast<int>(a.size() - r1.size()); k >= 0; --k) {
                u64 f = a[static_cast<size_t>(k) + r1.size() - 1] * li % p;
                q[static_cast<size_t>(k)] = f;
                for (size_t j = 0; j < r1.size(); ++j)
                    a[static_cast<size_t>(k) + j] = (a[static_cast<size_t>(k) + j] + p - f * r1[j] % p) % p;
            }
            mp_trim(a);
        }
        ModPoly ns = mp_sub(s0, mp_mul(q, s1, p), p);
        ModPoly nt = mp_sub(t0, mp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(a);
        s0 = std::move(s1);
        s1 = std::move(ns);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    u64 li = inv_mod(r0.back(), p);  // r0 is a nonzero constant for coprime inputs
    s = mp_scale(s0, li, p);
    t = mp_scale(t0, li, p);
}

// One quadratic Hensel step: from modulus m to m^2.
void hensel_step(const mpz_class& m, const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t) {
    mpz_class m2 = m * m;
    IntPoly e = zp_reduce(f - g * h, m2);
    IntPoly q, r;
    zp_divmod_monic(zp_mul(s, e, m2), h, m2, q, r);
    IntPoly g1 = zp_reduce(g + t * e + q * g, m2);
    IntPoly h1 = zp_reduce(h + r, m2);
    IntPoly b = zp_reduce(s * g1 + t * h1 - IntPoly(mpz_class(1)), m2);
    IntPoly c, d;
    zp_divmod_monic(zp_mul(s, b, m2), h1, m2, c, d);
    IntPoly s1 = zp_reduce(s - d, m2);
    IntPoly t1 = zp_reduce(t - t * b - c * g1, m2);
    g = g1;
    h = h1;
    s = s1;
    t = t1;
}

// Lift monic factors (mod p) of primitive f to monic factors mod p^l
// (f == lc(f) * prod(factors) mod p).
std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<ModPoly>& fs, u64 p, const mpz_class& ptarget) {
    if (fs.size() == 1) {
        mpz_class lc_inv;
        mpz_class lc = f.leading() % ptarget;
        if (lc < 0) lc += ptarget;
        mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), ptarget.get_mpz_t());
        return {zp_reduce(f * IntPoly(lc_inv), ptarget)};
    }
    size_t k = fs.size() / 2;
    ModPoly g0{1}, h0{1};
    for (size_t i = 0; i < k; ++i) g0 = mp_mul(g0, fs[i], p);
    for (size_t i = k; i < fs.size(); ++i) h0 = mp_mul(h0, fs[i], p);
    ModPoly lc_mod = to_modpoly(IntPoly(f.leading()), p);
    g0 = mp_scale(g0, lc_mod.empty() ? 0 : lc_mod[0], p);
    ModPoly s0, t0;
    mp_extgcd(g0, h0, p, s0, t0);
    IntPoly g = modpoly_to_int(g0), h = modpoly_to_int(h0), s = modpoly_to_int(s0), t = modpoly_to_int(t0);
    mpz_class m(static_cast<unsigned long>(p));
    while (m < ptarget) {
        hensel_step(m, f, g, h, s, t);
        m = m * m;
    }
    std::vector<ModPoly> gs(fs.begin(), fs.begin() + static_cast<long>(k));
    std::vector<ModPoly> hs(fs.begin() + static_cast<long>(k), fs.end());
    std::vector<IntPoly> out = hensel_lift(zp_reduce(g, ptarget), gs, p, ptarget);
    std::vector<IntPoly> out2 = hensel_lift(zp_reduce(h, ptarget), hs, p, ptarget);
    out.insert(out.end(), out2.begin(), out2.end());
    return out;
}

// Zassenhaus factorization of a primitive squarefree polynomial of degree>=1.
std::vector<IntPoly> factor_squarefree(const IntPoly& b) {
    int n = b.degree();
    if (n == 1) return {normalized(b)};

    static const u64 small_primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                       59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127,
                                       131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199};
    u64 best_p = 0;
    int best_r = n + 1;
    int tried = 0;
    for (u64 p : small_primes) {
        if (mpz_divisible_ui_p(b.leading().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        ModPoly fb = mp_monic(to_modpoly(b, p), p);
        if (mp_deg(fb) != n) continue;
        ModPoly g = mp_gcd(fb, mp_deriv(fb, p), p);
        if (mp_deg(g) != 0) continue;  // not squarefree mod p
        int r = berlekamp_kernel(fb, p, nullptr);
        if (r < best_r) {
            best_r = r;
            best_p = p;
        }
        if (++tried >= 4 || best_r == 1) break;
    }
    if (best_p == 0) throw std::runtime_error("factor: no usable small prime found");
    if (best_r == 1) return {normalized(b)};

    u64 p = best_p;
    ModPoly fb = mp_monic(to_modpoly(b, p), p);
    std::vector<ModPoly> mod_factors = berlekamp_factor(fb, p);

    // Landau-Mignotte style bound on coefficients of lc(b) * (factor of b).
    mpz_class H = 0;
    for (const auto& c : b.coeffs()) H = std::max(H, mpz_class(abs(c)));
    mpz_class B = (mpz_class(n) + 1) * H * abs(b.leading());
    mpz_mul_2exp(B.get_mpz_t(), B.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1));
    mpz_class ptarget(static_cast<unsigned long>(p));
    while (ptarget <= 2 * B) ptarget *= static_cast<unsigned long>(p);

    std::vector<IntPoly> lifted = hensel_lift(zp_reduce(b, ptarget), mod_factors, p, ptarget);

    // Recombination by subset cardinality.
    std::vector<IntPoly> out;
    std::vector<size_t> live(lifted.size());
    std::iota(live.begin(), live.end(), size_t{0});
    IntPoly rest = b;
    size_t s = 1;
    while (2 * s <= live.size()) {
        bool found = false;
        std::vector<size_t> idx(s);
        std::iota(idx.begin(), idx.end(), size_t{0});
        while (true) {
            IntPoly cand(rest.leading());
            for (size_t i : idx) cand = zp_mul(cand, lifted[live[i]], ptarget);
            cand = normalized(zp_symmetric(cand, ptarget));
            if (!cand.is_zero() && cand.degree() >= 1 && divides(cand, rest)) {
                out.push_back(cand);
                rest = ring_divexact(rest, cand) ;
                std::vector<size_t> nl;
                for (size_t i2 = 0; i2 < live.size(); ++i2)
                    if (std::find(idx.begin(), idx.end(), i2) == idx.end()) nl.push_back(live[i2]);
                live = std::move(nl);
                found = true;
                break;
            }
            // next subset
            int pos = static_cast<int>(s) - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == live.size() - s + static_cast<size_t>(pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (size_t j = static_cast<size_t>(pos) + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (rest.degree() >= 1) out.push_back(normalized(rest));
    return out;
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        int c = cmp(a[static_cast<size_t>(i)], b[static_cast<size_t>(i)]);
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace

Factorization factor(const IntPoly& a) {
    if (a.is_zero()) throw std::domain_error("factor: zero polynomial");
    Factorization out;
    out.content = content(a);
    if (sgn(a.leading()) < 0) out.content = -out.content;
    if (a.degree() == 0) return out;
    for (const auto& [sf, mult] : squarefree_decomposition(a)) {
        for (const auto& irr : factor_squarefree(sf)) out.factors.emplace_back(irr, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
    return out;
}

bool is_irreducible(const IntPoly& a) {
    if (a.degree() < 1) return false;
    Factorization f = factor(a);
    return f.factors.size() == 1 && f.factors[0].second == 1 && abs(f.content) == 1;
}

}  // namespace divcurve
