#include "zpoly_detail.hpp"

#include <algorithm>
#include <cstdint>

namespace hyperflex::detail {

void z_normalize(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long z_degree(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

mpz_class z_content(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly z_primitive(const ZPoly& p) {
    mpz_class c = z_content(p);
    if (c == 0 || c == 1) return p;
    ZPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(r[i].get_mpz_t(), p[i].get_mpz_t(), c.get_mpz_t());
    return r;
}

ZPoly z_derivative(const ZPoly& p) {
    if (p.size() <= 1) return {};
    ZPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<unsigned long>(i);
    z_normalize(r);
    return r;
}

int z_sign_at(const ZPoly& p, const Rat& x) {
    if (p.empty()) return 0;
    const mpz_class a = x.num(), b = x.den();
    // sum c_i a^i b^(n-i) via Horner
    mpz_class acc = p.back();
    mpz_class bpow = 1;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        bpow *= b;
        acc = acc * a + p[i] * bpow;
    }
    return sgn(acc);
}

int z_sign_at_inf(const ZPoly& p, int dir) {
    if (p.empty()) return 0;
    int s = sgn(p.back());
    if (dir < 0 && (p.size() - 1) % 2 == 1) s = -s;
    return s;
}

ZPoly z_from_q(const QPoly& p) {
    if (p.is_zero()) return {};
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        mpz_class d = c.den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    ZPoly z(p.coeffs().size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        const Rat& c = p.coeff(i);
        z[i] = c.num() * (den_lcm / c.den());
    }
    return z_primitive(z);
}

QPoly q_from_z(const ZPoly& p) {
    std::vector<Rat> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = Rat(p[i]);
    return QPoly(std::move(c));
}

ZPoly z_prem(const ZPoly& n, const ZPoly& d) {
    if (d.empty()) throw computation_error("z_prem: zero divisor");
    ZPoly r = n;
    z_normalize(r);
    long e = z_degree(n) - z_degree(d) + 1;
    const mpz_class& dl = d.back();
    while (!r.empty() && z_degree(r) >= z_degree(d)) {
        std::size_t shift = static_cast<std::size_t>(z_degree(r) - z_degree(d));
        mpz_class rl = r.back();
        for (auto& c : r) c *= dl;
        for (std::size_t i = 0; i < d.size(); ++i) r[i + shift] -= rl * d[i];
        z_normalize(r);
        --e;
    }
    if (e > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), dl.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : r) c *= f;
    }
    return r;
}

namespace {

// --- single-prime modular gcd shortcut ------------------------------------

constexpr std::uint64_t kPrime = 0x1fffffffffffffffULL; // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t z_mod_p(const mpz_class& v) {
    unsigned long m = mpz_fdiv_ui(v.get_mpz_t(), kPrime);
    return static_cast<std::uint64_t>(m);
}

using PPoly = std::vector<std::uint64_t>;

void p_normalize(PPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

PPoly p_from_z(const ZPoly& z) {
    PPoly p(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) p[i] = z_mod_p(z[i]);
    p_normalize(p);
    return p;
}

PPoly p_rem(PPoly a, const PPoly& b) {
    std::uint64_t inv_lead = powmod(b.back(), kPrime - 2);
    while (a.size() >= b.size()) {
        std::uint64_t f = mulmod(a.back(), inv_lead);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t sub = mulmod(f, b[i]);
            std::uint64_t& t = a[i + shift];
            t = (t >= sub) ? t - sub : t + kPrime - sub;
        }
        a.pop_back();
        p_normalize(a);
        if (a.empty()) break;
    }
    return a;
}

// Degree of gcd(a, b) mod kPrime; -1 when the reduction is unusable (a
// leading coefficient vanishes mod p).
long modular_gcd_degree(const ZPoly& a, const ZPoly& b) {
    if (z_mod_p(a.back()) == 0 || z_mod_p(b.back()) == 0) return -1;
    PPoly u = p_from_z(a), v = p_from_z(b);
    if (u.size() != a.size() || v.size() != b.size()) return -1;
    while (!v.empty()) {
        PPoly r = p_rem(std::move(u), v);
        u = std::move(v);
        v = std::move(r);
    }
    return static_cast<long>(u.size()) - 1;
}

// common power of x, handled separately to keep the PRS small
std::size_t strip_x_power(ZPoly& p) {
    std::size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    if (k > 0) p.erase(p.begin(), p.begin() + static_cast<long>(k));
    return k;
}

} // namespace

ZPoly z_gcd(ZPoly a, ZPoly b) {
    z_normalize(a);
    z_normalize(b);
    if (a.empty()) return z_primitive(b);
    if (b.empty()) return z_primitive(a);

    std::size_t xa = strip_x_power(a), xb = strip_x_power(b);
    std::size_t xcommon = std::min(xa, xb);

    ZPoly g;
    if (z_degree(a) == 0 || z_degree(b) == 0) {
        g = ZPoly{1};
    } else {
        long md = modular_gcd_degree(a, b);
        if (md == 0) {
            g = ZPoly{1};
        } else {
            ZPoly u = z_primitive(a), v = z_primitive(b);
            if (z_degree(u) < z_degree(v)) std::swap(u, v);
            mpz_class gc = 1, h = 1;
            while (true) {
                long delta = z_degree(u) - z_degree(v);
                ZPoly r = z_prem(u, v);
                if (r.empty()) {
                    g = z_primitive(v);
                    break;
                }
                if (z_degree(r) == 0) {
                    g = ZPoly{1};
                    break;
                }
                u = std::move(v);
                // divide r by gc * h^delta (exact, subresultant theory)
                mpz_class divisor;
                mpz_pow_ui(divisor.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
                divisor *= gc;
                v.resize(r.size());
                for (std::size_t i = 0; i < r.size(); ++i)
                    mpz_divexact(v[i].get_mpz_t(), r[i].get_mpz_t(), divisor.get_mpz_t());
                gc = u.back();
                if (delta > 0) {
                    mpz_class gp;
                    mpz_pow_ui(gp.get_mpz_t(), gc.get_mpz_t(), static_cast<unsigned long>(delta));
                    mpz_class hp;
                    mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
                    mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
                }
            }
        }
    }
    if (xcommon > 0) {
        ZPoly shifted(xcommon, mpz_class(0));
        shifted.insert(shifted.end(), g.begin(), g.end());
        g = std::move(shifted);
    }
    if (!g.empty() && g.back() < 0)
        for (auto& c : g) c = -c;
    return g;
}

std::vector<ZPoly> sturm_chain(const ZPoly& p) {
    std::vector<ZPoly> chain;
    ZPoly p0 = z_primitive(p);
    if (p0.empty()) throw input_error("sturm_chain: zero polynomial");
    chain.push_back(p0);
    ZPoly p1 = z_primitive(z_derivative(p0));
    if (p1.empty()) return chain;
    chain.push_back(p1);
    while (true) {
        const ZPoly& prev = chain[chain.size() - 2];
        const ZPoly& cur = chain.back();
        if (z_degree(cur) <= 0) break;
        long delta = z_degree(prev) - z_degree(cur);
        ZPoly r = z_prem(prev, cur);
        if (r.empty()) break;
        // prem multiplies by lc(cur)^(delta+1); flip so the next element is
        // proportional to -(prev mod cur) by a positive factor
        bool multiplier_negative = (sgn(cur.back()) < 0) && ((delta + 1) % 2 == 1);
        if (!multiplier_negative)
            for (auto& c : r) c = -c;
        chain.push_back(z_primitive(r));
    }
    return chain;
}

long sturm_variations(const std::vector<ZPoly>& chain, const Rat& x) {
    long var = 0;
    int prev = 0;
    for (const auto& q : chain) {
        int s = z_sign_at(q, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

long sturm_variations_at_inf(const std::vector<ZPoly>& chain, int dir) {
    long var = 0;
    int prev = 0;
    for (const auto& q : chain) {
        int s = z_sign_at_inf(q, dir);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

} // namespace hyperflex::detail

namespace hyperflex {

std::pair<std::vector<mpz_class>, Rat> to_primitive_integer(const QPoly& p) {
    if (p.is_zero()) return {{}, Rat(0)};
    detail::ZPoly z = detail::z_from_q(p);
    // factor = lead(p) / lead(z)
    Rat factor = p.lead() / Rat(z.back());
    return {std::move(z), factor};
}

QPoly from_integer(const std::vector<mpz_class>& z) { return detail::q_from_z(z); }

Rat cauchy_root_bound(const QPoly& p) {
    if (p.degree() < 1) return Rat(1);
    Rat m(0);
    Rat lead = p.lead().abs();
    for (long i = 0; i < p.degree(); ++i) {
        Rat v = p.coeff(static_cast<std::size_t>(i)).abs() / lead;
        if (v > m) m = v;
    }
    return pow2_at_least(m + Rat(1));
}

Poly<Rat> rat_poly_gcd(const Poly<Rat>& a, const Poly<Rat>& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    detail::ZPoly g = detail::z_gcd(detail::z_from_q(a), detail::z_from_q(b));
    return detail::q_from_z(g).monic();
}

} // namespace hyperflex
