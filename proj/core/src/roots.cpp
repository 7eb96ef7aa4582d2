#include "hyperflex/roots.hpp"

#include <algorithm>

#include "zpoly_detail.hpp"

namespace hyperflex::detail {

namespace {

void taylor_shift1(ZPoly& a) {
    if (a.size() < 2) return;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        for (std::size_t j = a.size() - 1; j-- > i;)
            a[j] += a[j + 1];
}

long coeff_variations(const ZPoly& a) {
    long var = 0;
    int prev = 0;
    for (const auto& c : a) {
        int s = sgn(c);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// sign variation bound for roots of q in (0,1): coefficients of (1+x)^n q(1/(1+x))
long var01(const ZPoly& q) {
    ZPoly t(q.rbegin(), q.rend());
    taylor_shift1(t);
    return coeff_variations(t);
}

// q(x) -> 2^n q(x/2)
ZPoly scale_half(const ZPoly& q) {
    ZPoly r = q;
    std::size_t n = q.size() - 1;
    for (std::size_t i = 0; i < q.size(); ++i)
        r[i] <<= (n - i);
    return z_primitive(r);
}

// exact division by (x - 1), root at 1 required
ZPoly divide_by_x_minus_1(const ZPoly& q) {
    ZPoly b(q.size() - 1);
    mpz_class carry = 0;
    for (std::size_t i = q.size(); i-- > 1;) {
        carry += q[i];
        b[i - 1] = carry;
    }
    return b;
}

struct Ctx {
    IsolationResult* out;
    Rat scale;   // maps (0,1) coordinates to p coordinates: x -> scale * x
    bool negate; // true on the negative half-line
};

void emit_interval(const Ctx& ctx, const Rat& lo01, const Rat& hi01) {
    Rat a = ctx.scale * lo01, b = ctx.scale * hi01;
    if (ctx.negate) {
        ctx.out->intervals.emplace_back(-b, -a);
    } else {
        ctx.out->intervals.emplace_back(a, b);
    }
}

void recurse01(const Ctx& ctx, ZPoly q, const Rat& lo01, const Rat& hi01) {
    long v = var01(q);
    if (v == 0) return;
    if (v == 1) {
        emit_interval(ctx, lo01, hi01);
        return;
    }
    Rat mid01 = (lo01 + hi01) / Rat(2);
    ZPoly ql = scale_half(q);
    ZPoly qr = ql;
    taylor_shift1(qr);
    if (!qr.empty() && qr[0] == 0) {
        // the midpoint is an exact rational root
        Rat m = ctx.scale * mid01;
        ctx.out->exact.push_back(ctx.negate ? -m : m);
        qr.erase(qr.begin());
        z_normalize(qr);
        ql = divide_by_x_minus_1(ql);
        z_normalize(ql);
    }
    recurse01(ctx, std::move(ql), lo01, mid01);
    recurse01(ctx, std::move(qr), mid01, hi01);
}

} // namespace

IsolationResult descartes_isolate(const ZPoly& p_in) {
    IsolationResult out;
    ZPoly p = p_in;
    z_normalize(p);
    if (z_degree(p) <= 0) return out;
    if (p[0] == 0) {
        // square-free input: x divides exactly once
        out.exact.push_back(Rat(0));
        p.erase(p.begin());
        z_normalize(p);
        if (z_degree(p) <= 0) return out;
    }
    Rat bound = cauchy_root_bound(q_from_z(p));
    for (int side = 0; side < 2; ++side) {
        Ctx ctx { &out, bound, side == 1 };
        // q(x) = p(+-bound * x) restricted to (0,1)
        ZPoly q(p.size());
        Rat pw(1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            Rat c = Rat(p[i]) * pw;
            q[i] = c.num(); // bound is a power of two >= 1, so c may be non-integer only for bound < 1 (impossible)
            if (!c.is_integer()) throw internal_error("descartes_isolate: non-integer scaling");
            pw *= (side == 1 ? -bound : bound);
        }
        z_normalize(q);
        q = z_primitive(q);
        recurse01(ctx, std::move(q), Rat(0), Rat(1));
    }
    return out;
}

} // namespace hyperflex::detail

namespace hyperflex {

using detail::ZPoly;

long sturm_count(const QPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw input_error("sturm_count: zero polynomial");
    if (!(lo < hi)) throw input_error("sturm_count: empty interval");
    ZPoly z = detail::z_from_q(p);
    if (detail::z_sign_at(z, lo) == 0 || detail::z_sign_at(z, hi) == 0)
        throw input_error("sturm_count: endpoint is a root");
    auto chain = detail::sturm_chain(z);
    return detail::sturm_variations(chain, lo) - detail::sturm_variations(chain, hi);
}

long sturm_count_all(const QPoly& p) {
    if (p.is_zero()) throw input_error("sturm_count_all: zero polynomial");
    if (p.degree() == 0) return 0;
    auto chain = detail::sturm_chain(detail::z_from_q(p));
    return detail::sturm_variations_at_inf(chain, -1) - detail::sturm_variations_at_inf(chain, +1);
}

namespace {

// isolating interval around an exact rational root of fac
IsolatedRoot interval_for_exact(const QPoly& fac, const Rat& m, int mult) {
    ZPoly z = detail::z_from_q(fac);
    Rat delta(1);
    while (true) {
        Rat lo = m - delta, hi = m + delta;
        if (detail::z_sign_at(z, lo) != 0 && detail::z_sign_at(z, hi) != 0 &&
            sturm_count(fac, lo, hi) == 1)
            return IsolatedRoot{fac, lo, hi, mult, m};
        delta /= Rat(2);
    }
}

bool intervals_overlap(const IsolatedRoot& a, const IsolatedRoot& b) {
    return !(a.hi <= b.lo || b.hi <= a.lo);
}

// Bisection intervals can end exactly on another (rational) root of the same
// factor; nudge such endpoints inward until both are sign-definite and the
// interval still isolates its single interior root.
void clear_root_endpoints(IsolatedRoot& r, const ZPoly& z) {
    if (detail::z_sign_at(z, r.lo) != 0 && detail::z_sign_at(z, r.hi) != 0) return;
    Rat w = r.width();
    Rat step = w / Rat(8);
    while (true) {
        Rat lo = detail::z_sign_at(z, r.lo) == 0 ? r.lo + step : r.lo;
        Rat hi = detail::z_sign_at(z, r.hi) == 0 ? r.hi - step : r.hi;
        if (lo < hi && detail::z_sign_at(z, lo) != 0 && detail::z_sign_at(z, hi) != 0 &&
            sturm_count(r.square_free_factor, lo, hi) == 1) {
            r.lo = lo;
            r.hi = hi;
            return;
        }
        step /= Rat(2);
    }
}

} // namespace

std::vector<IsolatedRoot> isolate_real_roots(const QPoly& p) {
    if (p.is_zero()) throw input_error("isolate_real_roots: zero polynomial");
    std::vector<IsolatedRoot> roots;
    if (p.degree() <= 0) return roots;
    for (const auto& [fac, mult] : squarefree_decomposition(p)) {
        ZPoly z = detail::z_from_q(fac);
        auto res = detail::descartes_isolate(z);
        for (const auto& [lo, hi] : res.intervals) {
            IsolatedRoot r{fac, lo, hi, mult, std::nullopt};
            clear_root_endpoints(r, z);
            roots.push_back(std::move(r));
        }
        for (const auto& m : res.exact)
            roots.push_back(interval_for_exact(fac, m, mult));
    }
    std::sort(roots.begin(), roots.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
    // roots come from coprime factors: separate any overlapping intervals
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(roots.begin(), roots.end(),
                  [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
            while (intervals_overlap(roots[i], roots[i + 1])) {
                refine_once(roots[i]);
                refine_once(roots[i + 1]);
                changed = true;
            }
        }
    }
    return roots;
}

void refine_once(IsolatedRoot& r) {
    ZPoly z = detail::z_from_q(r.square_free_factor);
    Rat m = r.midpoint();
    int sm = detail::z_sign_at(z, m);
    if (sm == 0) {
        // the root is exactly the midpoint; shrink symmetrically around it
        r.exact_value = m;
        Rat w = r.width() / Rat(8);
        while (true) {
            int sl = detail::z_sign_at(z, m - w);
            int sh = detail::z_sign_at(z, m + w);
            if (sl != 0 && sh != 0 && sl != sh) {
                r.lo = m - w;
                r.hi = m + w;
                return;
            }
            w /= Rat(2);
        }
    }
    int slo = detail::z_sign_at(z, r.lo);
    if (slo == 0) throw internal_error("refine_once: endpoint is a root");
    if (sm != slo)
        r.hi = m;
    else
        r.lo = m;
}

void refine_below_width(IsolatedRoot& r, const Rat& width) {
    while (r.width() >= width) refine_once(r);
}

std::pair<Rat, Rat> eval_interval(const QPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) return {Rat(0), Rat(0)};
    Rat a = p.lead(), b = p.lead();
    for (long i = p.degree(); i-- > 0;) {
        Rat c1 = a * lo, c2 = a * hi, c3 = b * lo, c4 = b * hi;
        Rat mn = std::min(std::min(c1, c2), std::min(c3, c4));
        Rat mx = std::max(std::max(c1, c2), std::max(c3, c4));
        const Rat& ci = p.coeff(static_cast<std::size_t>(i));
        a = mn + ci;
        b = mx + ci;
    }
    return {a, b};
}

int sign_at_root(const QPoly& p, const IsolatedRoot& r) {
    if (p.is_zero()) return 0;
    if (p.is_constant()) return p.coeff(0).sign();
    QPoly g = gcd(p, r.square_free_factor);
    if (g.degree() > 0 && sturm_count(g, r.lo, r.hi) == 1) return 0;
    IsolatedRoot rr = r;
    while (true) {
        auto [a, b] = eval_interval(p, rr.lo, rr.hi);
        if (a.sign() > 0) return 1;
        if (b.sign() < 0) return -1;
        refine_once(rr);
    }
}

int AlgNum::sign_of(const QPoly& p) const {
    if (p.is_zero()) return 0;
    if (is_rational()) return p.eval(rational()).sign();
    return sign_at_root(p, root());
}

int compare(AlgNum& a, AlgNum& b) {
    if (a.is_rational() && b.is_rational()) {
        const Rat& x = a.rational();
        const Rat& y = b.rational();
        return x < y ? -1 : (x == y ? 0 : 1);
    }
    if (a.is_rational() != b.is_rational()) {
        // orient so the algebraic one is on the right
        if (!a.is_rational()) return -compare(b, a);
        const Rat& x = a.rational();
        IsolatedRoot& r = b.root();
        if (x > r.lo && x < r.hi && r.square_free_factor.eval(x).is_zero()) return 0;
        while (true) {
            if (x <= r.lo) return -1;
            if (x >= r.hi) return 1;
            refine_once(r);
        }
    }
    IsolatedRoot& r1 = a.root();
    IsolatedRoot& r2 = b.root();
    QPoly g = gcd(r1.square_free_factor, r2.square_free_factor);
    while (true) {
        if (r1.hi <= r2.lo) return -1;
        if (r2.hi <= r1.lo) return 1;
        if (g.degree() > 0) {
            Rat lo = std::max(r1.lo, r2.lo), hi = std::min(r1.hi, r2.hi);
            bool endpoints_clear = lo < hi &&
                !r1.square_free_factor.eval(lo).is_zero() &&
                !r1.square_free_factor.eval(hi).is_zero() &&
                !r2.square_free_factor.eval(lo).is_zero() &&
                !r2.square_free_factor.eval(hi).is_zero();
            if (endpoints_clear && sturm_count(r1.square_free_factor, lo, hi) == 1 &&
                sturm_count(r2.square_free_factor, lo, hi) == 1 &&
                sturm_count(g, lo, hi) == 1)
                return 0;
        }
        refine_once(r1);
        refine_once(r2);
    }
}

} // namespace hyperflex
