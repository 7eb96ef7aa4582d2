#ifndef HYPERFLEX_CURVE_HPP
#define HYPERFLEX_CURVE_HPP

#include <tuple>
#include <vector>

#include "hyperflex/poly.hpp"
#include "hyperflex/rational_function.hpp"
#include "hyperflex/roots.hpp"

namespace hyperflex {

/// Affine model y^2 = f(x) over a field K, deg f = 2g+1. The odd degree
/// keeps a single (ramified) point above x = infinity.
template <class K>
struct CurveEq {
    Poly<K> f;
    int genus = 0;

    static CurveEq make(Poly<K> f) {
        long d = f.degree();
        if (d < 3 || d % 2 == 0)
            throw input_error("CurveEq: deg f must be odd and >= 3");
        CurveEq c{std::move(f), static_cast<int>((d - 1) / 2)};
        if (gcd(c.f, c.f.derivative()).degree() != 0)
            throw nonseparable_error("CurveEq: f is not separable");
        return c;
    }
};

using QCurve = CurveEq<Rat>;

/// A real point of the curve (or the single point at infinity).
struct RealPoint {
    enum class Kind { Finite, Infinity };
    Kind kind = Kind::Finite;
    AlgNum x;
    int branch = 0; // +1 / -1 for the two sheets, 0 on the ramification locus

    static RealPoint infinity() { return RealPoint{Kind::Infinity, AlgNum(Rat(0)), 0}; }
    static RealPoint finite(AlgNum x, int branch) {
        return RealPoint{Kind::Finite, std::move(x), branch};
    }
    bool is_infinity() const { return kind == Kind::Infinity; }
};

/// A Galois-stable bundle of non-real points, kept exact without leaving Q.
struct NonRealBlock {
    enum class Kind {
        PairOverRealX, // real x, f(x) < 0: the two conjugate points over x
        OverNonRealX   // the points over all non-real roots of `factor`
    };
    Kind kind = Kind::PairOverRealX;
    AlgNum x;                    // PairOverRealX
    QPoly factor;                // OverNonRealX: square-free
    long nonreal_root_count = 0; // OverNonRealX
    int branches = 1;            // points per x-root (1 on ramification, else 2)

    long points() const {
        return kind == Kind::PairOverRealX ? 2 : nonreal_root_count * branches;
    }
};

/// Finite formal sum of curve points; the non-real part is carried in
/// conjugation-stable blocks.
struct Divisor {
    struct RealEntry {
        RealPoint point;
        long mult = 0;
    };
    struct BlockEntry {
        NonRealBlock block;
        long mult = 0;
    };
    std::vector<RealEntry> real_points;
    std::vector<BlockEntry> blocks;

    void add_real(RealPoint p, long mult) {
        if (mult != 0) real_points.push_back({std::move(p), mult});
    }
    void add_block(NonRealBlock b, long mult) {
        if (mult != 0 && b.points() > 0) blocks.push_back({std::move(b), mult});
    }

    long degree() const {
        long d = 0;
        for (const auto& e : real_points) d += e.mult;
        for (const auto& e : blocks) d += e.mult * e.block.points();
        return d;
    }
    long real_degree() const {
        long d = 0;
        for (const auto& e : real_points) d += e.mult;
        return d;
    }
    long distinct_real_points() const { return static_cast<long>(real_points.size()); }
};

/// Real hyperelliptic curve y^2 = f(x) with its real-locus combinatorics:
/// components of X(R) are indexed by the maximal intervals where f >= 0,
/// ordered by increasing x; the unbounded interval carries the point at
/// infinity.
class HyperellipticCurve {
public:
    explicit HyperellipticCurve(QPoly f);

    const QPoly& f() const { return eq_.f; }
    int genus() const { return eq_.genus; }
    const QCurve& eq() const { return eq_; }
    bool vanishes_at_zero() const { return f_at_zero_; }

    const std::vector<IsolatedRoot>& real_branch_roots() const { return froots_; }
    long real_root_count() const { return static_cast<long>(froots_.size()); }

    /// n(X) = (number of real roots of f + 1) / 2.
    int real_component_count() const { return n_; }

    /// (g, n, a): a = 0 iff n = g + 1.
    std::tuple<int, int, int> topological_type() const {
        return {genus(), n_, n_ == genus() + 1 ? 0 : 1};
    }

    Divisor ramification_divisor() const;

    /// Component index (0-based, by increasing x) of a real point with
    /// f(x) >= 0. Throws when f(x) < 0.
    int component_of_x(const AlgNum& x) const;
    int component_of_infinity() const;

private:
    QCurve eq_;
    bool f_at_zero_ = false;
    std::vector<IsolatedRoot> froots_;
    int n_ = 0;
};

/// Element A(x) + B(x) y of the function field K(x)[y]/(y^2 - f). Arithmetic
/// reduces y^2 to f, so the (A, B) form is canonical.
template <class K>
class FFE {
public:
    FFE() : curve_(nullptr) {}
    FFE(const CurveEq<K>* curve, RatFunc<K> a, RatFunc<K> b)
        : curve_(curve), a_(std::move(a)), b_(std::move(b)) {}

    static FFE zero(const CurveEq<K>& c) { return FFE(&c, RatFunc<K>(0), RatFunc<K>(0)); }
    static FFE one(const CurveEq<K>& c) { return FFE(&c, RatFunc<K>(1), RatFunc<K>(0)); }
    static FFE x(const CurveEq<K>& c) { return FFE(&c, RatFunc<K>::x(), RatFunc<K>(0)); }
    static FFE y(const CurveEq<K>& c) { return FFE(&c, RatFunc<K>(0), RatFunc<K>(1)); }
    static FFE xpow(const CurveEq<K>& c, unsigned e) {
        return FFE(&c, RatFunc<K>(Poly<K>::monomial(K(1), e)), RatFunc<K>(0));
    }

    const RatFunc<K>& a() const { return a_; }
    const RatFunc<K>& b() const { return b_; }
    const CurveEq<K>* curve() const { return curve_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Hyperelliptic involution y -> -y.
    FFE conj_h() const { return FFE(curve_, a_, RatFunc<K>(0) - b_); }

    friend FFE operator+(const FFE& u, const FFE& v) {
        u.check(v);
        return FFE(u.curve_, u.a_ + v.a_, u.b_ + v.b_);
    }
    friend FFE operator-(const FFE& u, const FFE& v) {
        u.check(v);
        return FFE(u.curve_, u.a_ - v.a_, u.b_ - v.b_);
    }
    friend FFE operator*(const FFE& u, const FFE& v) {
        u.check(v);
        RatFunc<K> f(u.curve_->f);
        return FFE(u.curve_, u.a_ * v.a_ + u.b_ * v.b_ * f, u.a_ * v.b_ + u.b_ * v.a_);
    }
    friend FFE operator*(const FFE& u, const RatFunc<K>& s) {
        return FFE(u.curve_, u.a_ * s, u.b_ * s);
    }
    FFE operator-() const { return FFE(curve_, RatFunc<K>(0) - a_, RatFunc<K>(0) - b_); }

    FFE inverse() const {
        if (is_zero()) throw computation_error("FFE: inverse of zero");
        RatFunc<K> f(curve_->f);
        RatFunc<K> norm = a_ * a_ - b_ * b_ * f; // nonzero: f is no square
        return FFE(curve_, a_ / norm, (RatFunc<K>(0) - b_) / norm);
    }
    friend FFE operator/(const FFE& u, const FFE& v) { return u * v.inverse(); }

    friend bool operator==(const FFE& u, const FFE& v) { return u.a_ == v.a_ && u.b_ == v.b_; }
    friend bool operator!=(const FFE& u, const FFE& v) { return !(u == v); }

    /// d/dx, using y' = (f'/2f) y.
    FFE derivative() const {
        RatFunc<K> f(curve_->f);
        RatFunc<K> fp(curve_->f.derivative());
        K two(2);
        RatFunc<K> half_log = fp / (RatFunc<K>(Poly<K>(two)) * f);
        return FFE(curve_, a_.derivative(), b_.derivative() + b_ * half_log);
    }

private:
    void check(const FFE& o) const {
        if (curve_ != o.curve_) throw internal_error("FFE: mixed curves");
    }
    const CurveEq<K>* curve_;
    RatFunc<K> a_, b_;
};

using QFFE = FFE<Rat>;

} // namespace hyperflex

#endif
