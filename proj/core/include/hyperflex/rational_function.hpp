#ifndef HYPERFLEX_RATIONAL_FUNCTION_HPP
#define HYPERFLEX_RATIONAL_FUNCTION_HPP

#include "hyperflex/poly.hpp"

namespace hyperflex {

/// Fraction of polynomials over K, kept with gcd(num, den) = 1 and monic
/// denominator. Itself a field, so it can serve as the coefficient type of
/// another Poly (rational functions in t under polynomials in x).
template <class K>
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly<K>::one()) {}
    RatFunc(int n) : num_(Poly<K>(K(n))), den_(Poly<K>::one()) {}
    explicit RatFunc(const K& scalar) : num_(Poly<K>(scalar)), den_(Poly<K>::one()) {}
    RatFunc(Poly<K> num) : num_(std::move(num)), den_(Poly<K>::one()) {}
    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw computation_error("RatFunc: zero denominator");
        reduce();
    }

    static RatFunc x() { return RatFunc(Poly<K>::x()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const { return RatFunc(-num_, den_, no_reduce{}); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        // cross-reduce first to keep intermediates small
        Poly<K> g1 = gcd(a.num_, b.den_);
        Poly<K> g2 = gcd(b.num_, a.den_);
        Poly<K> n = (a.num_ / g1) * (b.num_ / g2);
        Poly<K> d = (a.den_ / g2) * (b.den_ / g1);
        return RatFunc(std::move(n), std::move(d));
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw computation_error("RatFunc: division by zero");
        return a * RatFunc(b.den_, b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    RatFunc inv() const {
        if (is_zero()) throw computation_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    RatFunc pow(unsigned e) const {
        RatFunc r(1);
        RatFunc b = *this;
        while (e) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1u;
        }
        return r;
    }

    K eval(const K& v) const {
        K d = den_.eval(v);
        if (d.is_zero()) throw computation_error("RatFunc: evaluation at a pole");
        return num_.eval(v) / d;
    }

    /// Order of vanishing at x = v (negative at a pole); the input must not
    /// be zero.
    long order_at(const K& v) const;

    std::string str(const std::string& var = "x") const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
    }

private:
    struct no_reduce {};
    RatFunc(Poly<K> num, Poly<K> den, no_reduce) : num_(std::move(num)), den_(std::move(den)) {}
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly<K>::one();
            return;
        }
        Poly<K> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        K dl = den_.lead();
        if (!(dl == K(1))) {
            K inv_dl = K(1) / dl;
            num_ = num_ * inv_dl;
            den_ = den_ * inv_dl;
        }
    }

    Poly<K> num_, den_;
};

template <class K>
long RatFunc<K>::order_at(const K& v) const {
    if (is_zero()) throw computation_error("RatFunc::order_at: zero function");
    auto count = [&](const Poly<K>& p) {
        long m = 0;
        Poly<K> lin{-v, K(1)};
        Poly<K> cur = p;
        while (true) {
            auto [q, r] = cur.divmod(lin);
            if (!r.is_zero()) break;
            ++m;
            cur = q;
        }
        return m;
    };
    return count(num_) - count(den_);
}

using QRatFunc = RatFunc<Rat>;

/// Scalars for one-parameter families: rational functions in t.
using TScalar = RatFunc<Rat>;
using TPoly = Poly<TScalar>;

} // namespace hyperflex

#endif
