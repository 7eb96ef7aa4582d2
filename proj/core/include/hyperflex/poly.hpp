#ifndef HYPERFLEX_POLY_HPP
#define HYPERFLEX_POLY_HPP

#include <vector>
#include <string>
#include <sstream>
#include <utility>
#include <cassert>

#include "hyperflex/rational.hpp"

namespace hyperflex {

/// Dense univariate polynomial over an exact field K, lowest degree first.
/// The zero polynomial has an empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<K> cs) : c_(cs) { normalize(); }
    explicit Poly(std::vector<K> cs) : c_(std::move(cs)) { normalize(); }
    explicit Poly(const K& constant) {
        c_.push_back(constant);
        normalize();
    }
    // constant polynomial; keeps nested instantiations like Poly<Poly<K>>
    // constructible from integer literals
    explicit Poly(int v) : Poly(K(v)) {}

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(K(1)); }
    static Poly x() { return monomial(K(1), 1); }
    static Poly monomial(const K& coeff, std::size_t deg) {
        Poly p;
        if (!coeff.is_zero()) {
            p.c_.assign(deg + 1, K(0));
            p.c_[deg] = coeff;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == K(1); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const K& lead() const {
        assert(!c_.empty());
        return c_.back();
    }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const std::vector<K>& coeffs() const { return c_; }

    K eval(const K& v) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& a : r.c_) a = -a;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& a, const K& s) {
        Poly r(a);
        for (auto& v : r.c_) v *= s;
        r.normalize();
        return r;
    }
    friend Poly operator*(const K& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly& operator*=(const K& s) { *this = *this * s; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly shifted_up(std::size_t k) const {
        if (is_zero()) return Poly();
        std::vector<K> c(c_.size() + k, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return Poly(std::move(c));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> c(c_.size() - 1, K(0));
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K(static_cast<int>(i));
        return Poly(std::move(c));
    }

    /// Coefficient reversal to the stated degree (default: own degree).
    Poly reversed(long to_degree = -1) const {
        if (is_zero()) return Poly();
        long d = to_degree < 0 ? degree() : to_degree;
        assert(d >= degree());
        std::vector<K> c(static_cast<std::size_t>(d) + 1, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[static_cast<std::size_t>(d) - i] = c_[i];
        return Poly(std::move(c));
    }

    /// Substitution x -> q(x).
    Poly compose(const Poly& q) const {
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * q + Poly(*it);
        return acc;
    }

    Poly pow(unsigned e) const {
        Poly r = one();
        Poly b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            b = b * b;
            e >>= 1u;
        }
        return r;
    }

    struct DivMod {
        Poly quot, rem;
    };
    DivMod divmod(const Poly& d) const {
        if (d.is_zero()) throw computation_error("Poly: division by zero polynomial");
        Poly r = *this;
        Poly q;
        if (r.degree() >= d.degree()) q.c_.assign(r.c_.size() - d.c_.size() + 1, K(0));
        const K dl = d.lead();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            K f = r.lead() / dl;
            q.c_[shift] = f;
            // r -= f * x^shift * d, with the leading term cancelled exactly
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                r.c_[i + shift] -= f * d.c_[i];
            r.c_.pop_back();
            r.normalize();
        }
        q.normalize();
        return {q, r};
    }

    Poly operator/(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw internal_error("Poly: inexact division");
        return q;
    }
    Poly operator%(const Poly& d) const { return divmod(d).rem; }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * lead().inv();
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            os << "(" << c_[i] << ")";
            if (i == 1) os << "*" << var;
            if (i > 1) os << "*" << var << "^" << i;
            first = false;
        }
        return os.str();
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

/// gcd over Q routed through an integer PRS (with a modular shortcut); the
/// generic path is monic Euclid.
Poly<Rat> rat_poly_gcd(const Poly<Rat>& a, const Poly<Rat>& b);

template <class K>
Poly<K> gcd(const Poly<K>& a, const Poly<K>& b) {
    if constexpr (std::is_same_v<K, Rat>) {
        return rat_poly_gcd(a, b);
    } else {
        Poly<K> u = a, v = b;
        while (!v.is_zero()) {
            Poly<K> r = u % v;
            u = std::move(v);
            v = std::move(r);
        }
        return u.is_zero() ? u : u.monic();
    }
}

/// Square-free decomposition (Yun): returns pairs (factor, multiplicity)
/// with multiplicities strictly increasing; the product of factor^mult times
/// the leading coefficient reproduces the input.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decomposition(const Poly<K>& p) {
    std::vector<std::pair<Poly<K>, int>> out;
    if (p.degree() <= 0) return out;
    Poly<K> f = p.monic();
    Poly<K> d = f.derivative();
    Poly<K> a = gcd(f, d);
    Poly<K> b = f / a;
    Poly<K> c = d / a;
    int mult = 1;
    while (b.degree() > 0) {
        Poly<K> z = c - b.derivative();
        Poly<K> fac = gcd(b, z);
        if (fac.degree() > 0) out.emplace_back(fac.monic(), mult);
        b = b / fac;
        c = z / fac;
        ++mult;
    }
    return out;
}

template <class K>
bool is_squarefree(const Poly<K>& p) {
    return p.degree() <= 0 || gcd(p, p.derivative()).degree() == 0;
}

using QPoly = Poly<Rat>;

/// Clears denominators and content: returns the primitive integer multiple
/// (positive leading coefficient) plus the rational factor taking it back.
std::pair<std::vector<mpz_class>, Rat> to_primitive_integer(const QPoly& p);

QPoly from_integer(const std::vector<mpz_class>& z);

/// Power-of-two upper bound for the absolute value of every complex root.
Rat cauchy_root_bound(const QPoly& p);

} // namespace hyperflex

#endif
