#ifndef HYPERFLEX_RATIONAL_HPP
#define HYPERFLEX_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <optional>
#include <vector>

#include "hyperflex/util.hpp"

namespace hyperflex {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. The ground field of every exact computation here.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(static_cast<signed long>(n)) {}
    Rat(long n, long d) : q_(static_cast<signed long>(n), static_cast<signed long>(d)) {
        if (d == 0) throw input_error("Rat: zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : q_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) : q_(n, d) {
        if (d == 0) throw input_error("Rat: zero denominator");
        q_.canonicalize();
    }
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q".
    static Rat parse(std::string_view s);

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat operator-() const { return Rat(mpq_class(-q_), already_canonical{}); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw computation_error("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat inv() const {
        if (is_zero()) throw computation_error("Rat: inverse of zero");
        return Rat(mpq_class(1) / q_);
    }

    /// Integral power; e may be negative for nonzero values.
    Rat pow(long e) const;

    /// The exact rational square root, when it exists.
    std::optional<Rat> sqrt_exact() const;

    /// Canonical string: "p" when integral, else "p/q".
    std::string str() const;

    double to_double() const { return q_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    struct already_canonical {};
    Rat(mpq_class q, already_canonical) : q_(std::move(q)) {}
    mpq_class q_;
};

/// Smallest power of two >= r (r > 0), returned as exact rational.
Rat pow2_at_least(const Rat& r);

} // namespace hyperflex

#endif
