#ifndef HYPERFLEX_SERIES_HPP
#define HYPERFLEX_SERIES_HPP

#include <limits>
#include <optional>
#include <vector>

#include "hyperflex/poly.hpp"

namespace hyperflex {

/// Element a + b*sqrt(rho) of a real quadratic extension of Q. When rho is a
/// perfect square the irrational part is folded away at construction, so a
/// nonzero b certifies a genuinely irrational context and (a, b) != (0, 0)
/// certifies a nonzero value. rho may be negative (points over C paired by
/// conjugation); elements with b = 0 are context-agnostic.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), rho_(0) {}
    QuadExt(int v) : a_(v), b_(0), rho_(0) {}
    QuadExt(Rat v) : a_(std::move(v)), b_(0), rho_(0) {}
    QuadExt(Rat a, Rat b, Rat rho) : a_(std::move(a)), b_(std::move(b)), rho_(std::move(rho)) {
        fold();
    }

    static QuadExt sqrt_of(const Rat& rho) { return QuadExt(Rat(0), Rat(1), rho); }

    const Rat& rational_part() const { return a_; }
    const Rat& irrational_part() const { return b_; }
    const Rat& rho() const { return rho_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExt operator-() const { return raw(-a_, -b_, rho_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        Rat r = merge_rho(x, y);
        return raw(x.a_ + y.a_, x.b_ + y.b_, r);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Rat r = merge_rho(x, y);
        return raw(x.a_ * y.a_ + x.b_ * y.b_ * r, x.a_ * y.b_ + x.b_ * y.a_, r);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw computation_error("QuadExt: division by zero");
        if (y.b_.is_zero()) return raw(x.a_ / y.a_, x.b_ / y.a_, merge_rho(x, y));
        Rat r = merge_rho(x, y);
        Rat n = y.a_ * y.a_ - y.b_ * y.b_ * r; // nonzero: rho is not a square
        return x * raw(y.a_ / n, -y.b_ / n, r);
    }
    QuadExt& operator+=(const QuadExt& o) { *this = *this + o; return *this; }
    QuadExt& operator-=(const QuadExt& o) { *this = *this - o; return *this; }
    QuadExt& operator*=(const QuadExt& o) { *this = *this * o; return *this; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

private:
    static QuadExt raw(Rat a, Rat b, Rat rho) {
        QuadExt q;
        q.a_ = std::move(a);
        q.b_ = std::move(b);
        q.rho_ = std::move(rho);
        if (q.b_.is_zero()) q.rho_ = Rat(0);
        return q;
    }
    static Rat merge_rho(const QuadExt& x, const QuadExt& y) {
        if (x.b_.is_zero()) return y.rho_;
        if (y.b_.is_zero()) return x.rho_;
        if (x.rho_ != y.rho_) throw internal_error("QuadExt: mixed extension contexts");
        return x.rho_;
    }
    void fold() {
        if (b_.is_zero()) {
            rho_ = Rat(0);
            return;
        }
        if (auto s = rho_.sqrt_exact()) {
            a_ += b_ * *s;
            b_ = Rat(0);
            rho_ = Rat(0);
        }
    }

    Rat a_, b_, rho_;
};

/// Truncated Laurent series: coefficients for exponents [lead, known_end),
/// exactly zero below lead and unknown from known_end on. Results of
/// arithmetic carry the largest window justified by the operands.
template <class S>
class Series {
public:
    static constexpr long kExact = std::numeric_limits<long>::max() / 4;

    Series() : lead_(0), end_(kExact) {} // exact zero
    Series(long lead, std::vector<S> coeffs, long known_end)
        : lead_(lead), c_(std::move(coeffs)), end_(known_end) {
        trim();
    }

    static Series exact_zero() { return Series(); }
    static Series constant(const S& v) {
        return Series(0, {v}, kExact);
    }
    /// tau^e with an exact window.
    static Series monomial(const S& v, long e) { return Series(e, {v}, kExact); }
    static Series from_poly(const Poly<S>& p, long exp_scale = 1, long shift = 0) {
        // p(tau^exp_scale) * tau^shift, exactly known
        if (p.is_zero()) return exact_zero();
        std::vector<S> c(static_cast<std::size_t>(p.degree() * exp_scale) + 1, S(0));
        for (long i = 0; i <= p.degree(); ++i)
            c[static_cast<std::size_t>(i * exp_scale)] = p.coeff(static_cast<std::size_t>(i));
        return Series(shift, std::move(c), kExact);
    }

    long lead_exp() const { return lead_; }
    long known_end() const { return end_; }
    bool window_empty() const { return c_.empty(); }

    /// First nonzero exponent, or nullopt when zero across the whole window
    /// (truncation-insufficient unless the series is exactly zero).
    std::optional<long> valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return lead_ + static_cast<long>(i);
        return std::nullopt;
    }
    bool exactly_zero() const { return c_.empty() && end_ >= kExact; }

    S coeff(long e) const {
        if (e < lead_ || e >= lead_ + static_cast<long>(c_.size())) return S(0);
        return c_[static_cast<std::size_t>(e - lead_)];
    }

    Series truncated(long new_end) const {
        if (new_end >= end_) return *this;
        std::vector<S> c;
        for (long e = lead_; e < new_end && e < lead_ + static_cast<long>(c_.size()); ++e)
            c.push_back(c_[static_cast<std::size_t>(e - lead_)]);
        return Series(lead_, std::move(c), new_end);
    }

    Series operator-() const {
        Series r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Series operator+(const Series& x, const Series& y) {
        long end = std::min(x.end_, y.end_);
        long lead = std::min(x.lead_eff(), y.lead_eff());
        if (lead >= end) return Series(lead, {}, end);
        std::vector<S> c(static_cast<std::size_t>(end - lead), S(0));
        x.add_into(c, lead, end, false);
        y.add_into(c, lead, end, false);
        return Series(lead, std::move(c), end);
    }
    friend Series operator-(const Series& x, const Series& y) {
        long end = std::min(x.end_, y.end_);
        long lead = std::min(x.lead_eff(), y.lead_eff());
        if (lead >= end) return Series(lead, {}, end);
        std::vector<S> c(static_cast<std::size_t>(end - lead), S(0));
        x.add_into(c, lead, end, false);
        y.add_into(c, lead, end, true);
        return Series(lead, std::move(c), end);
    }

    friend Series operator*(const Series& x, const Series& y) {
        long end = std::min(clamp_add(x.lead_, y.end_), clamp_add(y.lead_, x.end_));
        long lead = x.lead_ + y.lead_;
        if (x.c_.empty() || y.c_.empty()) return Series(lead, {}, end);
        if (lead >= end) return Series(lead, {}, end);
        std::vector<S> c(static_cast<std::size_t>(end - lead), S(0));
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i].is_zero()) continue;
            long ei = x.lead_ + static_cast<long>(i);
            for (std::size_t j = 0; j < y.c_.size(); ++j) {
                long e = ei + y.lead_ + static_cast<long>(j);
                if (e >= end) break;
                c[static_cast<std::size_t>(e - lead)] += x.c_[i] * y.c_[j];
            }
        }
        return Series(lead, std::move(c), end);
    }

    friend Series operator*(const Series& x, const S& s) {
        Series r = x;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    Series shifted(long k) const {
        Series r = *this;
        r.lead_ += k;
        if (r.end_ < kExact) r.end_ += k;
        return r;
    }

    /// Multiplicative inverse; requires a detectable nonzero valuation.
    Series inverse() const {
        auto v = valuation();
        if (!v) throw computation_error("Series: inverse of (apparently) zero series");
        long rel = end_ >= kExact ? kDefaultWindow : end_ - *v;
        std::vector<S> u(static_cast<std::size_t>(rel), S(0));
        const S l = coeff(*v);
        u[0] = S(1) / l;
        for (long n = 1; n < rel; ++n) {
            S acc(0);
            for (long i = 1; i <= n; ++i)
                acc += coeff(*v + i) * u[static_cast<std::size_t>(n - i)];
            u[static_cast<std::size_t>(n)] = -acc / l;
        }
        return Series(-*v, std::move(u), -*v + rel);
    }

    friend Series operator/(const Series& x, const Series& y) { return x * y.inverse(); }

    /// d/dtau.
    Series derivative() const {
        std::vector<S> c;
        c.reserve(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            long e = lead_ + static_cast<long>(i);
            c.push_back(c_[i] * S(static_cast<int>(e)));
        }
        Series r(lead_ - 1, std::move(c), end_ >= kExact ? kExact : end_ - 1);
        return r;
    }

    /// Square root of a series with constant term 1 (lead exponent 0).
    Series sqrt_unit() const {
        if (coeff(0) != S(1) || lead_eff() < 0)
            throw internal_error("Series::sqrt_unit: needs constant term 1");
        long rel = end_ >= kExact ? kDefaultWindow : end_;
        std::vector<S> s(static_cast<std::size_t>(rel), S(0));
        s[0] = S(1);
        for (long n = 1; n < rel; ++n) {
            S acc = coeff(n);
            for (long i = 1; i < n; ++i)
                acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(n - i)];
            S two = S(2);
            s[static_cast<std::size_t>(n)] = acc / two;
        }
        return Series(0, std::move(s), rel);
    }

    /// Composition this(g), g with strictly positive valuation.
    Series compose(const Series& g) const {
        auto gv = g.valuation();
        if (!gv || *gv < 1) throw internal_error("Series::compose: inner valuation must be >= 1");
        Series acc = Series(0, {}, g.end_); // zero with g's window
        // non-negative exponents by Horner from the top
        long top = lead_ + static_cast<long>(c_.size()) - 1;
        for (long e = top; e >= 0; --e)
            acc = acc * g + Series::monomial(coeff(e), 0).with_end(end_);
        // negative exponents through powers of the Laurent inverse
        if (lead_ < 0) {
            Series ginv = g.inverse();
            Series p = Series::monomial(S(1), 0);
            for (long e = -1; e >= lead_; --e) {
                p = p * ginv;
                acc = acc + p * coeff(e);
            }
        }
        return acc;
    }

    static long clamp_add(long a, long b) {
        if (a >= kExact || b >= kExact) return kExact;
        long s = a + b;
        return s >= kExact ? kExact : s;
    }

private:
    static constexpr long kDefaultWindow = 64;

    Series with_end(long e) const {
        Series r = *this;
        r.end_ = std::min(r.end_, e);
        return r;
    }

    long lead_eff() const { return c_.empty() ? end_ : lead_; }

    void add_into(std::vector<S>& c, long lead, long end, bool negate) const {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            long e = lead_ + static_cast<long>(i);
            if (e >= end) break;
            if (e < lead) continue;
            if (negate)
                c[static_cast<std::size_t>(e - lead)] -= c_[i];
            else
                c[static_cast<std::size_t>(e - lead)] += c_[i];
        }
    }

    void trim() {
        if (end_ < kExact) {
            long max_len = end_ - lead_;
            if (max_len < 0) max_len = 0;
            if (static_cast<long>(c_.size()) > max_len) c_.resize(static_cast<std::size_t>(max_len));
        }
    }

    long lead_;
    std::vector<S> c_;
    long end_;
};

using QSeries = Series<Rat>;
using ESeries = Series<QuadExt>;

} // namespace hyperflex

#endif
