#ifndef HYPERFLEX_ROOTS_HPP
#define HYPERFLEX_ROOTS_HPP

#include <optional>
#include <variant>
#include <vector>

#include "hyperflex/poly.hpp"

namespace hyperflex {

/// A real algebraic number: the unique root of a square-free polynomial in an
/// open interval with rational, non-root endpoints. Roots that are discovered
/// to be rational carry their exact value as well.
struct IsolatedRoot {
    QPoly square_free_factor;
    Rat lo, hi;
    int multiplicity = 1; // multiplicity in the polynomial it was isolated from
    std::optional<Rat> exact_value;

    Rat midpoint() const { return (lo + hi) / Rat(2); }
    Rat width() const { return hi - lo; }
};

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Endpoints must not be roots; p must not be identically zero.
long sturm_count(const QPoly& p, const Rat& lo, const Rat& hi);

/// Number of distinct real roots of p on the whole line.
long sturm_count_all(const QPoly& p);

/// One IsolatedRoot per distinct real root, sorted increasingly, intervals
/// pairwise disjoint, multiplicities from the square-free decomposition.
std::vector<IsolatedRoot> isolate_real_roots(const QPoly& p);

/// Sign of p at the algebraic number r: exact zero detection through gcd,
/// otherwise interval refinement until the sign is determined.
int sign_at_root(const QPoly& p, const IsolatedRoot& r);

/// Halves r's interval, keeping the root inside.
void refine_once(IsolatedRoot& r);

void refine_below_width(IsolatedRoot& r, const Rat& width);

/// Interval Horner evaluation: the image p([lo, hi]) is contained in the
/// returned interval.
std::pair<Rat, Rat> eval_interval(const QPoly& p, const Rat& lo, const Rat& hi);

/// Exact real algebraic number, rational or isolated-root backed.
/// Comparisons refine intervals as a side effect, so they take non-const
/// arguments; values compare by true numeric order.
class AlgNum {
public:
    AlgNum() : v_(Rat(0)) {}
    AlgNum(Rat r) : v_(std::move(r)) {}
    AlgNum(IsolatedRoot r) : v_(std::move(r)) {}

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    const Rat& rational() const { return std::get<Rat>(v_); }
    const IsolatedRoot& root() const { return std::get<IsolatedRoot>(v_); }
    IsolatedRoot& root() { return std::get<IsolatedRoot>(v_); }

    /// Current enclosing interval (degenerate for rationals).
    std::pair<Rat, Rat> interval() const {
        if (is_rational()) return {rational(), rational()};
        return {root().lo, root().hi};
    }

    double approx() const {
        auto [l, h] = interval();
        return ((l + h) / Rat(2)).to_double();
    }

    friend int compare(AlgNum& a, AlgNum& b);

    /// Sign of p evaluated at this number.
    int sign_of(const QPoly& p) const;

    bool is_zero() {
        AlgNum z{Rat(0)};
        return compare(*this, z) == 0;
    }

private:
    std::variant<Rat, IsolatedRoot> v_;
};

} // namespace hyperflex

#endif
