#ifndef HYPERFLEX_LOCAL_EXPANSION_HPP
#define HYPERFLEX_LOCAL_EXPANSION_HPP

#include "hyperflex/curve.hpp"
#include "hyperflex/series.hpp"

namespace hyperflex {

struct truncation_insufficient : computation_error {
    using computation_error::computation_error;
};

/// Where to expand: local uniformizers are (x - x0) at unramified finite
/// points, y at ramified finite points, and s with x = 1/s^2 at infinity.
struct ExpansionPoint {
    enum class Kind { RamifiedFinite, Unramified, Infinity };
    Kind kind = Kind::Infinity;
    Rat x0;
    int branch = +1; // sheet tag at unramified points

    static ExpansionPoint ramified(Rat x) {
        return {Kind::RamifiedFinite, std::move(x), 0};
    }
    static ExpansionPoint unramified(Rat x, int branch) {
        return {Kind::Unramified, std::move(x), branch};
    }
    static ExpansionPoint infinity() { return {Kind::Infinity, Rat(0), 0}; }
};

/// Expands function-field elements at a fixed point to a fixed order.
/// Coefficients live in Q(sqrt(rho)) where rho is f(x0) (unramified) or the
/// leading coefficient of f (infinity); QuadExt folds the root away whenever
/// it is rational.
class LocalExpander {
public:
    LocalExpander(const QCurve& curve, ExpansionPoint point, long order);

    ESeries expand(const QFFE& e) const;

    const ExpansionPoint& point() const { return point_; }
    long order() const { return order_; }

private:
    ESeries eval_ratfunc(const QRatFunc& r) const;

    const QCurve* curve_;
    ExpansionPoint point_;
    long order_;
    ESeries xser_, yser_;
};

/// Series expansion with the stated truncation; throws
/// truncation_insufficient when e is nonzero but vanishes across the window.
ESeries local_expand(const QCurve& curve, const QFFE& e, const ExpansionPoint& P, long order);

/// ord_P(e), escalating the truncation order internally as needed.
long local_valuation(const QCurve& curve, const QFFE& e, const ExpansionPoint& P,
                     long initial_order = 64, long cap = 1 << 14);

/// Strictly increasing vanishing orders of the span of `basis` at P, computed
/// by triangulating series coefficients. At infinity pass normalize_d (the
/// degree 2k of the series) to convert pole orders to vanishing orders.
/// Throws computation_error when the elements are linearly dependent.
std::vector<long> vanishing_sequence(const QCurve& curve, const std::vector<QFFE>& basis,
                                     const ExpansionPoint& P, long normalize_d = 0,
                                     long initial_order = 64);

/// Inflectionary weight sum(o_i - i) of a vanishing sequence.
long weight_of_sequence(const std::vector<long>& seq);

} // namespace hyperflex

#endif
