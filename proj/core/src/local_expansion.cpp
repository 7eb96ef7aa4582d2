#include "hyperflex/local_expansion.hpp"

#include <algorithm>

namespace hyperflex {

namespace {

// expanders truncate their base series first, so the window is always finite
ESeries to_quad_finite(const Series<Rat>& s) {
    if (s.known_end() >= Series<Rat>::kExact)
        throw internal_error("to_quad_finite: needs a truncated series");
    std::vector<QuadExt> out;
    for (long e = s.lead_exp(); e < s.known_end(); ++e) out.emplace_back(s.coeff(e));
    return ESeries(s.lead_exp(), std::move(out), s.known_end());
}

} // namespace

LocalExpander::LocalExpander(const QCurve& curve, ExpansionPoint point, long order)
    : curve_(&curve), point_(std::move(point)), order_(order) {
    if (order_ < 4) order_ = 4;
    const QPoly& f = curve_->f;
    long margin = 2 * f.degree() + 8;
    long N = order_ + margin;

    switch (point_.kind) {
    case ExpansionPoint::Kind::Unramified: {
        Rat f0 = f.eval(point_.x0);
        if (f0.is_zero())
            throw input_error("LocalExpander: x0 is a branch point, use a ramified expansion");
        if (point_.branch != 1 && point_.branch != -1)
            throw input_error("LocalExpander: unramified point needs branch +-1");
        QPoly shift{point_.x0, Rat(1)};
        QPoly fs = f.compose(shift); // f(x0 + tau)
        Series<Rat> unit = Series<Rat>::from_poly(fs * f0.inv()).truncated(N);
        Series<Rat> u = unit.sqrt_unit();
        ESeries y = to_quad_finite(u) * QuadExt::sqrt_of(f0);
        if (point_.branch < 0) y = -y;
        yser_ = y;
        xser_ = to_quad_finite(Series<Rat>::from_poly(shift).truncated(N));
        break;
    }
    case ExpansionPoint::Kind::RamifiedFinite: {
        if (!f.eval(point_.x0).is_zero())
            throw input_error("LocalExpander: x0 is not a branch point");
        QPoly shift{point_.x0, Rat(1)};
        QPoly fs = f.compose(shift); // fs(d) = f(x0 + d), fs(0) = 0, fs'(0) != 0
        Rat c1 = fs.coeff(1);
        if (c1.is_zero()) throw internal_error("LocalExpander: non-simple branch point");
        Series<Rat> tau2 = Series<Rat>::monomial(Rat(1), 2).truncated(N);
        Series<Rat> delta = Series<Rat>::monomial(c1.inv(), 2).truncated(N);
        auto horner = [&](const QPoly& p, const Series<Rat>& at) {
            Series<Rat> acc = Series<Rat>::constant(Rat(0)).truncated(N);
            for (long i = p.degree(); i >= 0; --i)
                acc = (acc * at + Series<Rat>::constant(p.coeff(static_cast<std::size_t>(i)))).truncated(N);
            return acc;
        };
        QPoly fsp = fs.derivative();
        bool converged = false;
        for (int iter = 0; iter < 64 && !converged; ++iter) {
            Series<Rat> err = horner(fs, delta) - tau2;
            auto v = err.valuation();
            if (!v || *v >= N) {
                converged = true;
                break;
            }
            delta = (delta - err / horner(fsp, delta)).truncated(N);
        }
        if (!converged) throw internal_error("LocalExpander: Newton failed to converge");
        Series<Rat> x = Series<Rat>::constant(point_.x0).truncated(N) + delta;
        xser_ = to_quad_finite(x);
        yser_ = to_quad_finite(Series<Rat>::monomial(Rat(1), 1).truncated(N));
        break;
    }
    case ExpansionPoint::Kind::Infinity: {
        Rat lc = f.lead();
        QPoly rev = f.reversed(); // rev(z) = z^deg f(1/z)
        Series<Rat> unit = Series<Rat>::from_poly(rev * lc.inv(), 2).truncated(N);
        Series<Rat> u = unit.sqrt_unit();
        yser_ = (to_quad_finite(u) * QuadExt::sqrt_of(lc)).shifted(-(2 * curve_->genus + 1));
        xser_ = to_quad_finite(Series<Rat>::monomial(Rat(1), -2).truncated(N + 4 * f.degree() + 8));
        break;
    }
    }
}

ESeries LocalExpander::eval_ratfunc(const QRatFunc& r) const {
    if (r.is_zero()) return ESeries::exact_zero();
    long deg_span = r.num().degree() + r.den().degree() + 2;
    long N = order_ + 4 * deg_span + 16;
    auto horner = [&](const QPoly& p) {
        ESeries acc = ESeries::constant(QuadExt(0)).truncated(N + 2 * deg_span * std::abs(xser_.lead_exp()));
        for (long i = p.degree(); i >= 0; --i)
            acc = acc * xser_ + ESeries::constant(QuadExt(p.coeff(static_cast<std::size_t>(i))));
        return acc;
    };
    ESeries n = horner(r.num());
    if (r.is_polynomial()) return n;
    ESeries d = horner(r.den());
    return n * d.inverse();
}

ESeries LocalExpander::expand(const QFFE& e) const {
    ESeries out = eval_ratfunc(e.a());
    if (!e.b().is_zero()) out = out + eval_ratfunc(e.b()) * yser_;
    return out;
}

ESeries local_expand(const QCurve& curve, const QFFE& e, const ExpansionPoint& P, long order) {
    LocalExpander ex(curve, P, order);
    ESeries s = ex.expand(e);
    if (!s.valuation() && !e.is_zero())
        throw truncation_insufficient("local_expand: zero to requested order");
    return s;
}

long local_valuation(const QCurve& curve, const QFFE& e, const ExpansionPoint& P,
                     long initial_order, long cap) {
    if (e.is_zero()) throw input_error("local_valuation: zero element");
    for (long order = initial_order; order <= cap; order *= 2) {
        LocalExpander ex(curve, P, order);
        ESeries s = ex.expand(e);
        if (auto v = s.valuation()) return *v;
    }
    throw truncation_insufficient("local_valuation: exceeded escalation cap");
}

std::vector<long> vanishing_sequence(const QCurve& curve, const std::vector<QFFE>& basis,
                                     const ExpansionPoint& P, long normalize_d,
                                     long initial_order) {
    if (basis.empty()) return {};
    for (const auto& e : basis)
        if (e.is_zero()) throw computation_error("vanishing_sequence: basis contains zero");

    // A nonzero combination vanishes at most to its pole degree, which this
    // bound dominates; escalating past it proves linear dependence.
    long cap = normalize_d + 2 * curve.f.degree() + 32;
    for (const auto& e : basis)
        cap += 2 * (e.a().num().degree() + e.a().den().degree() +
                    e.b().num().degree() + e.b().den().degree() + 4);
    cap = std::max(cap, 2 * initial_order);
    for (long order = initial_order; order <= cap; order *= 2) {
        LocalExpander ex(curve, P, order);
        std::vector<ESeries> v;
        v.reserve(basis.size());
        for (const auto& e : basis) v.push_back(ex.expand(e));

        std::vector<long> orders;
        bool need_escalation = false;
        while (!v.empty()) {
            long best = -1;
            long best_val = 0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                auto val = v[i].valuation();
                if (!val) {
                    need_escalation = true;
                    break;
                }
                if (best < 0 || *val < best_val) {
                    best = static_cast<long>(i);
                    best_val = *val;
                }
            }
            if (need_escalation) break;
            orders.push_back(best_val);
            ESeries pivot = v[static_cast<std::size_t>(best)];
            QuadExt lead = pivot.coeff(best_val);
            v.erase(v.begin() + best);
            for (auto& w : v) {
                QuadExt c = w.coeff(best_val);
                if (!c.is_zero()) w = w - pivot * (c / lead);
            }
        }
        if (!need_escalation) {
            if (normalize_d != 0) {
                for (auto& o : orders) o = normalize_d + o;
                std::sort(orders.begin(), orders.end());
            }
            return orders;
        }
    }
    throw computation_error("vanishing_sequence: basis not linearly independent "
                            "(or escalation cap exceeded)");
}

long weight_of_sequence(const std::vector<long>& seq) {
    long w = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) w += seq[i] - static_cast<long>(i);
    return w;
}

} // namespace hyperflex
