#include "hyperflex/curve.hpp"

namespace hyperflex {

HyperellipticCurve::HyperellipticCurve(QPoly f) : eq_(QCurve::make(std::move(f))) {
    f_at_zero_ = eq_.f.coeff(0).is_zero();
    froots_ = isolate_real_roots(eq_.f);
    if (froots_.size() % 2 == 0)
        throw internal_error("HyperellipticCurve: even number of real branch points");
    n_ = static_cast<int>((froots_.size() + 1) / 2);
}

Divisor HyperellipticCurve::ramification_divisor() const {
    Divisor d;
    for (const auto& r : froots_)
        d.add_real(RealPoint::finite(AlgNum(r), 0), 1);
    d.add_real(RealPoint::infinity(), 1);
    long nonreal = eq_.f.degree() - static_cast<long>(froots_.size());
    if (nonreal > 0) {
        NonRealBlock b;
        b.kind = NonRealBlock::Kind::OverNonRealX;
        b.factor = eq_.f.monic();
        b.nonreal_root_count = nonreal;
        b.branches = 1;
        d.add_block(std::move(b), 1);
    }
    return d;
}

int HyperellipticCurve::component_of_infinity() const {
    bool lc_positive = eq_.f.lead().sign() > 0;
    return lc_positive ? n_ - 1 : 0;
}

int HyperellipticCurve::component_of_x(const AlgNum& x) const {
    bool lc_positive = eq_.f.lead().sign() > 0;
    AlgNum xv = x;
    long below = 0;      // roots strictly below x
    long equal_idx = -1; // index of a root equal to x, if any
    for (std::size_t i = 0; i < froots_.size(); ++i) {
        AlgNum r{froots_[i]};
        int c = compare(r, xv);
        if (c < 0) ++below;
        if (c == 0) equal_idx = static_cast<long>(i);
    }
    if (equal_idx >= 0) {
        // a branch point belongs to the unique f >= 0 interval it bounds
        return lc_positive ? static_cast<int>(equal_idx / 2)
                           : static_cast<int>((equal_idx + 1) / 2);
    }
    int s = xv.sign_of(eq_.f);
    if (s < 0)
        throw input_error("component_of_x: f(x) < 0, not on the real curve");
    if (lc_positive) {
        if (below % 2 == 0) throw input_error("component_of_x: x in a negative interval");
        return static_cast<int>((below - 1) / 2);
    }
    if (below % 2 == 1) throw input_error("component_of_x: x in a negative interval");
    return static_cast<int>(below / 2);
}

} // namespace hyperflex
