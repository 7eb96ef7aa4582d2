#ifndef HYPERFLEX_INFLECTION_HPP
#define HYPERFLEX_INFLECTION_HPP

#include <optional>

#include "hyperflex/curve.hpp"
#include "hyperflex/wronskian.hpp"

namespace hyperflex {

/// Basis of the complete series H^0(L(kD)), D = 2*infinity: x^0..x^k always,
/// plus x^i y for 0 <= i <= k-g-1 when k > g.
struct SeriesBasis {
    const QCurve* curve = nullptr;
    int k = 0;
    long rank = 0; // r: dimension - 1
    std::vector<QFFE> elements;
};

SeriesBasis canonical_basis(const QCurve& curve, int k);

struct InflectionOptions {
    bool real_analysis = true;   // isolate the real part of S
    bool verify_weights = true;  // recompute ramification weights from series
};

/// Inf(|L(kD)|) = R + S + the infinity share, with exact degrees.
struct InflectionReport {
    int genus = 0;
    int k = 0;
    long rank = 0;
    long total_degree = 0;

    long ram_weight = 0; // weight at every point of Supp(R_pi)
    Divisor R;
    Divisor S;                // populated when real analysis runs
    QPoly s_support;          // h(x): branch-free numerator of Q, deg = deg S / 2
    long s_degree = 0;        // 2 deg h
    long m_infinity_extra = 0;

    bool real_analysis_done = false;
    long real_degree = 0;
    long distinct_real_points = 0;
    std::vector<long> per_component_real;
    std::vector<long> per_component_distinct;
};

/// The y-block determinant factor Q(x) of the Wronskian (reduced).
QRatFunc wronskian_Q(const QCurve& curve, int k);

InflectionReport inflection_divisor(const HyperellipticCurve& curve, int k,
                                    const InflectionOptions& opts = {});

/// (weighted real degree, per-component distribution).
std::pair<long, std::vector<long>> real_inflection_summary(const HyperellipticCurve& curve, int k);

/// Per-component degree mod 2 of the real part of a divisor.
std::vector<int> parity_vector(const Divisor& d, const HyperellipticCurve& curve);

/// Real inflection count of a complete degree-d series on a genus-1 curve,
/// per component: n = 1 always yields d; n = 2 follows the parity trichotomy.
std::vector<long> elliptic_complete_trichotomy(int n, const std::vector<int>& parity, long d);

/// Strips every factor shared with f out of p (used to separate the support
/// of S from the ramification locus).
QPoly strip_common_factors(QPoly p, const QPoly& f);

/// Real-locus analysis of an S-type support polynomial h: every root p of h
/// with f(p) > 0 carries the two sheet points (p, +-sqrt(f(p))).
struct SupportAnalysis {
    Divisor S;
    long real_degree = 0;
    long distinct_real = 0;
    std::vector<long> per_component_real;
    std::vector<long> per_component_distinct;
};

SupportAnalysis analyze_s_support(const HyperellipticCurve& curve, const QPoly& h);

} // namespace hyperflex

#endif
