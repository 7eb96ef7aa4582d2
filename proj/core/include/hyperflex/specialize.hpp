#ifndef HYPERFLEX_SPECIALIZE_HPP
#define HYPERFLEX_SPECIALIZE_HPP

#include "hyperflex/inflection.hpp"
#include "hyperflex/patchwork.hpp"
#include "hyperflex/sweep.hpp"

namespace hyperflex {

/// The limit linear series H_j on the normalization of a patchworking piece:
/// the piece y^2 = lead x^(2j-1)(x^2+bx+c) is rewritten on its cubic model
/// yhat^2 = lead x (x^2+bx+c) via yhat = y / x^(j-1), carrying the basis
/// {x^0..x^k} u {x^(j-1) yhat, ..., x^(j-1+k-g-1) yhat}.
struct EllipticSeries {
    EllipticPiece piece;
    int j = 1; // slot index
    int k = 0;
    int g = 0; // ambient genus
    HyperellipticCurve curve; // the cubic normal form, genus 1
    std::vector<QFFE> basis;
    std::vector<long> y_offsets;

    long dimension() const { return static_cast<long>(basis.size()); }
};

EllipticSeries make_elliptic_series(const EllipticPiece& piece, int k, int g);

struct MarkedPointWeights {
    long at_zero = 0, at_infinity = 0, at_root1 = 0, at_root2 = 0;
    long sum() const { return at_zero + at_infinity + at_root1 + at_root2; }
};

/// Inflectionary weights of H_j at the four marked points, computed from
/// vanishing sequences (balance route for non-rational branch roots) and
/// cross-checked against the closed forms; disagreement is a hard error.
MarkedPointWeights marked_point_weights(const EllipticSeries& es);

struct CompatibilityReport {
    bool ok = true;
    long expected_sum = 0; // 2k
    // witness table: per consecutive pair, the two sequences and their sums
    struct Pair {
        int j_low = 1;
        std::vector<long> orders_at_infinity; // of H_j
        std::vector<long> orders_at_zero;     // of H_{j+1}
        std::vector<long> sums;
    };
    std::vector<Pair> pairs;
};

/// o_i(H_j, inf) + o_{2k-g-i}(H_{j+1}, 0) = 2k for all i and consecutive j.
CompatibilityReport compatibility_check(const std::vector<EllipticSeries>& series);

struct EllipticInflectionReport {
    int j = 1, k = 0, g = 0;
    long total_degree = 0; // 2k(2k-g+1)
    MarkedPointWeights boundary;
    QPoly s_support;        // monic, degree 2(k+1)(k-g)
    long s_degree = 0;      // 4(k+1)(k-g)
    long s_real_degree = 0; // weighted real degree of the interior part
    long s_distinct_real = 0;
    Divisor S;
    /// real degree of the whole inflection divisor of H_j
    long real_degree = 0;
};

EllipticInflectionReport elliptic_inflection(const EllipticSeries& es);

struct RegenerationReport {
    int g = 0, k = 0;
    // complex-degree identity g(2k-g+1)^2 = g 2k(2k-g+1) - g(g-1)(2k-g+1)
    bool complex_identity = false;
    long attachment_pair_weight = 0; // g(2k-g+1)
    std::vector<EllipticInflectionReport> pieces;
    long rhs_real_degree = 0; // sum deg_R Inf(H_i) - g(g-1)(2k-g+1)
    SweepResult sweep;
    std::optional<long> lhs_real_degree; // stabilized sweep value
    bool match = false;
};

RegenerationReport regeneration_check(const PatchworkFamily& fam, int k,
                                      const SweepOptions& sweep_opts = {});

/// Pieces used to build lower-bound instances; measured in slot-1 position
/// (the incomplete series V(g)).
std::vector<EllipticPiece> default_piece_library();

struct LowerBoundReport {
    int g = 0, k = 0, n = 1;
    EllipticPiece e1, e2;   // the one- and two-component library pieces used
    long s_r1 = 0, s_r2 = 0; // measured interior real degrees
    long predicted = 0;      // (g(g+1)+s2) n + (g-n+1) s1 - s2
    std::optional<long> achieved;
    bool match = false;
    SweepResult sweep;
};

/// Builds the patchwork family with E1 used g+1-n times and E2 used n-1
/// times, measures the achieved real inflection degree, and compares against
/// the closed-form prediction.
LowerBoundReport lower_bound_instances(int g, int k, int n,
                                       std::vector<EllipticPiece> library = {});

} // namespace hyperflex

#endif
