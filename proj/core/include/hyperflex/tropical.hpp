#ifndef HYPERFLEX_TROPICAL_HPP
#define HYPERFLEX_TROPICAL_HPP

#include <map>
#include <string>

#include "hyperflex/patchwork.hpp"

namespace hyperflex {

/// Corner locus of max{2y, i x - nu(i)}: one vertex per hull face, dual
/// edges weighted by lattice length.
struct TropicalVertex {
    Rat x, y;
};

struct TropicalEdge {
    int from = 0;             // vertex index
    int to = -1;              // vertex index, or -1 for an unbounded ray
    long dir_x = 0, dir_y = 0; // primitive direction, outgoing from `from`
    long weight = 1;
    std::optional<Rat> length; // lattice length for bounded edges
};

struct TropicalPlaneCurve {
    std::vector<TropicalVertex> vertices;
    std::vector<TropicalEdge> edges;

    bool is_balanced() const;
};

TropicalPlaneCurve tropicalize(const PatchworkFamily& fam);

/// Marked metrized complex of real elliptic curves: the path v_1 .. v_g of
/// type-II vertices carrying the initial pieces, plus the 2g+2 type-I marked
/// points (the support of the ramification divisor).
struct MetrizedComplex {
    enum class Tag { Zero, Infinity, Root1, Root2 };

    struct Mark {
        Tag tag;
        bool attachment = false; // edge towards another type-II vertex
        std::string edge;        // e_0, e_1, ..., e_inf, e_i_1, e_i_2
    };
    struct TypeOnePoint {
        std::string name; // "0", "inf", "v_i_j"
        int vertex = 1;   // adjacent type-II vertex (1-based)
        Tag tag;          // the marked point p(w) on that vertex curve
    };

    int g = 0;
    std::vector<EllipticPiece> vertex_curves;       // index i-1 <-> v_i
    std::vector<Rat> finite_edge_lengths;           // e_1 .. e_{g-1}
    std::vector<std::vector<Mark>> marked_sets;     // A_i per vertex
    std::vector<TypeOnePoint> type_one;             // Supp(R_pi), 2g+2 points

    long type_one_count() const { return static_cast<long>(type_one.size()); }
    long finite_edge_count() const { return static_cast<long>(finite_edge_lengths.size()); }
    /// B_i = A_i minus the non-attachment marked points (the Gamma variant).
    std::vector<std::vector<Mark>> gamma_marked_sets() const;

    /// x-valuation (log coordinate) of the vertex v_i.
    Rat vertex_x_valuation(int i) const;

    std::vector<Rat> vertex_valuations; // filled by build_skeleton
};

MetrizedComplex build_skeleton(const PatchworkFamily& fam);

/// Divisor on a vertex curve, split into the interior part (away from the
/// marked points) and weights at the four marked points. Points are recorded
/// on the cubic normal form of the vertex curve.
struct VertexDivisor {
    Divisor interior;
    long at_zero = 0, at_infinity = 0, at_root1 = 0, at_root2 = 0;

    long interior_degree() const { return interior.degree(); }
};

/// Divisor on the metrized complex respecting the marked points.
struct ComplexDivisor {
    std::vector<long> vertex_weight;          // graph weight at v_i
    std::map<std::string, long> type_one_weight;
    std::vector<VertexDivisor> curve_parts;   // D_{v_i}

    long total_degree() const;
    /// D_Sk(v_i) = deg(D_{v_i}|_{Y_i}) and D_Sk(w) = D_{v_i}(p(w)) at type-I
    /// neighbors.
    bool respects_marked_points(const MetrizedComplex& skel) const;
};

/// A point (or conjugation-stable bundle) of the generic fiber, recorded by
/// the leading behavior x ~ alpha t^w that the initial-coefficient map
/// consumes. Bundles carry the square-free polynomial whose roots are the
/// leading coefficients alpha.
struct SpecPoint {
    Rat t_exponent;      // w (must be integral for vertex routing)
    QPoly lead_support;  // square-free, roots = leading coefficients, 0 not a root
    long mult = 1;
};

/// Routes points to vertex curves through the initial-coefficient map.
/// Throws valuation_off_curve when a valuation matches no vertex.
ComplexDivisor specialize_divisor(const std::vector<SpecPoint>& points,
                                  const MetrizedComplex& skel);

// --- t-adic Newton polygon machinery ---------------------------------------

/// Bivariate polynomials for family computations: outer variable x,
/// coefficients in Q[t].
using XTPoly = Poly<Poly<Rat>>;

XTPoly family_f_xt(const PatchworkFamily& fam);

struct NPSegment {
    Rat slope;       // val_t height change per x-degree; roots have val_t = -slope...
                     // (with points (m, ord_t c_m): roots on this segment have
                     // t-adic valuation equal to -slope)
    long m_lo = 0, m_hi = 0;
    QPoly residual;  // sum of lowest t-coefficients over on-hull points, in z^(m - m_lo)
};

/// Lower hull of {(m, ord_t(c_m))} with segment residual polynomials.
std::vector<NPSegment> t_newton_polygon(const XTPoly& p);

/// The x-support polynomial h_t of the family S-divisor: the Wronskian block
/// numerator with the predicted power of f divided out, coprime to f.
XTPoly family_s_support(const PatchworkFamily& fam, int k);

/// S-points of the family as SpecPoints (from the Newton polygon of h_t).
std::vector<SpecPoint> family_s_points(const PatchworkFamily& fam, int k);

/// The full specialization of the inflection divisor: ramification weights at
/// the type-I points plus the interior S-parts on the vertex curves.
ComplexDivisor specialize_family_inflection(const PatchworkFamily& fam, int k,
                                            const MetrizedComplex& skel);

} // namespace hyperflex

#endif
