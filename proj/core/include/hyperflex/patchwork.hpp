#ifndef HYPERFLEX_PATCHWORK_HPP
#define HYPERFLEX_PATCHWORK_HPP

#include <map>
#include <optional>

#include "hyperflex/curve.hpp"
#include "hyperflex/rational_function.hpp"

namespace hyperflex {

/// Genus-1 building block Q_j = lead * x^(2j-1) (x - r1)(x - r2), stored by
/// its monic quadratic factor x^2 + b x + c so that conjugate (and real
/// irrational) root pairs stay exact.
struct EllipticPiece {
    int index = 1;  // slot j in 1..g
    Rat lead;       // coefficient of x^(2j+1) after expansion
    Rat b, c;       // quadratic factor x^2 + b x + c  (roots r1, r2)

    static EllipticPiece from_roots(int index, Rat lead, const Rat& r1, const Rat& r2);
    static EllipticPiece from_quadratic(int index, Rat lead, Rat b, Rat c);

    Rat discriminant() const { return b * b - Rat(4) * c; }
    bool roots_real() const { return discriminant().sign() > 0; }
    bool roots_rational() const { return discriminant().sqrt_exact().has_value(); }
    std::optional<std::pair<Rat, Rat>> rational_roots() const;

    /// n of the normalized elliptic curve: 2 for real roots, 1 for a
    /// conjugate pair.
    int real_component_count() const { return roots_real() ? 2 : 1; }

    /// lead * x^(2j-1) (x^2 + b x + c), degrees 2j-1 .. 2j+1.
    QPoly expanded() const;

    /// Cubic normal form f = lead * x (x^2 + b x + c) of the normalization
    /// (x, y) -> (x, y / x^(j-1)).
    QPoly cubic_form() const;

    void validate() const; // roots distinct, nonzero, lead nonzero
};

/// Lifting function nu on [1, 2g+1]: finite values induce the regular
/// subdivision {[2j-1, 2j+1]} of the base interval; absent (infinite) values
/// mark zero coefficients.
struct NuFunction {
    int g = 0;
    std::map<int, long> values; // index -> nu(index); missing = infinity

    bool is_finite(int i) const { return values.count(i) != 0; }
    long at(int i) const;

    /// Strict convexity across odd indices (breakpoints at 3, 5, ..., 2g-1)
    /// and even values on or above the hull.
    void validate() const;

    /// Height of the lower hull of the odd-index graph at position i.
    Rat hull_height(int i) const;

    /// nu(2j-1) = (j-1)j, with even indices filled on-hull where needed for
    /// the given coefficients (a_i = 0 <=> nu(i) = infinity).
    static NuFunction default_for(int g, const std::vector<Rat>& coeffs);
};

/// One-parameter family y^2 = sum a_i t^{nu(i)} x^i.
struct PatchworkFamily {
    int g = 0;
    std::vector<Rat> a; // a[i] = a_i, index 0 unused (always zero)
    NuFunction nu;

    void validate() const;
    Rat coeff(int i) const { return a[static_cast<std::size_t>(i)]; }

    /// f as a polynomial in x over Q(t).
    TPoly f_of_t() const;
};

struct SubdivisionFace {
    int j = 1;          // face Theta_j
    int lo = 1, hi = 3; // bottom edge [2j-1, 2j+1]
    // supporting plane z = alpha + beta * x of the lifted hull over the edge
    Rat alpha, beta;
};

struct Subdivision {
    std::vector<SubdivisionFace> faces;
    std::vector<Rat> finite_edge_lengths; // skeleton lengths, one per interior edge
    bool certified = false;               // every lifted point on or above each plane
};

/// Lower-hull subdivision induced by nu; throws subdivision_mismatch unless
/// the 2-faces are exactly the triangles Theta_j.
Subdivision induced_subdivision(const NuFunction& nu);

/// Merges pieces into a family, checking the gluing constraint that the
/// shared odd coefficients agree: lead_j = lead_{j+1} * r_{j+1,1} * r_{j+1,2}.
PatchworkFamily assemble_family(const std::vector<EllipticPiece>& pieces,
                                std::optional<NuFunction> nu = std::nullopt);

/// in_{u_i}-initial form of the family: the terms whose lifts lie on the
/// hull face i. Round-trips assemble_family exactly.
EllipticPiece initial_degeneration(const PatchworkFamily& fam, int i);

/// Substitutes t = eps (eps > 0) and checks separability.
HyperellipticCurve instantiate(const PatchworkFamily& fam, const Rat& eps);

/// Numerator of disc_x(y^2 - f_t) as a polynomial in t; instantiation is
/// combinatorially stable below its smallest positive root.
QPoly discriminant_in_t(const PatchworkFamily& fam);

/// Largest bound B (power of two, possibly none when unconstrained) with no
/// root of the t-discriminant in (0, B].
std::optional<Rat> discriminant_stable_bound(const PatchworkFamily& fam);

} // namespace hyperflex

#endif
