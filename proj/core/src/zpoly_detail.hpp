// Internal integer-polynomial layer: primitive PRS, Sturm chains and
// Descartes isolation all run on mpz coefficient vectors to keep rational
// blow-up out of the hot paths.
#ifndef HYPERFLEX_ZPOLY_DETAIL_HPP
#define HYPERFLEX_ZPOLY_DETAIL_HPP

#include <vector>
#include <gmpxx.h>

#include "hyperflex/poly.hpp"

namespace hyperflex::detail {

using ZPoly = std::vector<mpz_class>; // lowest degree first, back() nonzero

void z_normalize(ZPoly& p);
long z_degree(const ZPoly& p);
mpz_class z_content(const ZPoly& p);      // nonnegative
ZPoly z_primitive(const ZPoly& p);        // content divided out, sign kept
ZPoly z_derivative(const ZPoly& p);
int z_sign_at(const ZPoly& p, const Rat& x);
int z_sign_at_inf(const ZPoly& p, int dir); // dir=+1 for +inf, -1 for -inf

ZPoly z_from_q(const QPoly& p);
QPoly q_from_z(const ZPoly& p);

/// Pseudo-remainder of lc(d)^(deg n - deg d + 1) * n modulo d.
ZPoly z_prem(const ZPoly& n, const ZPoly& d);

/// Primitive gcd with positive leading coefficient (subresultant PRS with a
/// single-prime modular coprimality shortcut).
ZPoly z_gcd(ZPoly a, ZPoly b);

/// Sturm chain of p (signs preserved up to positive factors).
std::vector<ZPoly> sturm_chain(const ZPoly& p);
long sturm_variations(const std::vector<ZPoly>& chain, const Rat& x);
long sturm_variations_at_inf(const std::vector<ZPoly>& chain, int dir);

struct IsolationResult {
    // open intervals with dyadic endpoints, one simple root each
    std::vector<std::pair<Rat, Rat>> intervals;
    // roots that happen to be rational, found exactly
    std::vector<Rat> exact;
};

/// Root isolation for a square-free primitive integer polynomial
/// (Descartes / Vincent-Collins-Akritas bisection).
IsolationResult descartes_isolate(const ZPoly& p);

} // namespace hyperflex::detail

#endif
