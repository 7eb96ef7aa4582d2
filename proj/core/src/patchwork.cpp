#include "hyperflex/patchwork.hpp"

#include <algorithm>

#include "hyperflex/resultant.hpp"

namespace hyperflex {

EllipticPiece EllipticPiece::from_roots(int index, Rat lead, const Rat& r1, const Rat& r2) {
    EllipticPiece p;
    p.index = index;
    p.lead = std::move(lead);
    p.b = -(r1 + r2);
    p.c = r1 * r2;
    p.validate();
    return p;
}

EllipticPiece EllipticPiece::from_quadratic(int index, Rat lead, Rat b, Rat c) {
    EllipticPiece p;
    p.index = index;
    p.lead = std::move(lead);
    p.b = std::move(b);
    p.c = std::move(c);
    p.validate();
    return p;
}

std::optional<std::pair<Rat, Rat>> EllipticPiece::rational_roots() const {
    auto s = discriminant().sqrt_exact();
    if (!s) return std::nullopt;
    Rat r1 = (-b + *s) / Rat(2);
    Rat r2 = (-b - *s) / Rat(2);
    return std::make_pair(r1, r2);
}

QPoly EllipticPiece::expanded() const {
    QPoly quad{c, b, Rat(1)};
    return (quad * lead).shifted_up(static_cast<std::size_t>(2 * index - 1));
}

QPoly EllipticPiece::cubic_form() const {
    QPoly quad{c, b, Rat(1)};
    return (quad * lead).shifted_up(1);
}

void EllipticPiece::validate() const {
    if (index < 1) throw input_error("EllipticPiece: index must be >= 1");
    if (lead.is_zero()) throw nonseparable_error("EllipticPiece: zero leading coefficient");
    if (c.is_zero()) throw nonseparable_error("EllipticPiece: a root is zero");
    if (discriminant().is_zero()) throw nonseparable_error("EllipticPiece: repeated root");
}

long NuFunction::at(int i) const {
    auto it = values.find(i);
    if (it == values.end()) throw input_error("NuFunction: value at absent index");
    return it->second;
}

Rat NuFunction::hull_height(int i) const {
    if (i % 2 == 1) return Rat(at(i));
    return Rat(at(i - 1) + at(i + 1), 2);
}

void NuFunction::validate() const {
    if (g < 1) throw input_error("NuFunction: g must be >= 1");
    for (int j = 1; j <= g + 1; ++j)
        if (!is_finite(2 * j - 1))
            throw input_error("NuFunction: odd indices must carry finite values");
    for (const auto& [i, v] : values) {
        if (i < 1 || i > 2 * g + 1) throw input_error("NuFunction: index out of range");
        if (v < 0) throw input_error("NuFunction: negative value");
    }
    for (int j = 1; j + 1 <= g; ++j) {
        long second_diff = at(2 * j - 1) - 2 * at(2 * j + 1) + at(2 * j + 3);
        if (second_diff <= 0)
            throw subdivision_mismatch(
                "NuFunction: odd values not strictly convex; the subdivision breakpoint at " +
                std::to_string(2 * j + 1) + " is missing");
    }
    for (int j = 1; j <= g; ++j) {
        int i = 2 * j;
        if (is_finite(i) && Rat(at(i)) < hull_height(i))
            throw subdivision_mismatch("NuFunction: even value below the lower hull");
    }
}

NuFunction NuFunction::default_for(int g, const std::vector<Rat>& coeffs) {
    NuFunction nu;
    nu.g = g;
    for (int j = 1; j <= g + 1; ++j) nu.values[2 * j - 1] = static_cast<long>(j - 1) * j;
    for (int j = 1; j <= g; ++j) {
        int i = 2 * j;
        bool nonzero = i < static_cast<int>(coeffs.size()) &&
                       !coeffs[static_cast<std::size_t>(i)].is_zero();
        if (nonzero) nu.values[i] = static_cast<long>(j) * j; // on-hull midpoint
    }
    return nu;
}

void PatchworkFamily::validate() const {
    if (g < 1) throw input_error("PatchworkFamily: g must be >= 1");
    if (a.size() != static_cast<std::size_t>(2 * g + 2))
        throw input_error("PatchworkFamily: coefficient vector must have 2g+2 entries");
    if (!a[0].is_zero())
        throw input_error("PatchworkFamily: constant term must vanish (f(0) = 0)");
    nu.validate();
    for (int i = 1; i <= 2 * g + 1; ++i) {
        bool zero = a[static_cast<std::size_t>(i)].is_zero();
        if (zero == nu.is_finite(i))
            throw input_error("PatchworkFamily: a_i = 0 exactly when nu(i) is infinite");
    }
    // separability of the family over Q(t)
    TPoly f = f_of_t();
    if (gcd(f, f.derivative()).degree() != 0)
        throw nonseparable_error("PatchworkFamily: f is not separable over Q(t)");
    // separability of every initial piece
    for (int i = 1; i <= g; ++i) (void)initial_degeneration(*this, i);
}

TPoly PatchworkFamily::f_of_t() const {
    std::vector<TScalar> c(static_cast<std::size_t>(2 * g + 2), TScalar(0));
    for (int i = 1; i <= 2 * g + 1; ++i) {
        if (!nu.is_finite(i)) continue;
        QPoly tpow = QPoly::monomial(a[static_cast<std::size_t>(i)],
                                     static_cast<std::size_t>(nu.at(i)));
        c[static_cast<std::size_t>(i)] = TScalar(tpow);
    }
    return TPoly(std::move(c));
}

Subdivision induced_subdivision(const NuFunction& nu) {
    nu.validate(); // throws subdivision_mismatch on a bad hull
    Subdivision sub;
    for (int j = 1; j <= nu.g; ++j) {
        SubdivisionFace face;
        face.j = j;
        face.lo = 2 * j - 1;
        face.hi = 2 * j + 1;
        face.beta = Rat(nu.at(face.hi) - nu.at(face.lo), 2);
        face.alpha = Rat(nu.at(face.lo)) - face.beta * Rat(face.lo);
        sub.faces.push_back(face);
    }
    // certificate: every lifted point lies on or above every face plane
    for (const auto& face : sub.faces)
        for (const auto& [i, v] : nu.values)
            if (Rat(v) < face.alpha + face.beta * Rat(i))
                throw subdivision_mismatch("induced_subdivision: lifted point below a face plane");
    for (int j = 1; j + 1 <= nu.g; ++j)
        sub.finite_edge_lengths.push_back(
            Rat(nu.at(2 * j - 1) - 2 * nu.at(2 * j + 1) + nu.at(2 * j + 3), 4));
    sub.certified = true;
    return sub;
}

PatchworkFamily assemble_family(const std::vector<EllipticPiece>& pieces,
                                std::optional<NuFunction> nu) {
    if (pieces.empty()) throw input_error("assemble_family: no pieces");
    int g = static_cast<int>(pieces.size());
    for (int j = 0; j < g; ++j) {
        if (pieces[static_cast<std::size_t>(j)].index != j + 1)
            throw input_error("assemble_family: piece indices must be 1..g in order");
        pieces[static_cast<std::size_t>(j)].validate();
    }
    // gluing: the coefficient of x^(2j+1) must agree between the expansions of
    // piece j (its leading term) and piece j+1 (its trailing term)
    for (int j = 0; j + 1 < g; ++j) {
        const auto& lo = pieces[static_cast<std::size_t>(j)];
        const auto& hi = pieces[static_cast<std::size_t>(j + 1)];
        Rat from_lo = lo.expanded().coeff(static_cast<std::size_t>(2 * lo.index + 1));
        Rat from_hi = hi.expanded().coeff(static_cast<std::size_t>(2 * lo.index + 1));
        if (from_lo != from_hi)
            throw gluing_mismatch("assemble_family: shared coefficient at x^" +
                                  std::to_string(2 * lo.index + 1) + " differs between pieces");
    }

    PatchworkFamily fam;
    fam.g = g;
    fam.a.assign(static_cast<std::size_t>(2 * g + 2), Rat(0));
    for (const auto& p : pieces) {
        QPoly e = p.expanded();
        for (long d = 2 * p.index - 1; d <= 2 * p.index + 1; ++d)
            fam.a[static_cast<std::size_t>(d)] = e.coeff(static_cast<std::size_t>(d));
    }

    if (nu) {
        fam.nu = std::move(*nu);
    } else {
        fam.nu = NuFunction::default_for(g, fam.a);
    }
    // nonzero even coefficients must sit exactly on the hull, otherwise the
    // initial forms lose their middle terms and the pieces do not round-trip
    for (int j = 1; j <= g; ++j) {
        int i = 2 * j;
        if (fam.a[static_cast<std::size_t>(i)].is_zero()) continue;
        if (!fam.nu.is_finite(i))
            throw input_error("assemble_family: nu must be finite at even index " +
                              std::to_string(i));
        if (Rat(fam.nu.at(i)) != fam.nu.hull_height(i))
            throw input_error("assemble_family: nu at even index " + std::to_string(i) +
                              " must lie on the hull so the initial forms keep their middle terms");
    }
    fam.validate();
    return fam;
}

EllipticPiece initial_degeneration(const PatchworkFamily& fam, int i) {
    if (i < 1 || i > fam.g) throw input_error("initial_degeneration: index out of range");
    Rat lead = fam.coeff(2 * i + 1);
    Rat trail = fam.coeff(2 * i - 1);
    if (lead.is_zero() || trail.is_zero())
        throw internal_error("initial_degeneration: missing odd coefficient");
    Rat b(0);
    int mid = 2 * i;
    if (fam.nu.is_finite(mid) && Rat(fam.nu.at(mid)) == fam.nu.hull_height(mid))
        b = fam.coeff(mid) / lead;
    return EllipticPiece::from_quadratic(i, lead, b, trail / lead);
}

HyperellipticCurve instantiate(const PatchworkFamily& fam, const Rat& eps) {
    if (eps.sign() <= 0) throw input_error("instantiate: eps must be positive");
    std::vector<Rat> c(static_cast<std::size_t>(2 * fam.g + 2), Rat(0));
    for (int i = 1; i <= 2 * fam.g + 1; ++i) {
        if (!fam.nu.is_finite(i)) continue;
        c[static_cast<std::size_t>(i)] = fam.coeff(i) * eps.pow(fam.nu.at(i));
    }
    return HyperellipticCurve(QPoly(std::move(c))); // separability checked there
}

QPoly discriminant_in_t(const PatchworkFamily& fam) {
    TPoly f = fam.f_of_t();
    TScalar res = sylvester_resultant<TScalar>(f, f.derivative());
    if (res.is_zero()) throw nonseparable_error("discriminant_in_t: identically zero");
    return res.num();
}

std::optional<Rat> discriminant_stable_bound(const PatchworkFamily& fam) {
    QPoly disc = discriminant_in_t(fam);
    // drop the t = 0 root (the central fiber is always degenerate)
    while (disc.coeff(0).is_zero()) disc = disc / QPoly::x();
    std::optional<Rat> best;
    for (auto root : isolate_real_roots(disc)) {
        // refine until the interval is on one side of zero (no root is 0 now)
        while (root.lo.sign() <= 0 && root.hi.sign() > 0) refine_once(root);
        if (root.hi.sign() <= 0) continue; // negative root
        if (!best || root.lo < *best) best = root.lo;
    }
    if (!best) return std::nullopt;
    // power of two strictly below the smallest positive root
    Rat b = pow2_at_least(*best);
    while (b > *best) b /= Rat(2);
    return b;
}

} // namespace hyperflex
