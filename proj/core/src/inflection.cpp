#include "hyperflex/inflection.hpp"

#include "hyperflex/local_expansion.hpp"

namespace hyperflex {

SeriesBasis canonical_basis(const QCurve& curve, int k) {
    if (k < 1) throw input_error("canonical_basis: k must be >= 1");
    SeriesBasis b;
    b.curve = &curve;
    b.k = k;
    int g = curve.genus;
    for (int i = 0; i <= k; ++i) b.elements.push_back(QFFE::xpow(curve, static_cast<unsigned>(i)));
    if (k > g)
        for (int i = 0; i <= k - g - 1; ++i)
            b.elements.push_back(QFFE::xpow(curve, static_cast<unsigned>(i)) * QFFE::y(curve));
    b.rank = static_cast<long>(b.elements.size()) - 1;
    return b;
}

QRatFunc wronskian_Q(const QCurve& curve, int k) {
    if (k <= curve.genus) return QRatFunc(1);
    std::vector<long> offsets;
    for (long i = 0; i <= k - curve.genus - 1; ++i) offsets.push_back(i);
    QRatFunc q = wronskian_block_q(curve, k, offsets);
    if (q.is_zero()) throw internal_error("wronskian_Q: vanishing Wronskian on a separable curve");
    return q;
}

QPoly strip_common_factors(QPoly p, const QPoly& f) {
    while (true) {
        QPoly g = gcd(p, f);
        if (g.degree() == 0) return p;
        p = p / g;
    }
}

namespace {

// deg S = 4g(k+1)(k-g): two sheet points over each of the 2g(k+1)(k-g) roots
long expected_s_degree(int g, int k) {
    return k <= g ? 0 : 4L * g * (k + 1) * (k - g);
}

void verify_ramification_weights(const HyperellipticCurve& curve, const SeriesBasis& basis,
                                 long expected_weight) {
    const QCurve& c = curve.eq();
    long d = 2L * basis.k;
    long order0 = 2 * (2L * basis.k + curve.genus()) + 4;
    // infinity is always a rational ramification point
    auto seq_inf = vanishing_sequence(c, basis.elements, ExpansionPoint::infinity(), d, order0);
    if (weight_of_sequence(seq_inf) != expected_weight)
        throw internal_error("inflection: weight at infinity disagrees with the closed form");
    // rational finite branch points (exact roots found during isolation)
    for (const auto& r : curve.real_branch_roots()) {
        if (!r.exact_value) continue;
        auto seq =
            vanishing_sequence(c, basis.elements, ExpansionPoint::ramified(*r.exact_value), 0, order0);
        if (weight_of_sequence(seq) != expected_weight)
            throw internal_error("inflection: ramification weight disagrees with the closed form");
    }
}

} // namespace

InflectionReport inflection_divisor(const HyperellipticCurve& curve, int k,
                                    const InflectionOptions& opts) {
    if (k < 1) throw input_error("inflection_divisor: k must be >= 1");
    const int g = curve.genus();
    InflectionReport rep;
    rep.genus = g;
    rep.k = k;
    long d = 2L * k;
    rep.rank = k <= g ? k : 2L * k - g;
    rep.total_degree = (rep.rank + 1) * (d + rep.rank * (g - 1));
    rep.ram_weight = k <= g ? binomial2(k + 1) : binomial2(g + 1);

    // R = ram_weight * R_pi
    Divisor rpi = curve.ramification_divisor();
    for (const auto& e : rpi.real_points) rep.R.add_real(e.point, e.mult * rep.ram_weight);
    for (const auto& e : rpi.blocks) rep.R.add_block(e.block, e.mult * rep.ram_weight);

    // S from the Wronskian block factor
    if (k > g) {
        QRatFunc q = wronskian_Q(curve.eq(), k);
        QPoly h = strip_common_factors(q.num(), curve.f());
        rep.s_support = h.monic();
        rep.s_degree = 2 * h.degree();
        if (rep.s_degree != expected_s_degree(g, k))
            throw internal_error("inflection: S degree disagrees with the degree identity");
    } else {
        rep.s_support = QPoly::one();
        rep.s_degree = 0;
    }

    rep.m_infinity_extra = rep.total_degree - rep.R.degree() - rep.s_degree;
    if (rep.m_infinity_extra != 0)
        throw internal_error("inflection: degree bookkeeping failed to balance");

    SeriesBasis basis = canonical_basis(curve.eq(), k);
    if (opts.verify_weights) verify_ramification_weights(curve, basis, rep.ram_weight);

    if (opts.real_analysis) {
        const int n = curve.real_component_count();
        rep.per_component_real.assign(static_cast<std::size_t>(n), 0);
        rep.per_component_distinct.assign(static_cast<std::size_t>(n), 0);

        // ramification contribution
        for (const auto& r : curve.real_branch_roots()) {
            int comp = curve.component_of_x(AlgNum(r));
            rep.per_component_real[static_cast<std::size_t>(comp)] += rep.ram_weight;
            rep.per_component_distinct[static_cast<std::size_t>(comp)] += 1;
        }
        {
            int comp = curve.component_of_infinity();
            rep.per_component_real[static_cast<std::size_t>(comp)] += rep.ram_weight;
            rep.per_component_distinct[static_cast<std::size_t>(comp)] += 1;
        }
        rep.real_degree = rep.ram_weight * 2 * n;
        rep.distinct_real_points = 2 * n;

        // S contribution: each root p of h with f(p) > 0 lifts to the two
        // points (p, +-sqrt(f(p))); f(p) < 0 gives a conjugate pair.
        if (rep.s_support.degree() > 0) {
            for (const auto& root : isolate_real_roots(rep.s_support)) {
                int s = sign_at_root(curve.f(), root);
                if (s == 0)
                    throw internal_error("inflection: S support meets the ramification locus");
                if (s > 0) {
                    int comp = curve.component_of_x(AlgNum(root));
                    rep.S.add_real(RealPoint::finite(AlgNum(root), +1), root.multiplicity);
                    rep.S.add_real(RealPoint::finite(AlgNum(root), -1), root.multiplicity);
                    rep.per_component_real[static_cast<std::size_t>(comp)] += 2 * root.multiplicity;
                    rep.per_component_distinct[static_cast<std::size_t>(comp)] += 2;
                    rep.real_degree += 2 * root.multiplicity;
                    rep.distinct_real_points += 2;
                } else {
                    NonRealBlock b;
                    b.kind = NonRealBlock::Kind::PairOverRealX;
                    b.x = AlgNum(root);
                    b.branches = 2;
                    rep.S.add_block(std::move(b), root.multiplicity);
                }
            }
            // points over the non-real roots of h, bundled per square-free factor
            for (const auto& [fac, mult] : squarefree_decomposition(rep.s_support)) {
                long nonreal = fac.degree() - sturm_count_all(fac);
                if (nonreal > 0) {
                    NonRealBlock b;
                    b.kind = NonRealBlock::Kind::OverNonRealX;
                    b.factor = fac;
                    b.nonreal_root_count = nonreal;
                    b.branches = 2;
                    rep.S.add_block(std::move(b), mult);
                }
            }
            if (rep.S.degree() != rep.s_degree)
                throw internal_error("inflection: S divisor degree mismatch");
        }
        rep.real_analysis_done = true;
    }
    return rep;
}

std::pair<long, std::vector<long>> real_inflection_summary(const HyperellipticCurve& curve, int k) {
    InflectionOptions opts;
    opts.verify_weights = false;
    InflectionReport rep = inflection_divisor(curve, k, opts);
    return {rep.real_degree, rep.per_component_real};
}

std::vector<int> parity_vector(const Divisor& d, const HyperellipticCurve& curve) {
    std::vector<int> par(static_cast<std::size_t>(curve.real_component_count()), 0);
    for (const auto& e : d.real_points) {
        int comp = e.point.is_infinity() ? curve.component_of_infinity()
                                         : curve.component_of_x(e.point.x);
        par[static_cast<std::size_t>(comp)] =
            (par[static_cast<std::size_t>(comp)] + static_cast<int>(((e.mult % 2) + 2) % 2)) % 2;
    }
    return par;
}

std::vector<long> elliptic_complete_trichotomy(int n, const std::vector<int>& parity, long d) {
    if (d < 2) throw input_error("elliptic_complete_trichotomy: degree must be >= 2");
    if (n != 1 && n != 2) throw input_error("elliptic_complete_trichotomy: n must be 1 or 2");
    int sum = 0;
    for (int p : parity) sum += p;
    if (static_cast<long>(sum % 2) != ((d % 2) + 2) % 2)
        throw input_error("elliptic_complete_trichotomy: parity vector inconsistent with degree");
    if (n == 1) return {d};
    if (parity.size() != 2)
        throw input_error("elliptic_complete_trichotomy: parity vector size must equal n");
    int c0 = parity[0], c1 = parity[1];
    if (c0 == 0 && c1 == 0) return {d, d};
    if (c0 == 1 && c1 == 1) return {0, 0};
    return {c0 == 1 ? d : 0, c1 == 1 ? d : 0};
}

} // namespace hyperflex
