#include "hyperflex/tropical.hpp"

#include <algorithm>

#include "hyperflex/inflection.hpp"

namespace hyperflex {

namespace {

Rat vertex_a(const NuFunction& nu, int i) {
    return Rat(nu.at(2 * i + 1) - nu.at(2 * i - 1), 2);
}

Rat vertex_b(const NuFunction& nu, int i) {
    return (Rat(2 * i - 1) * vertex_a(nu, i) - Rat(nu.at(2 * i - 1))) / Rat(2);
}

} // namespace

bool TropicalPlaneCurve::is_balanced() const {
    std::vector<std::pair<long, long>> sums(vertices.size(), {0, 0});
    for (const auto& e : edges) {
        sums[static_cast<std::size_t>(e.from)].first += e.weight * e.dir_x;
        sums[static_cast<std::size_t>(e.from)].second += e.weight * e.dir_y;
        if (e.to >= 0) {
            sums[static_cast<std::size_t>(e.to)].first -= e.weight * e.dir_x;
            sums[static_cast<std::size_t>(e.to)].second -= e.weight * e.dir_y;
        }
    }
    for (const auto& [sx, sy] : sums)
        if (sx != 0 || sy != 0) return false;
    return true;
}

TropicalPlaneCurve tropicalize(const PatchworkFamily& fam) {
    fam.nu.validate();
    TropicalPlaneCurve t;
    int g = fam.g;
    for (int i = 1; i <= g; ++i)
        t.vertices.push_back({vertex_a(fam.nu, i), vertex_b(fam.nu, i)});
    // bounded edges dual to the interior edges of the subdivision
    for (int i = 1; i + 1 <= g; ++i) {
        TropicalEdge e;
        e.from = i - 1;
        e.to = i;
        e.dir_x = 2;
        e.dir_y = 2 * i + 1;
        e.weight = 1;
        e.length = (vertex_a(fam.nu, i + 1) - vertex_a(fam.nu, i)) / Rat(2);
        t.edges.push_back(e);
    }
    // rays: one per boundary edge of the triangle
    t.edges.push_back({0, -1, -2, -1, 1, std::nullopt});                    // towards x = 0
    t.edges.push_back({g - 1, -1, 2, 2 * g + 1, 1, std::nullopt});          // towards x = inf
    for (int i = 0; i < g; ++i) t.edges.push_back({i, -1, 0, -1, 2, std::nullopt}); // y = 0 side
    return t;
}

std::vector<std::vector<MetrizedComplex::Mark>> MetrizedComplex::gamma_marked_sets() const {
    std::vector<std::vector<Mark>> out(marked_sets.size());
    for (std::size_t i = 0; i < marked_sets.size(); ++i)
        for (const auto& m : marked_sets[i])
            if (m.attachment) out[i].push_back(m);
    return out;
}

Rat MetrizedComplex::vertex_x_valuation(int i) const {
    if (i < 1 || i > g) throw input_error("vertex_x_valuation: index out of range");
    return vertex_valuations[static_cast<std::size_t>(i - 1)];
}

MetrizedComplex build_skeleton(const PatchworkFamily& fam) {
    fam.validate();
    MetrizedComplex sk;
    sk.g = fam.g;
    for (int i = 1; i <= fam.g; ++i) {
        sk.vertex_curves.push_back(initial_degeneration(fam, i));
        sk.vertex_valuations.push_back(vertex_a(fam.nu, i));
    }
    sk.finite_edge_lengths = induced_subdivision(fam.nu).finite_edge_lengths;

    using Mark = MetrizedComplex::Mark;
    using Tag = MetrizedComplex::Tag;
    for (int i = 1; i <= fam.g; ++i) {
        std::vector<Mark> marks;
        marks.push_back(Mark{Tag::Zero, i > 1, i > 1 ? "e_" + std::to_string(i - 1) : "e_0"});
        marks.push_back(
            Mark{Tag::Infinity, i < fam.g, i < fam.g ? "e_" + std::to_string(i) : "e_inf"});
        marks.push_back(Mark{Tag::Root1, false, "e_" + std::to_string(i) + "_1"});
        marks.push_back(Mark{Tag::Root2, false, "e_" + std::to_string(i) + "_2"});
        sk.marked_sets.push_back(std::move(marks));
    }

    sk.type_one.push_back({"0", 1, Tag::Zero});
    sk.type_one.push_back({"inf", fam.g, Tag::Infinity});
    for (int i = 1; i <= fam.g; ++i) {
        sk.type_one.push_back({"v_" + std::to_string(i) + "_1", i, Tag::Root1});
        sk.type_one.push_back({"v_" + std::to_string(i) + "_2", i, Tag::Root2});
    }
    return sk;
}

long ComplexDivisor::total_degree() const {
    long d = 0;
    for (long w : vertex_weight) d += w;
    for (const auto& [name, w] : type_one_weight) d += w;
    return d;
}

bool ComplexDivisor::respects_marked_points(const MetrizedComplex& skel) const {
    if (vertex_weight.size() != static_cast<std::size_t>(skel.g)) return false;
    if (curve_parts.size() != static_cast<std::size_t>(skel.g)) return false;
    for (int i = 1; i <= skel.g; ++i) {
        const VertexDivisor& dv = curve_parts[static_cast<std::size_t>(i - 1)];
        long expected = dv.interior_degree();
        for (const auto& m : skel.marked_sets[static_cast<std::size_t>(i - 1)]) {
            if (!m.attachment) continue;
            switch (m.tag) {
            case MetrizedComplex::Tag::Zero: expected += dv.at_zero; break;
            case MetrizedComplex::Tag::Infinity: expected += dv.at_infinity; break;
            case MetrizedComplex::Tag::Root1: expected += dv.at_root1; break;
            case MetrizedComplex::Tag::Root2: expected += dv.at_root2; break;
            }
        }
        if (vertex_weight[static_cast<std::size_t>(i - 1)] != expected) return false;
    }
    for (const auto& w : skel.type_one) {
        const VertexDivisor& dv = curve_parts[static_cast<std::size_t>(w.vertex - 1)];
        long at = 0;
        switch (w.tag) {
        case MetrizedComplex::Tag::Zero: at = dv.at_zero; break;
        case MetrizedComplex::Tag::Infinity: at = dv.at_infinity; break;
        case MetrizedComplex::Tag::Root1: at = dv.at_root1; break;
        case MetrizedComplex::Tag::Root2: at = dv.at_root2; break;
        }
        auto it = type_one_weight.find(w.name);
        long have = it == type_one_weight.end() ? 0 : it->second;
        if (have != at) return false;
    }
    return true;
}

ComplexDivisor specialize_divisor(const std::vector<SpecPoint>& points,
                                  const MetrizedComplex& skel) {
    ComplexDivisor out;
    out.vertex_weight.assign(static_cast<std::size_t>(skel.g), 0);
    out.curve_parts.assign(static_cast<std::size_t>(skel.g), VertexDivisor{});
    for (const auto& t1 : skel.type_one) out.type_one_weight[t1.name] = 0;

    for (const auto& pt : points) {
        if (pt.lead_support.degree() < 1)
            throw input_error("specialize_divisor: empty leading-coefficient support");
        if (pt.lead_support.coeff(0).is_zero())
            throw input_error("specialize_divisor: zero leading coefficient");
        int vertex = -1;
        for (int i = 1; i <= skel.g; ++i) {
            if (-skel.vertex_x_valuation(i) == pt.t_exponent) {
                vertex = i;
                break;
            }
        }
        if (vertex < 0)
            throw valuation_off_curve(
                "specialize_divisor: t-exponent " + pt.t_exponent.str() +
                " matches no vertex (the point would land on an edge of the skeleton)");

        VertexDivisor& dv = out.curve_parts[static_cast<std::size_t>(vertex - 1)];
        const EllipticPiece& piece = skel.vertex_curves[static_cast<std::size_t>(vertex - 1)];
        QPoly cubic = piece.cubic_form();

        for (const auto& root : isolate_real_roots(pt.lead_support)) {
            int s = sign_at_root(cubic, root);
            if (s == 0)
                throw computation_error(
                    "specialize_divisor: a point specializes onto a marked point");
            if (s > 0) {
                dv.interior.add_real(RealPoint::finite(AlgNum(root), +1), pt.mult);
                dv.interior.add_real(RealPoint::finite(AlgNum(root), -1), pt.mult);
            } else {
                NonRealBlock b;
                b.kind = NonRealBlock::Kind::PairOverRealX;
                b.x = AlgNum(root);
                b.branches = 2;
                dv.interior.add_block(std::move(b), pt.mult);
            }
        }
        long nonreal = pt.lead_support.degree() - sturm_count_all(pt.lead_support);
        if (nonreal > 0) {
            NonRealBlock b;
            b.kind = NonRealBlock::Kind::OverNonRealX;
            b.factor = pt.lead_support;
            b.nonreal_root_count = nonreal;
            b.branches = 2;
            dv.interior.add_block(std::move(b), pt.mult);
        }
        out.vertex_weight[static_cast<std::size_t>(vertex - 1)] +=
            2 * pt.mult * pt.lead_support.degree();
    }
    return out;
}

XTPoly family_f_xt(const PatchworkFamily& fam) {
    std::vector<Poly<Rat>> c(static_cast<std::size_t>(2 * fam.g + 2), Poly<Rat>());
    for (int i = 1; i <= 2 * fam.g + 1; ++i) {
        if (!fam.nu.is_finite(i)) continue;
        c[static_cast<std::size_t>(i)] =
            QPoly::monomial(fam.coeff(i), static_cast<std::size_t>(fam.nu.at(i)));
    }
    return XTPoly(std::move(c));
}

std::vector<NPSegment> t_newton_polygon(const XTPoly& p) {
    struct Pt {
        long m;
        long v;
    };
    std::vector<Pt> pts;
    for (long m = 0; m <= p.degree(); ++m) {
        const QPoly& c = p.coeff(static_cast<std::size_t>(m));
        if (c.is_zero()) continue;
        long v = 0;
        while (c.coeff(static_cast<std::size_t>(v)).is_zero()) ++v;
        pts.push_back({m, v});
    }
    if (pts.size() < 2) return {};
    // lower hull, left to right, slopes strictly increasing
    std::vector<Pt> hull;
    for (const auto& q : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            // drop b when it is above or on the segment a..q
            if ((q.v - a.v) * (b.m - a.m) <= (b.v - a.v) * (q.m - a.m))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(q);
    }
    std::vector<NPSegment> segs;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        NPSegment seg;
        seg.m_lo = hull[s].m;
        seg.m_hi = hull[s + 1].m;
        seg.slope = Rat(hull[s + 1].v - hull[s].v, seg.m_hi - seg.m_lo);
        std::vector<Rat> res(static_cast<std::size_t>(seg.m_hi - seg.m_lo) + 1, Rat(0));
        for (long m = seg.m_lo; m <= seg.m_hi; ++m) {
            const QPoly& c = p.coeff(static_cast<std::size_t>(m));
            if (c.is_zero()) continue;
            Rat height = Rat(hull[s].v) + seg.slope * Rat(m - seg.m_lo);
            if (!height.is_integer()) continue;
            long e = static_cast<long>(height.num().get_si());
            long v = 0;
            while (c.coeff(static_cast<std::size_t>(v)).is_zero()) ++v;
            if (v != e) continue; // lifted point lies strictly above the hull
            res[static_cast<std::size_t>(m - seg.m_lo)] = c.coeff(static_cast<std::size_t>(e));
        }
        seg.residual = QPoly(std::move(res));
        segs.push_back(std::move(seg));
    }
    return segs;
}

XTPoly family_s_support(const PatchworkFamily& fam, int k) {
    int g = fam.g;
    if (k <= g) return XTPoly(1);
    long m = k - g;
    XTPoly f = family_f_xt(fam);
    XTPoly fp = f.derivative();

    std::vector<std::vector<XTPoly>> mat(static_cast<std::size_t>(m));
    long col_lo = k + 1, col_hi = k + m;
    for (long i = 0; i < m; ++i) {
        XTPoly n = XTPoly::monomial(Poly<Rat>(1), static_cast<std::size_t>(i));
        for (long j = 0; j < col_lo; ++j) n = wronskian_numer_step(f, fp, n, j);
        for (long j = col_lo; j <= col_hi; ++j) {
            mat[static_cast<std::size_t>(i)].push_back(n);
            if (j < col_hi) n = wronskian_numer_step(f, fp, n, j);
        }
    }
    XTPoly det = bareiss_determinant(std::move(mat));

    // predicted f-multiplicity of the determinant numerator
    long r = 2L * k - g;
    long pow_sum = 0;
    for (long j = col_lo; j <= col_hi; ++j) pow_sum += j;
    long e = pow_sum - (binomial2(r + 1) - binomial2(g + 1) + m) / 2;
    if (e < 0) throw internal_error("family_s_support: negative predicted multiplicity");
    for (long i = 0; i < e; ++i) det = det / f;

    if (det.degree() != 2L * g * (k + 1) * (k - g))
        throw internal_error("family_s_support: degree disagrees with the identity");
    return det;
}

std::vector<SpecPoint> family_s_points(const PatchworkFamily& fam, int k) {
    XTPoly h = family_s_support(fam, k);
    std::vector<SpecPoint> out;
    for (const auto& seg : t_newton_polygon(h)) {
        if (seg.residual.degree() != seg.m_hi - seg.m_lo)
            throw internal_error("family_s_points: residual degree mismatch");
        for (const auto& [fac, mult] : squarefree_decomposition(seg.residual)) {
            SpecPoint pt;
            pt.t_exponent = -seg.slope;
            pt.lead_support = fac;
            pt.mult = mult;
            out.push_back(std::move(pt));
        }
    }
    return out;
}

ComplexDivisor specialize_family_inflection(const PatchworkFamily& fam, int k,
                                            const MetrizedComplex& skel) {
    if (k < fam.g) throw input_error("specialize_family_inflection: needs k >= g");
    long w = binomial2(fam.g + 1);
    ComplexDivisor out = k > fam.g ? specialize_divisor(family_s_points(fam, k), skel)
                                   : specialize_divisor({}, skel);
    for (const auto& t1 : skel.type_one) out.type_one_weight[t1.name] = w;
    for (int i = 1; i <= fam.g; ++i) {
        VertexDivisor& dv = out.curve_parts[static_cast<std::size_t>(i - 1)];
        dv.at_root1 = w;
        dv.at_root2 = w;
        dv.at_zero = i == 1 ? w : 0;
        dv.at_infinity = i == fam.g ? w : 0;
    }
    long total = out.total_degree();
    long expected = static_cast<long>(fam.g) * (2 * k - fam.g + 1) * (2 * k - fam.g + 1);
    if (total != expected)
        throw internal_error("specialize_family_inflection: total degree mismatch");
    if (!out.respects_marked_points(skel))
        throw internal_error("specialize_family_inflection: marked-point constraints violated");
    return out;
}

} // namespace hyperflex
