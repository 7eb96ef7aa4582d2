#ifndef HYPERFLEX_WRONSKIAN_HPP
#define HYPERFLEX_WRONSKIAN_HPP

#include "hyperflex/curve.hpp"
#include "hyperflex/resultant.hpp"

namespace hyperflex {

/// Numerator recurrence for derivatives on the curve: with
/// (x^o y)^(j) = (N_j(x) / (2f)^j) y, the next numerator is
/// N_{j+1} = 2 f N' + (1 - 2j) f' N.
template <class K>
Poly<K> wronskian_numer_step(const Poly<K>& f, const Poly<K>& fp, const Poly<K>& n, long j) {
    K two(2);
    K c(static_cast<int>(1 - 2 * j));
    return f * n.derivative() * two + fp * n * c;
}

/// Q(x) such that det((x^{o_i} y)^(j))_{rows i, cols j=k+1..k+m} = Q(x) y^m,
/// m = offsets.size(). This is the y-block of the Wronskian of the basis
/// {x^0..x^k} u {x^{o_i} y} after the block-triangular reduction (derivatives
/// of order > k kill every polynomial of degree <= k).
template <class K>
RatFunc<K> wronskian_block_q(const CurveEq<K>& curve, int k, const std::vector<long>& offsets) {
    const std::size_t m = offsets.size();
    if (m == 0) return RatFunc<K>(1);
    const Poly<K>& f = curve.f;
    Poly<K> fp = f.derivative();
    const long col_lo = k + 1;
    const long col_hi = k + static_cast<long>(m); // inclusive

    std::vector<std::vector<Poly<K>>> mat(m);
    for (std::size_t i = 0; i < m; ++i) {
        Poly<K> n = Poly<K>::monomial(K(1), static_cast<std::size_t>(offsets[i]));
        for (long j = 0; j < col_lo; ++j) n = wronskian_numer_step(f, fp, n, j);
        for (long j = col_lo; j <= col_hi; ++j) {
            mat[i].push_back(n);
            if (j < col_hi) n = wronskian_numer_step(f, fp, n, j);
        }
    }
    Poly<K> det = bareiss_determinant(std::move(mat));
    // column j carried denominator (2f)^j
    long pow_sum = 0;
    for (long j = col_lo; j <= col_hi; ++j) pow_sum += j;
    K two(2);
    Poly<K> den = (f * two).pow(static_cast<unsigned>(pow_sum));
    return RatFunc<K>(std::move(det), std::move(den));
}

/// Determinant over the function field K(X) by Gaussian elimination.
template <class K>
FFE<K> ff_determinant(std::vector<std::vector<FFE<K>>> m, const CurveEq<K>& curve) {
    std::size_t n = m.size();
    FFE<K> det = FFE<K>::one(curve);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return FFE<K>::zero(curve);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det = det * m[k][k];
        FFE<K> inv = m[k][k].inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            FFE<K> factor = m[i][k] * inv;
            for (std::size_t j = k; j < n; ++j)
                m[i][j] = m[i][j] - factor * m[k][j];
        }
    }
    return det;
}

/// The full Wronskian det(e_i^(j)) of an arbitrary basis, as a function-field
/// element. Exercised by the property suites against the block reduction.
template <class K>
FFE<K> full_wronskian(const CurveEq<K>& curve, const std::vector<FFE<K>>& basis) {
    std::size_t n = basis.size();
    std::vector<std::vector<FFE<K>>> mat(n);
    for (std::size_t i = 0; i < n; ++i) {
        FFE<K> cur = basis[i];
        for (std::size_t j = 0; j < n; ++j) {
            mat[i].push_back(cur);
            if (j + 1 < n) cur = cur.derivative();
        }
    }
    return ff_determinant(std::move(mat), curve);
}

} // namespace hyperflex

#endif
