#ifndef HYPERFLEX_RESULTANT_HPP
#define HYPERFLEX_RESULTANT_HPP

#include "hyperflex/poly.hpp"

namespace hyperflex {

/// Fraction-free (Bareiss) determinant over an integral domain R; the only
/// divisions performed are exact.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> mat) {
    std::size_t size = mat.size();
    if (size == 0) return R(1);
    R prev = R(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (mat[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < size && mat[piv][k].is_zero()) ++piv;
            if (piv == size) return R(0);
            std::swap(mat[k], mat[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j)
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
            mat[i][k] = R(0);
        }
        prev = mat[k][k];
    }
    R det = mat[size - 1][size - 1];
    return sign < 0 ? R(0) - det : det;
}

/// Resultant in the outer variable of two polynomials with coefficients in an
/// integral domain R, via the Sylvester matrix.
template <class R>
R sylvester_resultant(const Poly<R>& a, const Poly<R>& b) {
    if (a.is_zero() || b.is_zero())
        throw input_error("resultant: zero polynomial");
    long m = a.degree(), n = b.degree();
    if (m == 0 && n == 0)
        throw input_error("resultant: both inputs constant in the eliminated variable");
    if (m == 0) return a.coeff(0).pow(static_cast<unsigned>(n));
    if (n == 0) return b.coeff(0).pow(static_cast<unsigned>(m));

    std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<R>> mat(size, std::vector<R>(size, R(0)));
    for (long row = 0; row < n; ++row)
        for (long j = 0; j <= m; ++j)
            mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] =
                a.coeff(static_cast<std::size_t>(m - j));
    for (long row = 0; row < m; ++row)
        for (long j = 0; j <= n; ++j)
            mat[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + j)] =
                b.coeff(static_cast<std::size_t>(n - j));
    return bareiss_determinant(std::move(mat));
}

/// Bivariate polynomial in (x, y): outer variable y, inner variable x.
using XYPoly = Poly<Poly<Rat>>;

inline XYPoly xy_transpose(const XYPoly& p) {
    long dx = 0;
    for (long i = 0; i <= p.degree(); ++i)
        dx = std::max(dx, p.coeff(static_cast<std::size_t>(i)).degree());
    std::vector<Poly<Rat>> out;
    for (long i = 0; i <= dx; ++i) {
        std::vector<Rat> row;
        for (long j = 0; j <= p.degree(); ++j)
            row.push_back(p.coeff(static_cast<std::size_t>(j)).coeff(static_cast<std::size_t>(i)));
        out.emplace_back(std::move(row));
    }
    return XYPoly(std::move(out));
}

/// Eliminates y, producing a polynomial in x.
inline QPoly resultant_eliminate_y(const XYPoly& p, const XYPoly& q) {
    return sylvester_resultant<Poly<Rat>>(p, q);
}

/// Eliminates x, producing a polynomial in y.
inline QPoly resultant_eliminate_x(const XYPoly& p, const XYPoly& q) {
    return sylvester_resultant<Poly<Rat>>(xy_transpose(p), xy_transpose(q));
}

} // namespace hyperflex

#endif
