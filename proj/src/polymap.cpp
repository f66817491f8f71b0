#include "keller/polymap.hpp"

namespace keller {

PolyMap PolyMap::identity(const Ring& ring) {
    std::vector<Poly> comps;
    comps.reserve(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i)
        comps.push_back(Poly::variable(ring, i, GaussianRational(1)));
    return PolyMap(ring, std::move(comps));
}

PolyMatrix PolyMatrix::identity(const Ring& ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(ring, GaussianRational(1));
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    PolyMatrix r(a.ring(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference dimension mismatch");
    PolyMatrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) -= b.at(i, j);
    return r;
}

Poly trace(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("trace of non-square matrix");
    Poly t(m.ring());
    for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

PolyMatrix jacobian(const PolyMap& f) {
    const std::size_t m = f.dimension();
    PolyMatrix j(f.ring(), m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t v = 0; v < m; ++v) j.at(i, v) = derivative(f.component(i), v);
    return j;
}

namespace {

Poly det_cofactor(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Poly::constant(m.ring(), GaussianRational(1));
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    // Expansion along the first row.
    Poly det(m.ring());
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor(m.ring(), n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Poly term = m.at(0, j) * det_cofactor(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

// Fraction-free elimination; every division is exact over the integral
// domain Q(i)[X].
Poly det_bareiss(PolyMatrix m) {
    const std::size_t n = m.rows();
    bool negate = false;
    Poly prev = Poly::constant(m.ring(), GaussianRational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m.at(r, k).is_zero()) ++r;
            if (r == n) return Poly(m.ring());  // singular
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(r, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = exact_divide(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = Poly(m.ring());
        }
        prev = m.at(k, k);
    }
    Poly det = m.at(n - 1, n - 1);
    return negate ? -det : det;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() <= 3) return det_cofactor(m);
    return det_bareiss(m);
}

PolyMatrix substitute(const PolyMatrix& m, const std::vector<Poly>& images) {
    Ring target = images.empty() ? m.ring() : images.front().ring();
    PolyMatrix r(target, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = substitute(m.at(i, j), images);
    return r;
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
    if (f.dimension() != g.dimension())
        throw std::invalid_argument("compose: dimension mismatch");
    std::vector<Poly> comps;
    comps.reserve(f.dimension());
    for (const auto& fi : f.components()) comps.push_back(substitute(fi, g.components()));
    return PolyMap(g.ring(), std::move(comps));
}

std::uint64_t p_degree(const PolyMap& f) {
    std::uint64_t d = 0;
    for (const auto& c : f.components()) d = std::max(d, c.total_degree());
    return d;
}

KellerResult is_keller(const PolyMap& f) {
    Poly det = determinant(jacobian(f));
    if (det.is_constant() && !det.is_zero())
        return {true, det.constant_term(), Poly(f.ring())};
    return {false, GaussianRational(0), det};
}

std::vector<std::string> extension_names(std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) names.push_back("w" + std::to_string(i));
    return names;
}

PolyMap stable_extend(const PolyMap& f, const std::vector<std::string>& names) {
    Ring big = f.ring().extended(names);
    std::vector<Poly> comps;
    comps.reserve(f.dimension() + names.size());
    for (const auto& c : f.components()) comps.push_back(embed_in(c, big));
    for (std::size_t i = 0; i < names.size(); ++i)
        comps.push_back(Poly::variable(big, f.dimension() + i, GaussianRational(1)));
    return PolyMap(big, std::move(comps));
}

PolyMap stable_extend(const PolyMap& f, std::size_t extra) {
    return stable_extend(f, extension_names(extra));
}

PolyMap realify(const PolyMap& f) {
    const std::size_t m = f.dimension();
    std::vector<std::string> names;
    names.reserve(2 * m);
    for (std::size_t j = 0; j < m; ++j) {
        names.push_back(f.ring().name(j) + "_re");
        names.push_back(f.ring().name(j) + "_im");
    }
    Ring real_ring(std::move(names));

    std::vector<Poly> images;
    images.reserve(m);
    const GaussianRational i_unit = GaussianRational::imaginary_unit();
    for (std::size_t j = 0; j < m; ++j) {
        Poly img = Poly::variable(real_ring, 2 * j, GaussianRational(1));
        img += Poly::variable(real_ring, 2 * j + 1, i_unit);
        images.push_back(std::move(img));
    }

    std::vector<Poly> comps;
    comps.reserve(2 * m);
    for (std::size_t idx = 0; idx < m; ++idx) {
        Poly q = substitute(f.component(idx), images);
        comps.push_back(map_coefficients<GaussianRational>(
            q, [](const GaussianRational& c) { return GaussianRational(c.real()); }));
        comps.push_back(map_coefficients<GaussianRational>(
            q, [](const GaussianRational& c) { return GaussianRational(c.imag()); }));
    }
    return PolyMap(real_ring, std::move(comps));
}

std::vector<GaussianRational> evaluate_map(const PolyMap& f, const std::vector<GaussianRational>& point) {
    std::vector<GaussianRational> out;
    out.reserve(f.dimension());
    for (const auto& c : f.components()) out.push_back(evaluate(c, point));
    return out;
}

std::vector<std::vector<GaussianRational>> linear_part_matrix(const PolyMap& f) {
    const std::size_t m = f.dimension();
    std::vector<std::vector<GaussianRational>> l(m, std::vector<GaussianRational>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            l[i][j] = f.component(i).coefficient(Monomial::variable(m, j));
    return l;
}

GaussianRational scalar_determinant(std::vector<std::vector<GaussianRational>> m) {
    const std::size_t n = m.size();
    GaussianRational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return GaussianRational(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        GaussianRational inv = m[k][k].inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            GaussianRational factor = m[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
        }
    }
    return det;
}

std::vector<std::vector<GaussianRational>> scalar_inverse(std::vector<std::vector<GaussianRational>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<GaussianRational>> inv(n, std::vector<GaussianRational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = GaussianRational(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) throw std::invalid_argument("matrix is singular");
        if (piv != k) {
            std::swap(m[piv], m[k]);
            std::swap(inv[piv], inv[k]);
        }
        GaussianRational d = m[k][k].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m[k][j] *= d;
            inv[k][j] *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k].is_zero()) continue;
            GaussianRational factor = m[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= factor * m[k][j];
                inv[i][j] -= factor * inv[k][j];
            }
        }
    }
    return inv;
}

std::size_t scalar_rank(std::vector<std::vector<GaussianRational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        GaussianRational inv = m[rank][c].inverse();
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            GaussianRational factor = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace keller
