#pragma once

/*
 * polymap.hpp
 * -----------
 * Polynomial endomorphisms of affine m-space and matrices of polynomials:
 * Jacobians, exact determinants, composition, degrees, the Keller test,
 * stable extension by identity coordinates, and realification.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "keller/polynomial.hpp"

namespace keller {

/// A square tuple: m polynomials in m variables.
class PolyMap {
  public:
    PolyMap(Ring ring, std::vector<Poly> components) : ring_(std::move(ring)), comps_(std::move(components)) {
        if (comps_.size() != ring_.size())
            throw std::invalid_argument("PolyMap must be square: one component per variable");
        for (const auto& c : comps_) require_same_ring(ring_, c.ring());
    }

    static PolyMap identity(const Ring& ring);

    const Ring& ring() const { return ring_; }
    std::size_t dimension() const { return comps_.size(); }
    const std::vector<Poly>& components() const { return comps_; }
    const Poly& component(std::size_t i) const { return comps_[i]; }

    friend bool operator==(const PolyMap& a, const PolyMap& b) {
        return a.ring_ == b.ring_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const PolyMap& a, const PolyMap& b) { return !(a == b); }

  private:
    Ring ring_;
    std::vector<Poly> comps_;
};

class PolyMatrix {
  public:
    PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ring_)) {}

    static PolyMatrix identity(const Ring& ring, std::size_t n);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Poly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  private:
    Ring ring_;
    std::size_t rows_, cols_;
    std::vector<Poly> entries_;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
Poly trace(const PolyMatrix& m);

/// Entry (i,j) = dF_i/dX_j.
PolyMatrix jacobian(const PolyMap& f);

/// Exact determinant over the polynomial ring: cofactor expansion up to
/// size 3, fraction-free Bareiss elimination (with row pivoting) above.
Poly determinant(const PolyMatrix& m);

/// Substitute every entry.
PolyMatrix substitute(const PolyMatrix& m, const std::vector<Poly>& images);

/// (f o g)_i = f_i(g_1, ..., g_m); the result lives in g's ring.
PolyMap compose(const PolyMap& f, const PolyMap& g);

/// Maximum total degree of the defining polynomials (0 for constant maps).
std::uint64_t p_degree(const PolyMap& f);

struct KellerResult {
    bool keller;
    GaussianRational constant;  // det Jf, when constant and nonzero
    Poly witness;               // det Jf, when it is not a nonzero constant
};

KellerResult is_keller(const PolyMap& f);

/// f x Id on extra additional variables appended after f's own.  Generated
/// names are w1, w2, ...; a collision with an existing name is an error.
PolyMap stable_extend(const PolyMap& f, std::size_t extra);
PolyMap stable_extend(const PolyMap& f, const std::vector<std::string>& names);
std::vector<std::string> extension_names(std::size_t count);

/// Split each complex coordinate x into real coordinates x_re, x_im and
/// each component into its real and imaginary parts:
/// (Re f_1, Im f_1, ..., Re f_m, Im f_m) in 2m real variables.
PolyMap realify(const PolyMap& f);

std::vector<GaussianRational> evaluate_map(const PolyMap& f, const std::vector<GaussianRational>& point);

/// Coefficient matrix of the degree-1 part: L[i][j] = coefficient of X_j in f_i.
std::vector<std::vector<GaussianRational>> linear_part_matrix(const PolyMap& f);

/// Exact determinant of a scalar matrix (Gaussian elimination over Q(i)).
GaussianRational scalar_determinant(std::vector<std::vector<GaussianRational>> m);

/// Exact inverse of a scalar matrix; throws std::invalid_argument if singular.
std::vector<std::vector<GaussianRational>> scalar_inverse(std::vector<std::vector<GaussianRational>> m);

/// Rank of a scalar matrix over Q(i).
std::size_t scalar_rank(std::vector<std::vector<GaussianRational>> m);

}  // namespace keller
