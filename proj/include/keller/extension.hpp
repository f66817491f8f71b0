#pragma once

/*
 * extension.hpp
 * -------------
 * ExtensionScalar: an element of the quotient ring Q(i)[L]/(L^d - c),
 * represented by its d coordinates a_0 + a_1*L + ... + a_{d-1}*L^{d-1}.
 *
 * Only this single-relation quotient is supported; it is exactly what the
 * radial eigenvalue identity for two-form maps needs (L^{k2-k1} = k1/k2).
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "keller/scalar.hpp"

namespace keller {

class ExtensionScalar {
  public:
    ExtensionScalar(std::uint32_t degree, GaussianRational constant)
        : degree_(degree), constant_(std::move(constant)), coords_(degree) {
        if (degree_ == 0) throw std::invalid_argument("extension modulus degree must be positive");
    }

    static ExtensionScalar zero(std::uint32_t d, const GaussianRational& c) { return ExtensionScalar(d, c); }
    static ExtensionScalar one(std::uint32_t d, const GaussianRational& c) {
        return embed(d, c, GaussianRational(1));
    }
    /// The embedding of Q(i); a ring homomorphism for every modulus.
    static ExtensionScalar embed(std::uint32_t d, const GaussianRational& c, const GaussianRational& v) {
        ExtensionScalar s(d, c);
        s.coords_[0] = v;
        return s;
    }
    /// The generator L itself (reduced to c when d = 1, since L^1 = c).
    static ExtensionScalar generator(std::uint32_t d, const GaussianRational& c) {
        ExtensionScalar s(d, c);
        if (d == 1)
            s.coords_[0] = c;
        else
            s.coords_[1] = GaussianRational(1);
        return s;
    }

    std::uint32_t modulus_degree() const { return degree_; }
    const GaussianRational& modulus_constant() const { return constant_; }
    const std::vector<GaussianRational>& coords() const { return coords_; }

    bool same_modulus(const ExtensionScalar& o) const {
        return degree_ == o.degree_ && constant_ == o.constant_;
    }

    bool is_zero() const {
        for (const auto& a : coords_)
            if (!a.is_zero()) return false;
        return true;
    }

    ExtensionScalar operator-() const {
        ExtensionScalar r(degree_, constant_);
        for (std::uint32_t j = 0; j < degree_; ++j) r.coords_[j] = -coords_[j];
        return r;
    }

    ExtensionScalar& operator+=(const ExtensionScalar& o) {
        require_same(o);
        for (std::uint32_t j = 0; j < degree_; ++j) coords_[j] += o.coords_[j];
        return *this;
    }
    ExtensionScalar& operator-=(const ExtensionScalar& o) {
        require_same(o);
        for (std::uint32_t j = 0; j < degree_; ++j) coords_[j] -= o.coords_[j];
        return *this;
    }
    ExtensionScalar& operator*=(const ExtensionScalar& o) {
        require_same(o);
        // Convolution up to degree 2d-2, then one reduction pass L^d = c.
        std::vector<GaussianRational> prod(2 * degree_ - 1);
        for (std::uint32_t a = 0; a < degree_; ++a) {
            if (coords_[a].is_zero()) continue;
            for (std::uint32_t b = 0; b < degree_; ++b)
                prod[a + b] += coords_[a] * o.coords_[b];
        }
        for (std::uint32_t k = 2 * degree_ - 2; k >= degree_ && k < prod.size(); --k) {
            prod[k - degree_] += constant_ * prod[k];
            if (k == degree_) break;
        }
        prod.resize(degree_);
        coords_ = std::move(prod);
        return *this;
    }

    ExtensionScalar scaled_by(std::int64_t n) const {
        ExtensionScalar r(degree_, constant_);
        for (std::uint32_t j = 0; j < degree_; ++j) r.coords_[j] = coords_[j].scaled_by(n);
        return r;
    }

    ExtensionScalar pow(std::uint64_t e) const {
        ExtensionScalar base = *this;
        ExtensionScalar acc = one(degree_, constant_);
        while (e > 0) {
            if (e & 1) acc *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return acc;
    }

    std::string str() const;

    friend bool operator==(const ExtensionScalar& a, const ExtensionScalar& b) {
        return a.same_modulus(b) && a.coords_ == b.coords_;
    }
    friend bool operator!=(const ExtensionScalar& a, const ExtensionScalar& b) { return !(a == b); }

  private:
    void require_same(const ExtensionScalar& o) const {
        if (!same_modulus(o)) throw std::invalid_argument("extension scalar modulus mismatch");
    }

    std::uint32_t degree_;
    GaussianRational constant_;
    std::vector<GaussianRational> coords_;
};

inline ExtensionScalar operator+(ExtensionScalar a, const ExtensionScalar& b) { return a += b; }
inline ExtensionScalar operator-(ExtensionScalar a, const ExtensionScalar& b) { return a -= b; }
inline ExtensionScalar operator*(ExtensionScalar a, const ExtensionScalar& b) { return a *= b; }

}  // namespace keller
