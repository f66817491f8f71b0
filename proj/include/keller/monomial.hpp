#pragma once

/*
 * monomial.hpp
 * ------------
 * Exponent vectors with graded-lexicographic ordering.  Exponents are
 * machine-width; overflow on exponent arithmetic is a hard error rather
 * than silent wraparound.
 */

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace keller {

class Monomial {
  public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t var, std::uint32_t e = 1) {
        Monomial m(nvars);
        m.exps_[var] = e;
        return m;
    }

    std::size_t size() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto e : exps_) d += e;
        return d;
    }

    bool is_constant() const {
        for (auto e : exps_)
            if (e) return false;
        return true;
    }

    Monomial times(const Monomial& o) const {
        Monomial r(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            std::uint64_t s = std::uint64_t(exps_[i]) + o.exps_[i];
            if (s > std::numeric_limits<std::uint32_t>::max())
                throw std::overflow_error("monomial exponent overflow");
            r.exps_[i] = static_cast<std::uint32_t>(s);
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    /// o / *this, valid only when divides(o).
    Monomial quotient_of(const Monomial& o) const {
        Monomial r(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = o.exps_[i] - exps_[i];
        return r;
    }

    Monomial with_exponent(std::size_t var, std::uint32_t e) const {
        Monomial r = *this;
        r.exps_[var] = e;
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  private:
    std::vector<std::uint32_t> exps_;
};

/// Graded-lex, highest first: compare total degree, then lexicographically
/// with earlier variables dominating.  Iterating a term map in this order
/// yields x^2, x*y, y^2, x, y, 1.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint64_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

}  // namespace keller
