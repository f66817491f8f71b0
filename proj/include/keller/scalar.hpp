#pragma once

/*
 * scalar.hpp
 * ----------
 * Exact coefficient arithmetic: GaussianRational is the field Q(i) of
 * complex numbers with rational real and imaginary parts.  Rationals are
 * GMP-backed, always in lowest terms with positive denominator.
 *
 * Every identity in this library is checked over Q(i) exactly; floating
 * point appears only in the numeric fixed-point search (numeric.hpp).
 */

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace keller {

/// Invariant breach inside the library itself; callers map this to a
/// distinct exit code because it always indicates a bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// An element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
  public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(mpq_class re) : re_(std::move(re)), im_(0) { canonical(); }
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) { canonical(); }

    static GaussianRational fraction(long num, long den) {
        if (den == 0) throw std::domain_error("fraction with zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return GaussianRational(q);
    }
    static GaussianRational imaginary_unit() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
    GaussianRational conjugate() const { return GaussianRational(re_, -im_); }

    /// |z|^2 = re^2 + im^2, a rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(i)");
        mpq_class n = norm();
        return GaussianRational(re_ / n, -im_ / n);
    }

    /// Multiply by an integer (exponents, Euler factors k, traces of E, ...).
    GaussianRational scaled_by(std::int64_t n) const {
        mpq_class f(static_cast<long>(n));
        return GaussianRational(re_ * f, im_ * f);
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// Canonical text form: "0", "3", "-1/2", "i", "-i", "3*i", "1/2*i",
    /// "(1+i)", "(-1/2-3/4*i)".  Parseable by the expression grammar.
    std::string str() const;

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  private:
    void canonical() {
        re_.canonicalize();
        im_.canonicalize();
    }

    mpq_class re_;
    mpq_class im_;
};

inline GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
inline GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
inline GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
inline GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

std::string rational_str(const mpq_class& q);

}  // namespace keller
