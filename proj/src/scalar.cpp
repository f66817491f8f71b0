#include "keller/scalar.hpp"

namespace keller {

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

// |im| with the "*i" suffix, collapsing 1*i to i.
std::string imag_magnitude_str(const mpq_class& im_abs) {
    if (im_abs == 1) return "i";
    return rational_str(im_abs) + "*i";
}

}  // namespace

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    if (is_real()) return rational_str(re_);
    if (sgn(re_) == 0) {
        if (sgn(im_) < 0) return "-" + imag_magnitude_str(mpq_class(-im_));
        return imag_magnitude_str(im_);
    }
    // Mixed: parenthesized so it always reads as one coefficient.
    mpq_class ia = abs(im_);
    std::string sign = sgn(im_) < 0 ? "-" : "+";
    return "(" + rational_str(re_) + sign + imag_magnitude_str(ia) + ")";
}

}  // namespace keller
