#include "keller/extension.hpp"

namespace keller {

std::string ExtensionScalar::str() const {
    std::string out;
    bool first = true;
    for (std::uint32_t j = 0; j < degree_; ++j) {
        if (coords_[j].is_zero()) continue;
        if (!first) out += " + ";
        out += coords_[j].str();
        if (j >= 1) out += "*L" + (j > 1 ? "^" + std::to_string(j) : std::string());
        first = false;
    }
    if (first) out = "0";
    return out + "  (mod L^" + std::to_string(degree_) + " = " + constant_.str() + ")";
}

}  // namespace keller
