#pragma once

/*
 * io.hpp
 * ------
 * The .pmap text format:
 *
 *     # comment lines and blank lines are ignored
 *     name <free text>          (optional)
 *     list                      (optional: raw polynomial list, not a square map)
 *     vars x y
 *     eq x + y^2
 *     eq y
 *
 * Expressions use +, -, *, ^ and parentheses; coefficients are integers,
 * fractions a/b and the imaginary unit i (division only by nonzero
 * constants).  Implicit multiplication is not allowed.  Variable names are
 * ASCII identifiers; "i" is reserved.  print_pmap emits the canonical form
 * (descending graded-lex terms, normalized coefficients) and parse o print
 * is the identity.
 */

#include <optional>
#include <string>
#include <string_view>

#include "keller/polymap.hpp"

namespace keller {

struct ParseError : std::runtime_error {
    std::size_t line;
    std::size_t column;
    ParseError(const std::string& msg, std::size_t line_, std::size_t column_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                             ": " + msg),
          line(line_),
          column(column_) {}
};

struct PmapDocument {
    std::optional<std::string> name;
    bool raw_list = false;
    Ring ring;
    std::vector<Poly> polynomials;

    PolyMap as_map() const {
        if (raw_list) throw std::invalid_argument("document is a raw polynomial list, not a map");
        return PolyMap(ring, polynomials);
    }
    static PmapDocument of_map(const PolyMap& f, std::optional<std::string> name = std::nullopt) {
        return PmapDocument{std::move(name), false, f.ring(), f.components()};
    }

    friend bool operator==(const PmapDocument& a, const PmapDocument& b) {
        return a.name == b.name && a.raw_list == b.raw_list && a.ring == b.ring &&
               a.polynomials == b.polynomials;
    }
};

PmapDocument parse_pmap(std::string_view text);
std::string print_pmap(const PmapDocument& doc);

/// Canonical polynomial text (descending graded-lex order).
std::string to_string(const Poly& p);

/// Parse a single polynomial expression over the given ring (used for
/// points and test fixtures as well as by the document parser).
Poly parse_polynomial(std::string_view expr, const Ring& ring);

}  // namespace keller
