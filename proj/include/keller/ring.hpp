#pragma once

/*
 * ring.hpp
 * --------
 * A Ring is just the ordered list of variable names of a polynomial ring
 * over Q(i).  It is shared by handle, compared by content, and two
 * polynomials may be combined only when their rings agree.
 */

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace keller {

struct ring_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Ring {
  public:
    Ring() : names_(std::make_shared<const std::vector<std::string>>()) {}

    explicit Ring(std::vector<std::string> names) {
        for (std::size_t a = 0; a < names.size(); ++a)
            for (std::size_t b = a + 1; b < names.size(); ++b)
                if (names[a] == names[b])
                    throw std::invalid_argument("duplicate variable name '" + names[a] + "'");
        names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
    }

    std::size_t size() const { return names_->size(); }
    const std::string& name(std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_->size(); ++i)
            if ((*names_)[i] == name) return i;
        return std::nullopt;
    }
    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    /// New ring with extra variables appended; collisions are an error.
    Ring extended(const std::vector<std::string>& extra) const {
        std::vector<std::string> all = *names_;
        for (const auto& n : extra) {
            if (contains(n))
                throw std::invalid_argument("variable name '" + n + "' already present in ring");
            all.push_back(n);
        }
        return Ring(std::move(all));
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

  private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

inline void require_same_ring(const Ring& a, const Ring& b) {
    if (a != b) throw ring_mismatch("polynomials live in different rings");
}

}  // namespace keller
