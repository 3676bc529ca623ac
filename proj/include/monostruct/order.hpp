#pragma once

#include "monostruct/structure.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace mono {

/// A linear order on {0..n-1}, stored as the ascending enumeration of the domain.
class LinearOrder {
public:
    LinearOrder() = default;
    /// Throws DomainError unless `ascending` is a permutation of {0..n-1}.
    explicit LinearOrder(std::vector<Element> ascending);

    static LinearOrder natural(int n);

    int size() const noexcept { return static_cast<int>(ascending_.size()); }
    const std::vector<Element>& ascending() const noexcept { return ascending_; }
    /// Position of x in the order (0 = least).
    int rank(Element x) const { return position_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& positions() const noexcept { return position_; }
    bool less(Element a, Element b) const { return rank(a) < rank(b); }

    LinearOrder reversed() const;

    /// `0,1,2` form.
    std::string to_string() const;

    friend bool operator==(const LinearOrder& a, const LinearOrder& b) { return a.ascending_ == b.ascending_; }
    friend auto operator<=>(const LinearOrder& a, const LinearOrder& b) { return a.ascending_ <=> b.ascending_; }

private:
    std::vector<Element> ascending_;
    std::vector<int> position_;
};

/// Parses a comma separated ascending enumeration such as `2,0,1`.
LinearOrder parse_order(std::string_view text);

/// The structure <X, <> over Signature::order().
Structure order_structure(const LinearOrder& x);

}  // namespace mono
