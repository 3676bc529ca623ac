#pragma once

#include "monostruct/error.hpp"
#include "monostruct/formula.hpp"
#include "monostruct/order.hpp"
#include "monostruct/structure.hpp"

#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace mono {

/// Equality-and-order type of a tuple under a linear order: ranks[j] is the
/// number of distinct tuple entries strictly below entry j.
struct Pattern {
    std::vector<int> ranks;

    std::string to_string() const;
    friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

Pattern tuple_pattern(std::span<const Element> t, const LinearOrder& x);

/// Dense id of a pattern of arity a, in [0, a^a). Used for per-pattern tables.
std::size_t pattern_id(std::span<const int> ranks);

/// Every pattern of the given arity (ordered set partitions), sorted.
std::vector<Pattern> all_patterns(int arity);

/// Quantifier-free order formula true exactly of the tuples with this pattern:
/// for every index pair j < k, one of v_j < v_k, v_j = v_k, v_k < v_j.
NodePtr pattern_formula(const Pattern& p, int order_symbol = 0);

/// An order-preserving partial injection sending tuple a onto tuple b, as
/// (from, to) pairs sorted by `from`, or nullopt if the tuples' patterns differ.
std::optional<std::vector<std::pair<Element, Element>>> order_preserving_map(std::span<const Element> a,
                                                                             std::span<const Element> b,
                                                                             const LinearOrder& x);

struct SymbolDefinition {
    std::string name;
    int arity = 0;
    std::vector<Pattern> accepted;  // sorted
    /// Membership depends only on which entries are equal (true of every order).
    bool constant = false;
    Formula formula;
};

struct QFDefinition {
    LinearOrder order;
    Signature signature;
    std::vector<SymbolDefinition> symbols;

    OrderDefinitions definitions() const;
};

/// Raised when a pattern class contains both a member and a non-member
/// tuple of some relation, i.e. the order does not chain the structure.
class MixedPatternError : public DomainError {
public:
    MixedPatternError(std::string symbol, Tuple member, Tuple non_member);

    const std::string& symbol() const noexcept { return symbol_; }
    const Tuple& member() const noexcept { return member_; }
    const Tuple& non_member() const noexcept { return non_member_; }

private:
    std::string symbol_;
    Tuple member_;
    Tuple non_member_;
};

/// True iff membership in relation `symbol` depends only on the equality type of tuples.
bool is_equality_invariant(const Structure& y, std::size_t symbol);

/// Reads off, per symbol, the patterns of member tuples and renders them as a
/// disjunction of pattern_formula. Throws MixedPatternError if x does not chain y.
QFDefinition synthesize_definition(const Structure& y, const LinearOrder& x);

/// The structure on x's domain whose relation i is {t : x |= defs.formulas[i][t]}.
Structure derive_structure(const LinearOrder& x, const OrderDefinitions& defs);

/// Definitions file: one `Name/arity: formula` per line, `#` comments.
OrderDefinitions parse_definitions(std::string_view text);
std::string to_text(const OrderDefinitions& defs);

}  // namespace mono
