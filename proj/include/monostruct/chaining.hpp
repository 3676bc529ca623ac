#pragma once

#include "monostruct/order.hpp"
#include "monostruct/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mono {

/// Two tuples with the same order pattern on which `symbol` disagrees.
struct ChainWitness {
    std::string symbol;
    Tuple member;
    Tuple non_member;
};

struct ChainCheck {
    bool chains = false;
    std::optional<ChainWitness> witness;

    explicit operator bool() const noexcept { return chains; }
};

/// Whether x chains y: membership of every tuple in every relation depends
/// only on the tuple's order pattern under x.
///
/// For relational structures this is the same as asking that every
/// order-preserving partial injection be a partial automorphism. If p is
/// order preserving then t and p(t) share a pattern, so pattern constancy
/// gives R(t) <-> R(p(t)); conversely two tuples with one pattern are
/// related by the order-preserving injection matching their entries, so a
/// disagreement between them is a partial map that is not a partial
/// automorphism.
ChainCheck chains(const Structure& y, const LinearOrder& x);

/// L_Y for a finite structure: every order of the domain that chains it,
/// sorted lexicographically by ascending enumeration.
struct ChainSet {
    int structure_size = 0;
    std::vector<LinearOrder> orders;

    bool contains(const LinearOrder& x) const;
    std::size_t size() const noexcept { return orders.size(); }
    bool empty() const noexcept { return orders.empty(); }
};

inline constexpr int kDefaultChainCap = 9;

/// Prefix-extension search: elements are placed left to right and a branch is
/// abandoned as soon as some pattern class among the tuples it fixes is
/// mixed. A mixed class stays mixed under every extension, so no chaining
/// order is lost. `threads` > 1 splits the search by first element; the
/// result is identical for every thread count.
ChainSet enumerate_chaining_orders(const Structure& y, int max_size = kDefaultChainCap, int threads = 1);

/// Reference implementation: filter all n! orders with chains().
ChainSet naive_chaining_orders(const Structure& y);

enum class Trichotomy { Constant, CutReversal, Kernel, NoneOfThese };

std::string to_string(Trichotomy t);

struct TrichotomyReport {
    Trichotomy kind = Trichotomy::NoneOfThese;
    std::size_t chain_count = 0;
    /// Generating member (lexicographically least that works); absent for Constant and NoneOfThese.
    std::optional<LinearOrder> witness;
    /// Kernel blocks of the witness, witness = prefix + middle + suffix (Kernel only).
    std::vector<Element> prefix;
    std::vector<Element> middle;
    std::vector<Element> suffix;
    /// Kernel with an empty middle block.
    bool degenerate = false;
};

/// Orders F+I and I*+F* over all cuts x = I+F.
std::vector<LinearOrder> cut_reversal_closure(const LinearOrder& x);

/// Orders (any order of the first k) + middle + (any order of the last h),
/// together with their reverses.
std::vector<LinearOrder> kernel_family(const LinearOrder& x, int k, int h);

/// Classifies a nonempty chain set as all orders, a cut-reversal closure, a
/// kernel family (blocks of size 1 are reported as empty), or none of these.
TrichotomyReport classify_chain_set(const ChainSet& chain_set);
/// As above, checking that the chain set belongs to `y`.
TrichotomyReport classify_chain_set(const Structure& y, const ChainSet& chain_set);

/// Pullback of x along f: Z -> Y, i.e. z1 < z2 iff f(z1) <_x f(z2).
LinearOrder transport_order(const Bijection& f, const LinearOrder& x);

}  // namespace mono
