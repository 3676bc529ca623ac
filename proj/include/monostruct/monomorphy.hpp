#pragma once

#include "monostruct/structure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mono {

/// Two k-subsets (ascending) inducing non-isomorphic substructures.
using SubsetPair = std::pair<std::vector<Element>, std::vector<Element>>;

struct KMonomorphy {
    bool monomorphic = false;
    /// Lexicographically least offending pair; present iff !monomorphic.
    std::optional<SubsetPair> witness;
};

/// All k-subsets induce isomorphic substructures. Each subset is compared with
/// the first one (isomorphism is transitive). Requires 1 <= k <= size.
KMonomorphy is_k_monomorphic(const Structure& y, int k);

struct MonomorphyLevel {
    int k = 0;
    bool monomorphic = false;
    std::size_t class_count = 0;
    std::optional<SubsetPair> witness;
};

struct MonomorphyReport {
    bool monomorphic = true;
    std::vector<MonomorphyLevel> levels;  // k = 1..size
};

MonomorphyReport is_monomorphic(const Structure& y);

struct ReductVerdict {
    std::vector<std::string> symbols;
    bool monomorphic = false;
};

struct ReductCheck {
    bool monomorphic = false;  // the full structure
    std::vector<ReductVerdict> reducts;  // every nonempty sub-signature, by bitmask order
    /// No contradiction: a monomorphic structure has only monomorphic reducts.
    bool agreement = true;
    /// Smallest k and witness at which the full structure fails, if it does.
    std::optional<MonomorphyLevel> failure;
};

inline constexpr int kDefaultReductSymbolCap = 4;
ReductCheck check_reducts(const Structure& y, int max_symbols = kDefaultReductSymbolCap);

struct FrasnayOptions {
    int arity = 2;
    int max_size = 5;
    /// Used only when exhaustive enumeration is infeasible.
    std::uint64_t seed = 1;
    std::size_t samples = 20000;
    int threads = 1;
    /// Counterexamples kept per eliminated m in the report.
    std::size_t keep_examples = 3;
};

struct FrasnayCounterexample {
    Structure structure;
    int failing_k = 0;  // least k at which it is not k-monomorphic
};

struct FrasnayElimination {
    int m = 0;
    std::size_t structures_tested = 0;
    std::size_t counterexample_count = 0;
    std::vector<FrasnayCounterexample> examples;  // sorted by (size, canonical code)
};

/// One reading of the finite probe: the hypothesis is either m-monomorphy
/// alone or k-monomorphy for every k <= m.
struct FrasnayVariant {
    std::string hypothesis;
    /// Least m that survives; max_size when only the vacuous m = max_size does.
    int threshold = 0;
    bool vacuous = false;
    std::vector<FrasnayElimination> per_m;  // m = 1..threshold
};

struct FrasnayReport {
    int arity = 0;
    int max_size = 0;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    FrasnayVariant m_only;
    FrasnayVariant up_to_m;
};

/// Empirical threshold for one relation of the given arity: the least m such
/// that every structure Y with m < |Y| <= max_size satisfying the hypothesis
/// is monomorphic. Exhaustive (up to isomorphism) for arity 1 with
/// max_size <= 10, arity 2 with max_size <= 5 and arity 3 with max_size <= 2;
/// seeded random sampling otherwise.
FrasnayReport frasnay_sweep(const FrasnayOptions& options);

bool frasnay_exhaustive(int arity, int max_size);

}  // namespace mono
