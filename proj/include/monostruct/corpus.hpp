#pragma once

#include "monostruct/formula.hpp"
#include "monostruct/order.hpp"
#include "monostruct/random.hpp"
#include "monostruct/structure.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mono {

enum class GeneratorKind { Linear, Betweenness, Cyclic, Triangle, TransitiveTournament, Constant, Random };

std::string to_string(GeneratorKind k);
GeneratorKind parse_generator_kind(std::string_view name);

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Linear;
    int size = 1;
    std::uint64_t seed = 0;    // random only
    double density = 0.5;      // random only
    Signature signature = Signature({{"R", 2}});  // random only

    void validate() const;
};

/// Order formulas of the two classical examples, over Signature::order().
Formula betweenness_formula();  // (v0 < v1 < v2 | v2 < v1 < v0)
Formula cyclic_formula();       // (v0 < v1 < v2 | v1 < v2 < v0 | v2 < v0 < v1)

/// Deterministic structure for a spec:
///   linear                 </2, the natural order
///   betweenness, cyclic    S/3, derived from the natural order
///   triangle               R/2 = {(0,1),(1,2),(2,0)} (size is always 3)
///   transitive_tournament  R/2 = {(i,j) : i < j}
///   constant               E/2 = {(a,b) : a != b}, T/3 = {(a,a,b) : a != b}
///   random                 each tuple of each symbol kept with probability density
/// Random draws use raw mt19937_64(seed) output: tuple kept iff
/// (draw >> 11) * 2^-53 < density, tuples visited per symbol in lexicographic order.
Structure generate(const GeneratorSpec& spec);

/// Whether the reversal of x (the map sending the i-th element to the
/// (n-1-i)-th) is an automorphism of y.
bool reversal_automorphism_check(const Structure& y, const LinearOrder& x);

/// Reversal of x as a permutation of the domain.
Bijection reversal_map(const LinearOrder& x);

LinearOrder random_order(int n, Rng& rng);

/// Random formula over `sig`. Atoms use variables below `variables`;
/// quantifiers bind variables below `variables` too, up to `max_quantifier_depth`
/// nesting; `max_depth` bounds connective nesting.
Formula random_formula(const Signature& sig, Rng& rng, int variables, int max_depth, int max_quantifier_depth);

/// Random quantifier-free order definitions for every symbol of `sig`.
OrderDefinitions random_definitions(const Signature& sig, Rng& rng, int max_depth = 3);

/// Random signature with 1..max_symbols symbols of arity 1..max_arity, named R0, R1, ...
Signature random_signature(Rng& rng, int max_symbols, int max_arity);

/// Fixed test corpus: the named examples at several sizes, random digraphs,
/// random ternary and two-symbol structures, structures derived from random
/// order definitions, and relabelled copies. Every member has size <= max_size.
std::vector<Structure> standard_corpus(int max_size = 6);

/// Corpus restricted to the single binary symbol R/2 (at least 50 members of size <= 5).
std::vector<Structure> binary_corpus();

}  // namespace mono
