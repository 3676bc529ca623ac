#pragma once

#include <compare>
#include <functional>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mono {

using Element = int;
using Tuple = std::vector<Element>;

struct Symbol {
    std::string name;
    int arity = 0;

    friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Ordered list of relation symbols. Names are unique and arities are at least 1.
/// The name "<" is reserved for the binary order symbol used by order formulas.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<Symbol> symbols);

    /// The signature {</2} of linear orders.
    static Signature order();

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    std::optional<std::size_t> find(std::string_view name) const;
    bool has_order_symbol() const { return find("<").has_value(); }

    /// Sub-signature keeping the listed symbol indices, in the listed order.
    Signature reduct(std::span<const std::size_t> keep) const;

    /// `R/2 S/3` form.
    std::string to_string() const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<Symbol> symbols_;
};

/// Parses `R/2 S/3` (whitespace separated) into a signature.
Signature parse_signature(std::string_view text);

/// Dense membership table for one relation over {0..n-1}. Tuples are
/// indexed in lexicographic order, so iteration order is lexicographic.
class Relation {
public:
    Relation(int arity, int domain_size);

    int arity() const noexcept { return arity_; }
    int domain_size() const noexcept { return domain_; }

    bool contains(std::span<const Element> t) const { return bits_[index(t)] != 0; }
    void insert(std::span<const Element> t) { bits_[index(t)] = 1; }
    void erase(std::span<const Element> t) { bits_[index(t)] = 0; }
    bool contains_index(std::size_t i) const { return bits_[i] != 0; }
    void set_index(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }

    std::size_t index(std::span<const Element> t) const {
        std::size_t i = 0;
        for (Element e : t) i = i * static_cast<std::size_t>(domain_) + static_cast<std::size_t>(e);
        return i;
    }
    std::size_t capacity() const noexcept { return bits_.size(); }
    std::size_t count() const;
    std::vector<Tuple> tuples() const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    int arity_;
    int domain_;
    std::vector<std::uint8_t> bits_;
};

/// A finite relational structure on the domain {0..size-1}.
class Structure {
public:
    Structure() = default;
    Structure(Signature signature, int size);

    const Signature& signature() const noexcept { return signature_; }
    int size() const noexcept { return size_; }

    const Relation& relation(std::size_t symbol) const { return relations_.at(symbol); }
    bool contains(std::size_t symbol, std::span<const Element> t) const { return relations_[symbol].contains(t); }
    std::vector<Tuple> tuples(std::size_t symbol) const { return relations_.at(symbol).tuples(); }

    /// Adds a tuple; throws DomainError on arity mismatch or out-of-range entries.
    void insert(std::size_t symbol, std::span<const Element> t);
    void insert(std::size_t symbol, std::initializer_list<Element> t) { insert(symbol, std::span<const Element>(t.begin(), t.size())); }
    void insert(std::string_view symbol, std::initializer_list<Element> t);
    void set_relation(std::size_t symbol, Relation r);
    /// Sets membership of the tuple with lexicographic index `index`.
    void set(std::size_t symbol, std::size_t index, bool member) { relations_.at(symbol).set_index(index, member); }

    /// Restriction to a sub-signature (same domain).
    Structure reduct(std::span<const std::size_t> keep) const;

    friend bool operator==(const Structure&, const Structure&) = default;

private:
    Signature signature_;
    int size_ = 0;
    std::vector<Relation> relations_;
};

/// Injective total map from {0..n-1} into another domain; `forward[x]` is the image of x.
struct Bijection {
    std::vector<Element> forward;

    int size() const noexcept { return static_cast<int>(forward.size()); }
    Element operator()(Element x) const { return forward[static_cast<std::size_t>(x)]; }
    /// Valid iff forward is a permutation of {0..size-1}.
    bool is_permutation() const;
    Bijection inverse() const;
    Tuple apply(std::span<const Element> t) const;

    friend bool operator==(const Bijection&, const Bijection&) = default;
};

/// Isomorphism-invariant encoding: equal codes iff the structures are isomorphic
/// (for structures over the same signature).
struct CanonicalCode {
    std::string bytes;

    std::string hex() const;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Result of parsing a structure file. External element names (if the file
/// declared any) are erased; `element_names[i]` is the name of element i.
struct ParsedStructure {
    Structure structure;
    std::vector<std::string> element_names;
};

ParsedStructure parse_structure_file(std::string_view text);
Structure parse_structure(std::string_view text);
std::string to_text(const Structure& s);

/// Substructure induced on `subset` (any order, no repeats), relabelled to
/// {0..|H|-1} preserving ascending element order.
Structure induced_substructure(const Structure& s, std::span<const Element> subset);

/// Image of `s` under a permutation: tuple t of s becomes p(t).
Structure relabel(const Structure& s, const Bijection& p);

/// True iff f is a bijection from A's domain onto B's domain mapping every relation exactly.
bool is_isomorphism(const Structure& a, const Structure& b, const Bijection& f);

/// Lexicographically least isomorphism A -> B, or nullopt.
std::optional<Bijection> find_isomorphism(const Structure& a, const Structure& b);
bool are_isomorphic(const Structure& a, const Structure& b);

inline constexpr int kDefaultCanonicalCap = 10;
CanonicalCode canonical_code(const Structure& s, int max_size = kDefaultCanonicalCap);

/// For each m in 1..k, the isomorphism classes of m-element induced substructures.
std::map<int, std::set<CanonicalCode>> age(const Structure& s, int k);

/// Calls `visit` with every structure on size+1 elements whose restriction to
/// {0..size-1} equals `s` (all choices for tuples that mention the new element).
/// Throws DomainError when there are more than 2^max_bits choices.
void for_each_one_point_extension(const Structure& s, const std::function<void(const Structure&)>& visit,
                                  int max_bits = 20);

/// Every structure of the given size over `sig`, one per isomorphism class,
/// sorted by canonical code. Throws DomainError when the labelled search
/// space exceeds 2^max_bits or more than max_classes classes exist.
std::vector<Structure> enumerate_isomorphism_classes(const Signature& sig, int size, int max_bits = 20,
                                                     std::size_t max_classes = 4096);

}  // namespace mono
