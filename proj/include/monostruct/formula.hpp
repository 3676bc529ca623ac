#pragma once

#include "monostruct/structure.hpp"

#include <initializer_list>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mono {

enum class NodeKind { True, False, Equal, Relation, Not, And, Or, Implies, Forall, Exists };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// One immutable AST node. Field use by kind:
///   Equal            vars = {k, l}
///   Relation         symbol = signature index, vars = argument variables
///   Not              children = {body}
///   And, Or          children (two or more)
///   Implies          children = {premise, conclusion}
///   Forall, Exists   vars = {bound variable}, children = {body}
struct Node {
    NodeKind kind = NodeKind::True;
    int symbol = -1;
    std::vector<int> vars;
    std::vector<NodePtr> children;
};

bool equal_trees(const Node& a, const Node& b);

/// Node constructors. `conj`/`disj` collapse empty and singleton lists
/// (to true/false and to the single operand) so that every And/Or node
/// has at least two children.
namespace ast {
NodePtr truth();
NodePtr falsity();
NodePtr equal(int k, int l);
NodePtr atom(int symbol, std::vector<int> args);
NodePtr negate(NodePtr body);
NodePtr conj(std::vector<NodePtr> parts);
NodePtr disj(std::vector<NodePtr> parts);
NodePtr implies(NodePtr premise, NodePtr conclusion);
NodePtr forall(int var, NodePtr body);
NodePtr exists(int var, NodePtr body);
}  // namespace ast

/// A first-order formula over a relational signature. Variables are v0, v1, ...
class Formula {
public:
    Formula() : root_(ast::truth()) {}
    Formula(Signature signature, NodePtr root);

    const Signature& signature() const noexcept { return signature_; }
    const Node& root() const noexcept { return *root_; }
    const NodePtr& node() const noexcept { return root_; }

    std::set<int> free_variables() const;
    bool is_sentence() const { return free_variables().empty(); }
    bool is_quantifier_free() const;
    int quantifier_depth() const;
    std::size_t node_count() const;

    /// Canonical concrete syntax; parse_formula(to_string()) reproduces the AST.
    std::string to_string() const;

    /// Same formula with symbol indices resolved against another signature
    /// (by name). Throws DomainError for unknown names or arity changes.
    Formula rebind(const Signature& target) const;

    friend bool operator==(const Formula& a, const Formula& b) {
        return a.signature_ == b.signature_ && equal_trees(*a.root_, *b.root_);
    }

private:
    Signature signature_;
    NodePtr root_;
};

/// Parses the concrete syntax:
///   atoms       v<k> = v<l>  |  Name(v<k>,...)  |  true  |  false
///               v<a> < v<b> < ...   (only when the signature declares </2)
///   connectives ~F  (F & F & ...)  (F | F | ...)  (F -> F)
///   quantifiers A v<k> F   E v<k> F
Formula parse_formula(std::string_view text, const Signature& sig);

/// Variable assignment v_i -> element; unassigned variables hold -1.
class Assignment {
public:
    Assignment() = default;
    Assignment(std::initializer_list<Element> values) : values_(values) {}
    explicit Assignment(std::vector<Element> values) : values_(std::move(values)) {}

    void bind(int var, Element e);
    bool is_bound(int var) const { return var >= 0 && var < static_cast<int>(values_.size()) && values_[static_cast<std::size_t>(var)] >= 0; }
    Element operator[](int var) const { return values_.at(static_cast<std::size_t>(var)); }
    const std::vector<Element>& values() const noexcept { return values_; }

private:
    std::vector<Element> values_;
};

/// Tarskian satisfaction A |= phi[a]. Quantifiers range over the domain in
/// ascending order. Throws DomainError when a free variable is unassigned,
/// an assigned element lies outside the domain, or phi mentions a symbol
/// A's signature lacks.
bool eval(const Structure& a, const Formula& phi, const Assignment& assignment = {});

/// phi_pi: every occurrence of v_k (k < pi.size()) becomes v_{pi(k)}, bound
/// occurrences included. Throws DomainError if a free variable is >= pi.size().
Formula permute_formula(const Formula& phi, std::span<const int> pi);

/// Caps for the sentence builders; phi and psi enumerate n! permutations.
struct SentenceCaps {
    int max_size = 6;
    std::size_t max_classes = 512;
    int max_extension_bits = 20;
};

/// Conjunction of the literals over v0..v_{n-1} true of (0,...,n-1) in K:
/// first ~v_k = v_l for k < l, then relation literals ordered by (symbol, tuple).
Formula build_alpha(const Structure& k);
/// Disjunction over all pi in Sym(n), in lexicographic order, of alpha_pi.
Formula build_phi(const Structure& k, const SentenceCaps& caps = {});
/// A v0 ... A v_{n-1} ((pairwise distinct) -> phi).
Formula build_psi(const Structure& k, const SentenceCaps& caps = {});
/// Disjunction of build_psi(K) over one K per isomorphism class of n-element structures.
Formula build_psi_n(const Signature& sig, int n, const SentenceCaps& caps = {});

/// Quantifier-free order formulas defining each symbol of `signature`;
/// formulas[i] defines signature[i] using v0..v_{arity-1}.
struct OrderDefinitions {
    Signature signature;
    std::vector<Formula> formulas;

    /// Validates shape: one formula per symbol, each quantifier-free over the
    /// order signature with free variables below the symbol's arity.
    void validate() const;
};

/// Replaces every relation atom R(v_{k0},...) of phi by the definition of R
/// with v_j renamed to v_{kj}. The result is over Signature::order().
Formula star_translate(const Formula& phi, const OrderDefinitions& defs);

/// Merges symbols with equal arity and equal extension onto the lowest-indexed one.
struct SignatureReduction {
    Structure reduced;
    Signature source;
    /// representative[i] = index in reduced.signature() standing for source symbol i.
    std::vector<std::size_t> representative;

    /// phi over `source` -> phi over the reduced signature by symbol substitution.
    Formula translate(const Formula& phi) const;
};

SignatureReduction reduce_duplicate_relations(const Structure& y);

}  // namespace mono
