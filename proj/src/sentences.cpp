#include "monostruct/combinatorics.hpp"
#include "monostruct/error.hpp"
#include "monostruct/formula.hpp"

#include <algorithm>

namespace mono {

namespace {

void check_builder_input(const Structure& k, const SentenceCaps& caps) {
    if (k.size() == 0) throw DomainError("the sentence builders need a nonempty structure");
    if (k.size() > caps.max_size)
        throw DomainError("structure of size " + std::to_string(k.size()) + " exceeds the permutation cap " +
                          std::to_string(caps.max_size));
}

NodePtr distinctness(int n) {
    std::vector<NodePtr> parts;
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) parts.push_back(ast::negate(ast::equal(k, l)));
    return ast::conj(std::move(parts));
}

NodePtr universal_closure(int n, NodePtr body) {
    for (int v = n - 1; v >= 0; --v) body = ast::forall(v, std::move(body));
    return body;
}

}  // namespace

Formula build_alpha(const Structure& k) {
    if (k.size() == 0) throw DomainError("the sentence builders need a nonempty structure");
    const int n = k.size();
    std::vector<NodePtr> literals;
    // Distinct elements of K make ~v_k = v_l true; v_k = v_k is omitted as a tautology.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) literals.push_back(ast::negate(ast::equal(a, b)));
    for (std::size_t r = 0; r < k.signature().size(); ++r) {
        const auto& rel = k.relation(r);
        std::size_t idx = 0;
        for_each_tuple(n, rel.arity(), [&](std::span<const Element> t) {
            auto a = ast::atom(static_cast<int>(r), std::vector<int>(t.begin(), t.end()));
            literals.push_back(rel.contains_index(idx++) ? a : ast::negate(a));
        });
    }
    return Formula(k.signature(), ast::conj(std::move(literals)));
}

Formula build_phi(const Structure& k, const SentenceCaps& caps) {
    check_builder_input(k, caps);
    const Formula alpha = build_alpha(k);
    auto pi = identity_permutation(k.size());
    std::vector<NodePtr> disjuncts;
    do {
        disjuncts.push_back(permute_formula(alpha, pi).node());
    } while (std::next_permutation(pi.begin(), pi.end()));
    return Formula(k.signature(), ast::disj(std::move(disjuncts)));
}

Formula build_psi(const Structure& k, const SentenceCaps& caps) {
    const Formula phi = build_phi(k, caps);
    const int n = k.size();
    NodePtr guarded = n > 1 ? ast::implies(distinctness(n), phi.node()) : phi.node();
    return Formula(k.signature(), universal_closure(n, std::move(guarded)));
}

Formula build_psi_n(const Signature& sig, int n, const SentenceCaps& caps) {
    if (n < 1) throw DomainError("psi_n needs n >= 1");
    if (n > caps.max_size)
        throw DomainError("n = " + std::to_string(n) + " exceeds the permutation cap " + std::to_string(caps.max_size));
    const auto classes = enumerate_isomorphism_classes(sig, n, caps.max_extension_bits, caps.max_classes);
    std::vector<NodePtr> disjuncts;
    disjuncts.reserve(classes.size());
    for (const auto& k : classes) disjuncts.push_back(build_psi(k, caps).node());
    return Formula(sig, ast::disj(std::move(disjuncts)));
}

}  // namespace mono
