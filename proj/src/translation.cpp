#include "monostruct/error.hpp"
#include "monostruct/formula.hpp"

#include <functional>

namespace mono {

void OrderDefinitions::validate() const {
    if (formulas.size() != signature.size())
        throw DomainError("expected one definition per symbol of " + signature.to_string());
    for (std::size_t i = 0; i < formulas.size(); ++i) {
        const auto& sym = signature[i];
        const auto& f = formulas[i];
        if (!f.is_quantifier_free()) throw DomainError("definition of " + sym.name + " is not quantifier-free");
        f.rebind(Signature::order());
        for (int v : f.free_variables())
            if (v >= sym.arity)
                throw DomainError("definition of " + sym.name + " uses v" + std::to_string(v) + " but the symbol has arity " +
                                  std::to_string(sym.arity));
    }
}

Formula star_translate(const Formula& phi, const OrderDefinitions& defs) {
    const Signature order = Signature::order();
    std::vector<NodePtr> bodies(phi.signature().size());
    for (std::size_t i = 0; i < phi.signature().size(); ++i) {
        const auto& sym = phi.signature()[i];
        auto at = defs.signature.find(sym.name);
        if (!at) continue;  // reported below if the symbol actually occurs
        if (defs.signature[*at].arity != sym.arity) throw DomainError("definition of " + sym.name + " has a different arity");
        const auto& def = defs.formulas.at(*at);
        if (!def.is_quantifier_free()) throw DomainError("definition of " + sym.name + " is not quantifier-free");
        for (int v : def.free_variables())
            if (v >= sym.arity)
                throw DomainError("definition of " + sym.name + " uses v" + std::to_string(v) + " beyond its arity");
        bodies[i] = def.rebind(order).node();
    }

    std::function<NodePtr(const Node&, std::span<const int>)> substitute =
        [&](const Node& n, std::span<const int> args) -> NodePtr {
        auto copy = std::make_shared<Node>(n);
        for (auto& v : copy->vars) v = args[static_cast<std::size_t>(v)];
        for (auto& c : copy->children) c = substitute(*c, args);
        return copy;
    };
    std::function<NodePtr(const Node&)> walk = [&](const Node& n) -> NodePtr {
        if (n.kind == NodeKind::Relation) {
            const auto& body = bodies[static_cast<std::size_t>(n.symbol)];
            if (!body)
                throw DomainError("missing definition for symbol '" +
                                  phi.signature()[static_cast<std::size_t>(n.symbol)].name + "'");
            return substitute(*body, n.vars);
        }
        auto copy = std::make_shared<Node>(n);
        for (auto& c : copy->children) c = walk(*c);
        return copy;
    };
    return Formula(order, walk(phi.root()));
}

Formula SignatureReduction::translate(const Formula& phi) const {
    const Formula over_source = phi.rebind(source);
    std::function<NodePtr(const Node&)> walk = [&](const Node& n) -> NodePtr {
        auto copy = std::make_shared<Node>(n);
        if (n.kind == NodeKind::Relation) copy->symbol = static_cast<int>(representative[static_cast<std::size_t>(n.symbol)]);
        for (auto& c : copy->children) c = walk(*c);
        return copy;
    };
    return Formula(reduced.signature(), walk(over_source.root()));
}

SignatureReduction reduce_duplicate_relations(const Structure& y) {
    const auto& sig = y.signature();
    std::vector<std::size_t> keep;
    std::vector<std::size_t> representative(sig.size());
    for (std::size_t i = 0; i < sig.size(); ++i) {
        bool merged = false;
        for (std::size_t j = 0; j < keep.size(); ++j) {
            const auto k = keep[j];
            if (sig[k].arity == sig[i].arity && y.relation(k) == y.relation(i)) {
                representative[i] = j;
                merged = true;
                break;
            }
        }
        if (!merged) {
            representative[i] = keep.size();
            keep.push_back(i);
        }
    }
    return {y.reduct(keep), sig, std::move(representative)};
}

}  // namespace mono
