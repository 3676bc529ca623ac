#include "monostruct/combinatorics.hpp"
#include "monostruct/corpus.hpp"
#include "monostruct/definability.hpp"
#include "monostruct/error.hpp"

#include <algorithm>

namespace mono {

std::string to_string(GeneratorKind k) {
    switch (k) {
    case GeneratorKind::Linear: return "linear";
    case GeneratorKind::Betweenness: return "betweenness";
    case GeneratorKind::Cyclic: return "cyclic";
    case GeneratorKind::Triangle: return "triangle";
    case GeneratorKind::TransitiveTournament: return "transitive_tournament";
    case GeneratorKind::Constant: return "constant";
    case GeneratorKind::Random: return "random";
    }
    return "?";
}

GeneratorKind parse_generator_kind(std::string_view name) {
    for (auto k : {GeneratorKind::Linear, GeneratorKind::Betweenness, GeneratorKind::Cyclic, GeneratorKind::Triangle,
                   GeneratorKind::TransitiveTournament, GeneratorKind::Constant, GeneratorKind::Random})
        if (to_string(k) == name) return k;
    throw DomainError("unknown generator kind '" + std::string(name) + "'");
}

void GeneratorSpec::validate() const {
    if (size < 1) throw DomainError("generator size must be >= 1");
    if (kind == GeneratorKind::Triangle && size != 3) throw DomainError("the oriented triangle has exactly 3 elements");
    if (kind == GeneratorKind::Random) {
        if (!(density >= 0.0 && density <= 1.0)) throw DomainError("density must lie in [0,1]");
        if (signature.empty()) throw DomainError("random generation needs a nonempty signature");
    }
}

Formula betweenness_formula() { return parse_formula("(v0<v1<v2 | v2<v1<v0)", Signature::order()); }

Formula cyclic_formula() { return parse_formula("(v0<v1<v2 | v1<v2<v0 | v2<v0<v1)", Signature::order()); }

Structure generate(const GeneratorSpec& spec) {
    spec.validate();
    const int n = spec.size;
    switch (spec.kind) {
    case GeneratorKind::Linear: return order_structure(LinearOrder::natural(n));
    case GeneratorKind::Betweenness:
        return derive_structure(LinearOrder::natural(n), {Signature({{"S", 3}}), {betweenness_formula()}});
    case GeneratorKind::Cyclic:
        return derive_structure(LinearOrder::natural(n), {Signature({{"S", 3}}), {cyclic_formula()}});
    case GeneratorKind::Triangle: {
        Structure y(Signature({{"R", 2}}), 3);
        y.insert(0, {0, 1});
        y.insert(0, {1, 2});
        y.insert(0, {2, 0});
        return y;
    }
    case GeneratorKind::TransitiveTournament: {
        Structure y(Signature({{"R", 2}}), n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) y.insert(0, {i, j});
        return y;
    }
    case GeneratorKind::Constant: {
        Structure y(Signature({{"E", 2}, {"T", 3}}), n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b) {
                    y.insert(0, {a, b});
                    y.insert(1, {a, a, b});
                }
        return y;
    }
    case GeneratorKind::Random: {
        Structure y(spec.signature, n);
        Rng rng(spec.seed);
        for (std::size_t r = 0; r < spec.signature.size(); ++r) {
            const std::size_t cells = y.relation(r).capacity();
            for (std::size_t c = 0; c < cells; ++c) y.set(r, c, unit_interval(rng) < spec.density);
        }
        return y;
    }
    }
    throw DomainError("unknown generator kind");
}

Bijection reversal_map(const LinearOrder& x) {
    const auto& a = x.ascending();
    Bijection f{std::vector<Element>(a.size())};
    for (std::size_t i = 0; i < a.size(); ++i) f.forward[static_cast<std::size_t>(a[i])] = a[a.size() - 1 - i];
    return f;
}

bool reversal_automorphism_check(const Structure& y, const LinearOrder& x) {
    if (x.size() != y.size()) throw DomainError("order size does not match the structure");
    return is_isomorphism(y, y, reversal_map(x));
}

LinearOrder random_order(int n, Rng& rng) {
    auto v = identity_permutation(n);
    for (int i = n - 1; i > 0; --i)
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(uniform_int(rng, 0, i))]);
    return LinearOrder(std::move(v));
}

namespace {

NodePtr random_node(const Signature& sig, Rng& rng, int variables, int depth, int qdepth) {
    auto var = [&] { return static_cast<int>(uniform_int(rng, 0, variables - 1)); };
    auto leaf = [&]() -> NodePtr {
        // Relation atoms twice as likely as equality atoms.
        const auto pick = uniform_int(rng, 0, static_cast<std::int64_t>(2 * sig.size()));
        if (sig.empty() || pick == 0) return ast::equal(var(), var());
        const auto symbol = static_cast<std::size_t>((pick - 1) / 2);
        std::vector<int> args;
        for (int j = 0; j < sig[symbol].arity; ++j) args.push_back(var());
        return ast::atom(static_cast<int>(symbol), std::move(args));
    };
    if (depth <= 0) return leaf();
    const auto choice = uniform_int(rng, 0, qdepth > 0 ? 7 : 5);
    switch (choice) {
    case 0:
    case 1: return leaf();
    case 2: return ast::negate(random_node(sig, rng, variables, depth - 1, qdepth));
    case 3:
    case 4: {
        std::vector<NodePtr> parts;
        const auto width = uniform_int(rng, 2, 3);
        for (int i = 0; i < width; ++i) parts.push_back(random_node(sig, rng, variables, depth - 1, qdepth));
        return choice == 3 ? ast::conj(std::move(parts)) : ast::disj(std::move(parts));
    }
    case 5:
        return ast::implies(random_node(sig, rng, variables, depth - 1, qdepth),
                            random_node(sig, rng, variables, depth - 1, qdepth));
    default: {
        const int v = var();
        auto body = random_node(sig, rng, variables, depth - 1, qdepth - 1);
        return choice == 6 ? ast::forall(v, std::move(body)) : ast::exists(v, std::move(body));
    }
    }
}

}  // namespace

Formula random_formula(const Signature& sig, Rng& rng, int variables, int max_depth, int max_quantifier_depth) {
    if (variables < 1) throw DomainError("random formulas need at least one variable");
    return Formula(sig, random_node(sig, rng, variables, max_depth, max_quantifier_depth));
}

OrderDefinitions random_definitions(const Signature& sig, Rng& rng, int max_depth) {
    OrderDefinitions defs{sig, {}};
    const Signature order = Signature::order();
    for (const auto& s : sig.symbols()) defs.formulas.push_back(random_formula(order, rng, s.arity, max_depth, 0));
    return defs;
}

Signature random_signature(Rng& rng, int max_symbols, int max_arity) {
    std::vector<Symbol> symbols;
    const auto count = uniform_int(rng, 1, max_symbols);
    for (int i = 0; i < count; ++i)
        symbols.push_back({"R" + std::to_string(i), static_cast<int>(uniform_int(rng, 1, max_arity))});
    return Signature(std::move(symbols));
}

std::vector<Structure> binary_corpus() {
    const Signature sig({{"R", 2}});
    std::vector<Structure> out;
    out.push_back(generate({GeneratorKind::Triangle, 3}));
    for (int n = 1; n <= 5; ++n) {
        out.push_back(generate({GeneratorKind::TransitiveTournament, n}));
        out.push_back(Structure(sig, n));
        GeneratorSpec full{GeneratorKind::Random, n, 0, 1.0, sig};
        out.push_back(generate(full));
    }
    Structure one_edge(sig, 3);
    one_edge.insert(0, {0, 1});
    out.push_back(one_edge);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const int n = 2 + static_cast<int>(seed % 4);
        const double density = 0.15 + 0.1 * static_cast<double>(seed % 8);
        out.push_back(generate({GeneratorKind::Random, n, seed, density, sig}));
    }
    Rng rng(2024);
    for (int i = 0; i < 12; ++i) {
        const int n = 2 + i % 4;
        out.push_back(derive_structure(random_order(n, rng), random_definitions(sig, rng)));
    }
    return out;
}

std::vector<Structure> standard_corpus(int max_size) {
    std::vector<Structure> out;
    auto add = [&](Structure s) {
        if (s.size() <= max_size) out.push_back(std::move(s));
    };
    for (auto& s : binary_corpus()) add(std::move(s));
    for (int n = 1; n <= max_size; ++n) {
        add(generate({GeneratorKind::Linear, n}));
        add(generate({GeneratorKind::Constant, n}));
        if (n >= 3) {
            add(generate({GeneratorKind::Betweenness, n}));
            add(generate({GeneratorKind::Cyclic, n}));
        }
    }
    Rng rng(77);
    for (int n = 4; n <= max_size; ++n) {
        add(relabel(generate({GeneratorKind::Cyclic, n}), Bijection{random_order(n, rng).ascending()}));
        add(relabel(generate({GeneratorKind::Betweenness, n}), Bijection{random_order(n, rng).ascending()}));
    }
    const Signature ternary({{"S", 3}});
    const Signature mixed({{"P", 1}, {"R", 2}});
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        add(generate({GeneratorKind::Random, 3 + static_cast<int>(seed % 2), seed, 0.3, ternary}));
        add(generate({GeneratorKind::Random, 2 + static_cast<int>(seed % 4), seed, 0.5, mixed}));
    }
    for (int i = 0; i < 16; ++i) {
        const int n = 2 + i % std::max(1, max_size - 1);
        const Signature sig = random_signature(rng, 2, 3);
        add(derive_structure(random_order(n, rng), random_definitions(sig, rng)));
    }
    return out;
}

}  // namespace mono
