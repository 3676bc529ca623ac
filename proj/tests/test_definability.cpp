#include "monostruct/chaining.hpp"
#include "monostruct/combinatorics.hpp"
#include "monostruct/corpus.hpp"
#include "monostruct/definability.hpp"
#include "monostruct/error.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mono;

namespace {

const Signature kOrder = Signature::order();

Structure triangle() { return generate({GeneratorKind::Triangle, 3}); }

}  // namespace

TEST_CASE("tuple_pattern: examples") {
    const auto x = LinearOrder::natural(6);
    const std::vector<Element> a{5, 2, 5}, b{1, 3, 4}, c{4, 4, 4};
    CHECK(tuple_pattern(a, x).ranks == std::vector<int>{1, 0, 1});
    CHECK(tuple_pattern(b, x).ranks == std::vector<int>{0, 1, 2});
    CHECK(tuple_pattern(c, x).ranks == std::vector<int>{0, 0, 0});
    CHECK(tuple_pattern(a, x).to_string() == "(1,0,1)");
    // Under the reversed order the ranks flip.
    CHECK(tuple_pattern(a, x.reversed()).ranks == std::vector<int>{0, 1, 0});
}

TEST_CASE("all_patterns counts ordered set partitions") {
    // Fubini numbers 1, 3, 13, 75.
    CHECK(all_patterns(1).size() == 1);
    CHECK(all_patterns(2).size() == 3);
    CHECK(all_patterns(3).size() == 13);
    CHECK(all_patterns(4).size() == 75);
    auto p = all_patterns(3);
    CHECK(std::is_sorted(p.begin(), p.end()));
}

TEST_CASE("pattern formulas pick out exactly their tuples") {
    Rng rng(4);
    for (int arity = 1; arity <= 3; ++arity) {
        const auto x = random_order(4, rng);
        const auto ox = order_structure(x);
        for (const auto& p : all_patterns(arity)) {
            Formula phi(kOrder, pattern_formula(p));
            CHECK(phi.is_quantifier_free());
            for_each_tuple(4, arity, [&](std::span<const Element> t) {
                CHECK(eval(ox, phi, Assignment(std::vector<Element>(t.begin(), t.end()))) == (tuple_pattern(t, x) == p));
            });
        }
    }
}

TEST_CASE("order_preserving_map links tuples with equal patterns") {
    Rng rng(6);
    const auto x = random_order(5, rng);
    for_each_tuple(5, 3, [&](std::span<const Element> a) {
        for_each_tuple(5, 3, [&](std::span<const Element> b) {
            const auto m = order_preserving_map(a, b, x);
            CHECK(m.has_value() == (tuple_pattern(a, x) == tuple_pattern(b, x)));
            if (!m) return;
            for (std::size_t i = 0; i < m->size(); ++i)
                for (std::size_t j = i + 1; j < m->size(); ++j)
                    CHECK(x.less((*m)[i].first, (*m)[j].first) == x.less((*m)[i].second, (*m)[j].second));
            for (std::size_t j = 0; j < a.size(); ++j) {
                auto hit = std::find_if(m->begin(), m->end(), [&](const auto& pr) { return pr.first == a[j]; });
                REQUIRE(hit != m->end());
                CHECK(hit->second == b[j]);
            }
        });
    });
}

TEST_CASE("synthesize_definition: examples") {
    const auto b = generate({GeneratorKind::Betweenness, 4});
    const auto d = synthesize_definition(b, LinearOrder::natural(4));
    REQUIRE(d.symbols.size() == 1);
    CHECK(d.symbols[0].accepted == std::vector<Pattern>{{{0, 1, 2}}, {{2, 1, 0}}});
    CHECK_FALSE(d.symbols[0].constant);
    const auto ox = order_structure(LinearOrder::natural(4));
    for_each_tuple(4, 3, [&](std::span<const Element> t) {
        const Assignment a(std::vector<Element>(t.begin(), t.end()));
        CHECK(eval(ox, d.symbols[0].formula, a) == eval(ox, betweenness_formula(), a));
    });

    for (const auto& x : {LinearOrder({0, 1, 2}), LinearOrder({1, 2, 0}), LinearOrder({2, 1, 0})}) {
        try {
            synthesize_definition(triangle(), x);
            FAIL("triangle accepted");
        } catch (const MixedPatternError& e) {
            CHECK(e.symbol() == "R");
            CHECK(std::string(e.what()).rfind("MixedPattern", 0) == 0);
        }
    }

    const auto empty = synthesize_definition(Structure(Signature({{"R", 2}}), 3), LinearOrder::natural(3));
    CHECK(empty.symbols[0].accepted.empty());
    CHECK(empty.symbols[0].formula.root().kind == NodeKind::False);
    CHECK(empty.symbols[0].constant);
}

TEST_CASE("constant relations are flagged") {
    const auto k = generate({GeneratorKind::Constant, 4});
    CHECK(is_equality_invariant(k, 0));
    CHECK(is_equality_invariant(k, 1));
    for (const auto& s : synthesize_definition(k, LinearOrder({3, 1, 0, 2})).symbols) CHECK(s.constant);
    CHECK_FALSE(is_equality_invariant(generate({GeneratorKind::Cyclic, 4}), 0));
}

TEST_CASE("derive_structure: examples") {
    const Signature s3({{"S", 3}});
    const auto c = derive_structure(LinearOrder::natural(5), {s3, {cyclic_formula()}});
    CHECK(c == generate({GeneratorKind::Cyclic, 5}));
    CHECK(c.relation(0).count() == 30);

    Rng rng(2);
    const auto x = random_order(4, rng);
    CHECK(derive_structure(x, {Signature({{"R", 2}}), {parse_formula("false", kOrder)}}).relation(0).count() == 0);
    CHECK(derive_structure(x, {Signature({{"P", 1}}), {parse_formula("v0 = v0", kOrder)}}).relation(0).count() == 4);

    CHECK_THROWS_AS(derive_structure(x, {s3, {parse_formula("v0 < v3", kOrder)}}), DomainError);
    CHECK_THROWS_AS(derive_structure(x, {s3, {}}), DomainError);
}

TEST_CASE("round trips between definitions and structures") {
    Rng rng(12);
    for (int i = 0; i < 150; ++i) {
        const auto sig = random_signature(rng, 3, 3);
        const auto defs = random_definitions(sig, rng);
        const auto x = random_order(static_cast<int>(uniform_int(rng, 1, 6)), rng);
        const auto y = derive_structure(x, defs);
        CHECK(chains(y, x).chains);
        const auto d = synthesize_definition(y, x);
        CHECK(derive_structure(x, d.definitions()) == y);
        // The synthesized formulas are independent of the order they were read from.
        const auto x2 = random_order(x.size(), rng);
        CHECK(derive_structure(x2, d.definitions()) == derive_structure(x2, defs));
    }
}

TEST_CASE("order isomorphisms are isomorphisms of the derived structures") {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        const auto sig = random_signature(rng, 2, 3);
        const auto defs = random_definitions(sig, rng);
        const int n = static_cast<int>(uniform_int(rng, 1, 6));
        const auto x1 = random_order(n, rng), x2 = random_order(n, rng);
        Bijection f{std::vector<Element>(static_cast<std::size_t>(n))};
        for (int r = 0; r < n; ++r)
            f.forward[static_cast<std::size_t>(x1.ascending()[static_cast<std::size_t>(r)])] = x2.ascending()[static_cast<std::size_t>(r)];
        CHECK(is_isomorphism(derive_structure(x1, defs), derive_structure(x2, defs), f));
    }
}

TEST_CASE("definitions files") {
    const auto defs = parse_definitions("# betweenness and a unary marker\nS/3: (v0<v1<v2 | v2<v1<v0)\nP/1: v0 = v0\n");
    CHECK(defs.signature.to_string() == "S/3 P/1");
    CHECK(defs.formulas[0] == betweenness_formula());
    const auto again = parse_definitions(to_text(defs));
    CHECK(again.signature == defs.signature);
    CHECK(again.formulas == defs.formulas);

    CHECK_THROWS_AS(parse_definitions("S: v0 < v1\n"), ParseError);
    CHECK_THROWS_AS(parse_definitions("S/2 v0 < v1\n"), ParseError);
    CHECK_THROWS_AS(parse_definitions("S/2: v0 <\n"), ParseError);
}
