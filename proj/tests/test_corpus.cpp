#include "monostruct/chaining.hpp"
#include "monostruct/combinatorics.hpp"
#include "monostruct/corpus.hpp"
#include "monostruct/error.hpp"
#include "monostruct/monomorphy.hpp"

#include <doctest.h>

using namespace mono;

TEST_CASE("generate: examples") {
    const auto b = generate({GeneratorKind::Betweenness, 3});
    CHECK(b.signature().to_string() == "S/3");
    CHECK(b.tuples(0) == std::vector<Tuple>{{0, 1, 2}, {2, 1, 0}});

    const auto t = generate({GeneratorKind::Triangle, 3});
    CHECK(t.tuples(0) == std::vector<Tuple>{{0, 1}, {1, 2}, {2, 0}});

    const auto empty = generate({GeneratorKind::Random, 4, 17, 0.0, Signature({{"R", 2}, {"S", 3}})});
    CHECK(empty.relation(0).count() == 0);
    CHECK(empty.relation(1).count() == 0);
    const auto full = generate({GeneratorKind::Random, 3, 17, 1.0});
    CHECK(full.relation(0).count() == 9);

    CHECK(generate({GeneratorKind::Linear, 3}).signature().to_string() == "</2");
    CHECK(generate({GeneratorKind::TransitiveTournament, 4}).relation(0).count() == 6);
}

TEST_CASE("generate: invalid specs") {
    CHECK_THROWS_AS(generate({GeneratorKind::Linear, 0}), DomainError);
    CHECK_THROWS_AS(generate({GeneratorKind::Triangle, 4}), DomainError);
    CHECK_THROWS_AS(generate({GeneratorKind::Random, 3, 1, 1.5}), DomainError);
    CHECK_THROWS_AS(generate({GeneratorKind::Random, 3, 1, -0.1}), DomainError);
    CHECK_THROWS_AS(parse_generator_kind("square"), DomainError);
    for (auto k : {GeneratorKind::Linear, GeneratorKind::Betweenness, GeneratorKind::Cyclic, GeneratorKind::Triangle,
                   GeneratorKind::TransitiveTournament, GeneratorKind::Constant, GeneratorKind::Random})
        CHECK(parse_generator_kind(to_string(k)) == k);
}

TEST_CASE("random generation is reproducible") {
    // The engine itself: the C++ standard fixes the 10000th output for the default seed.
    Rng engine;
    engine.discard(9999);
    CHECK(engine() == 9981545732273789042ULL);

    Rng a(3), b(3);
    CHECK(unit_interval(a) == unit_interval(b));
    Rng c(3);
    CHECK(unit_interval(c) == static_cast<double>(Rng(3)() >> 11) * 0x1.0p-53);

    const GeneratorSpec spec{GeneratorKind::Random, 4, 42, 0.5};
    CHECK(generate(spec) == generate(spec));
    // Frozen on first run; guards the draw order (symbol, then lexicographic tuple).
    CHECK(to_text(generate({GeneratorKind::Random, 3, 42, 0.5})) ==
          "signature R/2\ndomain 3\nR: (1,0) (1,2) (2,1) (2,2)\n");
}

TEST_CASE("reversal_automorphism_check") {
    const auto b = generate({GeneratorKind::Betweenness, 4});
    const auto x = LinearOrder::natural(4);
    CHECK(reversal_automorphism_check(b, x));
    const auto f = reversal_map(x);
    CHECK(f.forward != identity_permutation(4));
    for (Element e = 0; e < 4; ++e) CHECK(f(f(e)) == e);

    // Reversal turns the cyclic order into the opposite cyclic order.
    CHECK_FALSE(reversal_automorphism_check(generate({GeneratorKind::Cyclic, 4}), x));

    for (int n = 2; n <= 5; ++n)
        CHECK_FALSE(reversal_automorphism_check(generate({GeneratorKind::Linear, n}), LinearOrder::natural(n)));
    CHECK(reversal_automorphism_check(generate({GeneratorKind::Linear, 1}), LinearOrder::natural(1)));
    CHECK_THROWS_AS(reversal_automorphism_check(b, LinearOrder::natural(3)), DomainError);

    for (int n = 2; n <= 7; ++n)
        CHECK(reversal_automorphism_check(generate({GeneratorKind::Betweenness, n}), LinearOrder::natural(n)));
}

TEST_CASE("the named examples are monomorphic") {
    for (int n = 3; n <= 8; ++n) {
        CHECK(is_monomorphic(generate({GeneratorKind::Betweenness, n})).monomorphic);
        CHECK(is_monomorphic(generate({GeneratorKind::Cyclic, n})).monomorphic);
    }
    for (int n = 1; n <= 6; ++n)
        CHECK(enumerate_chaining_orders(generate({GeneratorKind::Constant, n})).size() == factorial(n));
}

TEST_CASE("random formulas respect their bounds") {
    Rng rng(99);
    for (int i = 0; i < 300; ++i) {
        const auto sig = random_signature(rng, 2, 3);
        CHECK(sig.size() >= 1);
        CHECK(sig.size() <= 2);
        for (const auto& s : sig.symbols()) CHECK((s.arity >= 1 && s.arity <= 3));
        const auto phi = random_formula(sig, rng, 3, 4, 2);
        CHECK(phi.quantifier_depth() <= 2);
        for (int v : phi.free_variables()) CHECK(v < 3);
        const auto defs = random_definitions(sig, rng);
        CHECK_NOTHROW(defs.validate());
    }
    CHECK_THROWS_AS(random_formula(Signature({{"R", 2}}), rng, 0, 2, 0), DomainError);
}

TEST_CASE("corpora") {
    const auto binary = binary_corpus();
    CHECK(binary.size() >= 50);
    for (const auto& y : binary) {
        CHECK(y.signature().to_string() == "R/2");
        CHECK(y.size() <= 5);
    }
    const auto all = standard_corpus(6);
    CHECK(all.size() > binary.size());
    for (const auto& y : all) CHECK(y.size() <= 6);
    for (const auto& y : standard_corpus(4)) CHECK(y.size() <= 4);
    CHECK(all == standard_corpus(6));
}
