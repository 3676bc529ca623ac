#include "monostruct/combinatorics.hpp"
#include "monostruct/corpus.hpp"
#include "monostruct/definability.hpp"
#include "monostruct/error.hpp"
#include "monostruct/formula.hpp"
#include "monostruct/monomorphy.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace mono;

namespace {

const Signature kBinary({{"R", 2}});

Structure triangle() { return generate({GeneratorKind::Triangle, 3}); }

Structure one_edge(int n = 3) {
    Structure y(kBinary, n);
    y.insert(0, {0, 1});
    return y;
}

Structure edge() { return one_edge(2); }

bool eval_oracle(const Structure& y, const Formula& phi, std::vector<Element> values) {
    values.resize(16, -1);
    return oracle::satisfies(y, phi.rebind(y.signature()).root(), values);
}

}  // namespace

TEST_CASE("parse: atoms and sugar") {
    auto eq = parse_formula("v0 = v1", kBinary);
    CHECK(eq.root().kind == NodeKind::Equal);
    CHECK(eq.root().vars == std::vector<int>{0, 1});

    const auto order = Signature::order();
    auto betw = parse_formula("(v0<v1<v2 | v2<v1<v0)", order);
    auto lt = [](int a, int b) { return ast::atom(0, {a, b}); };
    Formula expected(order, ast::disj({ast::conj({lt(0, 1), lt(1, 2)}), ast::conj({lt(2, 1), lt(1, 0)})}));
    CHECK(betw == expected);
    CHECK(betw == betweenness_formula());

    CHECK_THROWS_AS(parse_formula("R(v0)", kBinary), Error);
    CHECK_THROWS_AS(parse_formula("v0 < v1", kBinary), ParseError);
    CHECK_THROWS_AS(parse_formula("(R(v0,v1) & R(v1,v0) | v0 = v1)", kBinary), ParseError);
    CHECK_THROWS_AS(parse_formula("S(v0,v1)", kBinary), ParseError);
    CHECK_THROWS_AS(parse_formula("(R(v0,v1)", kBinary), ParseError);
    CHECK_THROWS_AS(parse_formula("R(v0,v1) junk", kBinary), ParseError);
}

TEST_CASE("parse: connectives, quantifiers and printing") {
    auto phi = parse_formula("A v0 E v1 (R(v0,v1) -> ~v0 = v1)", kBinary);
    CHECK(phi.is_sentence());
    CHECK(phi.quantifier_depth() == 2);
    CHECK_FALSE(phi.is_quantifier_free());
    CHECK(phi.to_string() == "A v0 E v1 (R(v0,v1) -> ~v0 = v1)");
    auto chain = parse_formula("(true & false & v2 = v0)", kBinary);
    CHECK(chain.root().children.size() == 3);
    CHECK(chain.free_variables() == std::set<int>{0, 2});
}

TEST_CASE("parse and print are inverse on random formulas") {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        auto sig = random_signature(rng, 2, 3);
        auto phi = random_formula(sig, rng, 3, 4, 2);
        CHECK(parse_formula(phi.to_string(), sig) == phi);
    }
    const auto order = Signature::order();
    for (int i = 0; i < 100; ++i) {
        auto phi = random_formula(order, rng, 3, 4, 2);
        CHECK(parse_formula(phi.to_string(), order) == phi);
    }
}

TEST_CASE("eval: examples") {
    auto out_edge = parse_formula("A v0 E v1 R(v0,v1)", kBinary);
    CHECK(eval(triangle(), out_edge));
    CHECK_FALSE(eval(one_edge(), out_edge));
    for (const auto& y : standard_corpus(4)) {
        if (y.size() == 0) continue;
        CHECK(eval(y, Formula(y.signature(), ast::equal(0, 0)), Assignment{0}));
    }
    CHECK(eval(one_edge(), parse_formula("R(v0,v1)", kBinary), Assignment{0, 1}));
    CHECK_FALSE(eval(one_edge(), parse_formula("R(v0,v1)", kBinary), Assignment{1, 0}));
}

TEST_CASE("eval: errors") {
    auto phi = parse_formula("R(v0,v1)", kBinary);
    CHECK_THROWS_AS(eval(triangle(), phi), DomainError);
    CHECK_THROWS_AS(eval(triangle(), phi, Assignment{0, 3}), DomainError);
    CHECK_THROWS_AS(eval(Structure(Signature({{"S", 2}}), 2), phi, Assignment{0, 1}), DomainError);
}

TEST_CASE("eval agrees with the independent evaluator") {
    Rng rng(21);
    const auto corpus = standard_corpus(5);
    int checked = 0;
    for (int i = 0; i < 600; ++i) {
        const auto& y = corpus[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(corpus.size()) - 1))];
        if (y.size() == 0) continue;
        auto phi = random_formula(y.signature(), rng, 3, 4, 3);
        std::vector<Element> a;
        for (int v = 0; v < 3; ++v) a.push_back(static_cast<Element>(uniform_int(rng, 0, y.size() - 1)));
        CHECK(eval(y, phi, Assignment(a)) == eval_oracle(y, phi, a));
        ++checked;
    }
    CHECK(checked > 500);
}

TEST_CASE("permute_formula: examples") {
    auto phi = parse_formula("R(v0,v1)", kBinary);
    const std::vector<int> swap{1, 0};
    CHECK(permute_formula(phi, swap).to_string() == "R(v1,v0)");
    const std::vector<int> id{0, 1};
    CHECK(permute_formula(phi, id) == phi);

    auto psi = parse_formula("(v0 = v2 & R(v1,v0))", kBinary);
    const std::vector<int> cycle{1, 2, 0};
    CHECK(permute_formula(psi, cycle) == parse_formula("(v1 = v0 & R(v2,v1))", kBinary));

    const std::vector<int> short_pi{0};
    CHECK_THROWS_AS(permute_formula(phi, short_pi), DomainError);
}

TEST_CASE("permutation identity on random formulas") {
    Rng rng(31);
    const auto corpus = standard_corpus(5);
    for (int i = 0; i < 400; ++i) {
        const auto& y = corpus[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(corpus.size()) - 1))];
        if (y.size() == 0) continue;
        const int n = 3;
        auto phi = random_formula(y.signature(), rng, n, 3, 0);
        auto pi = random_order(n, rng).ascending();
        std::vector<Element> a;
        for (int v = 0; v < n; ++v) a.push_back(static_cast<Element>(uniform_int(rng, 0, y.size() - 1)));
        std::vector<Element> composed;
        for (int v = 0; v < n; ++v) composed.push_back(a[static_cast<std::size_t>(pi[static_cast<std::size_t>(v)])]);
        CHECK(eval(y, permute_formula(phi, pi), Assignment(a)) == eval(y, phi, Assignment(composed)));
    }
}

TEST_CASE("build_alpha") {
    CHECK(build_alpha(edge()).to_string() == "(~v0 = v1 & ~R(v0,v0) & R(v0,v1) & ~R(v1,v0) & ~R(v1,v1))");
    Structure point(Signature({{"P", 1}}), 1);
    CHECK(build_alpha(point).to_string() == "~P(v0)");
    CHECK_THROWS_AS(build_alpha(Structure(kBinary, 0)), DomainError);

    for (const auto& k : standard_corpus(4)) {
        if (k.size() == 0) continue;
        CHECK(eval(k, build_alpha(k), Assignment(identity_permutation(k.size()))));
    }
}

TEST_CASE("build_phi: examples") {
    Structure point(kBinary, 1);
    CHECK(build_phi(point) == build_alpha(point));
    auto phi = build_phi(edge());
    CHECK(eval(triangle(), phi, Assignment{0, 1}));
    CHECK_FALSE(eval(one_edge(), phi, Assignment{1, 2}));
    CHECK_FALSE(eval(one_edge(), phi, Assignment{0, 2}));
    CHECK(eval(one_edge(), phi, Assignment{1, 0}));
    CHECK_THROWS_AS(build_phi(Structure(kBinary, 7)), DomainError);
}

TEST_CASE("build_phi recognises isomorphic substructures") {
    const auto corpus = standard_corpus(4);
    std::size_t checked = 0;
    for (const auto& k : corpus) {
        if (k.size() == 0 || k.size() > 3) continue;
        const auto phi = build_phi(k);
        for (const auto& y : corpus) {
            if (!(y.signature() == k.signature()) || y.size() < k.size()) continue;
            oracle::each_subset(y.size(), k.size(), [&](const std::vector<Element>& h) {
                auto tuple = h;
                do {
                    CHECK(eval(y, phi, Assignment(tuple)) == oracle::isomorphic(k, oracle::restrict(y, h)));
                    ++checked;
                } while (std::next_permutation(tuple.begin(), tuple.end()));
            });
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("build_psi: examples") {
    auto psi = build_psi(edge());
    CHECK(psi.is_sentence());
    CHECK(eval(triangle(), psi));
    CHECK_FALSE(eval(one_edge(), psi));
    CHECK(eval(Structure(kBinary, 1), psi));
    Structure point(kBinary, 1);
    CHECK(build_psi(point).to_string() == "A v0 " + build_phi(point).to_string());
}

TEST_CASE("build_psi agrees with the all-subsets oracle") {
    const auto corpus = standard_corpus(5);
    for (const auto& k : corpus) {
        if (k.size() == 0 || k.size() > 3) continue;
        const auto psi = build_psi(k);
        for (const auto& y : corpus)
            if (y.signature() == k.signature()) CHECK(eval(y, psi) == oracle::all_subsets_isomorphic_to(y, k));
    }
}

TEST_CASE("build_psi_n") {
    auto psi1 = build_psi_n(kBinary, 1);
    REQUIRE(psi1.root().kind == NodeKind::Or);
    CHECK(psi1.root().children.size() == 2);
    for (int n = 1; n <= 3; ++n) CHECK(eval(Structure(kBinary, 4), build_psi_n(kBinary, n)));
    CHECK_THROWS_AS(build_psi_n(kBinary, 4), DomainError);
    CHECK_THROWS_AS(build_psi_n(Signature({{"R", 2}}), 3, SentenceCaps{6, 50, 20}), DomainError);
}

TEST_CASE("psi_n expresses n-monomorphy on the corpus") {
    const auto corpus = standard_corpus(5);
    std::map<std::string, std::vector<Formula>> by_signature;
    std::size_t checked = 0;
    for (const auto& y : corpus) {
        auto& cache = by_signature[y.signature().to_string()];
        if (cache.empty()) {
            // Stops at the first n whose class enumeration exceeds the caps
            // (ternary signatures at n = 3).
            try {
                for (int n = 1; n <= 3; ++n) cache.push_back(build_psi_n(y.signature(), n, SentenceCaps{6, 4096, 20}));
            } catch (const DomainError&) {
            }
        }
        for (int n = 1; n <= std::min(3, y.size()) && n <= static_cast<int>(cache.size()); ++n) {
            CHECK(eval(y, cache[static_cast<std::size_t>(n - 1)]) == is_k_monomorphic(y, n).monomorphic);
            ++checked;
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("star_translate: examples") {
    const Signature r2({{"R", 2}});
    const auto order = Signature::order();
    OrderDefinitions defs{r2, {parse_formula("v0 < v1", order)}};
    CHECK(star_translate(parse_formula("R(v0,v1)", r2), defs).to_string() == "v0 < v1");
    CHECK(star_translate(parse_formula("R(v2,v0)", r2), defs).to_string() == "v2 < v0");

    const Signature s3({{"S", 3}});
    OrderDefinitions betw{s3, {betweenness_formula()}};
    CHECK(star_translate(parse_formula("E v1 S(v0,v1,v2)", s3), betw) ==
          parse_formula("E v1 (v0<v1<v2 | v2<v1<v0)", order));

    OrderDefinitions missing{Signature({{"T", 2}}), {parse_formula("v0 < v1", order)}};
    CHECK_THROWS_AS(star_translate(parse_formula("R(v0,v1)", r2), missing), DomainError);
    OrderDefinitions quantified{r2, {parse_formula("E v2 v0 < v2", order)}};
    CHECK_THROWS_AS(star_translate(parse_formula("R(v0,v1)", r2), quantified), DomainError);
}

TEST_CASE("star translation preserves satisfaction") {
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        const auto sig = random_signature(rng, 2, 3);
        const auto defs = random_definitions(sig, rng);
        const auto x = random_order(static_cast<int>(uniform_int(rng, 1, 5)), rng);
        const auto phi = random_formula(sig, rng, 3, 4, 3);
        std::vector<Element> a;
        for (int v = 0; v < 3; ++v) a.push_back(static_cast<Element>(uniform_int(rng, 0, x.size() - 1)));
        CHECK(eval(order_structure(x), star_translate(phi, defs), Assignment(a)) ==
              eval(derive_structure(x, defs), phi, Assignment(a)));
    }
}

TEST_CASE("reduce_duplicate_relations: examples") {
    Structure y(Signature({{"R1", 2}, {"R2", 2}, {"P", 1}}), 3);
    for (const auto& t : std::vector<std::vector<Element>>{{0, 1}, {1, 2}}) {
        y.insert(0, t);
        y.insert(1, t);
    }
    y.insert(2, {0});
    auto r = reduce_duplicate_relations(y);
    CHECK(r.reduced.signature().to_string() == "R1/2 P/1");
    CHECK(r.representative == std::vector<std::size_t>{0, 0, 1});
    CHECK(r.translate(parse_formula("R2(v0,v1)", y.signature())).to_string() == "R1(v0,v1)");

    auto id = reduce_duplicate_relations(triangle());
    CHECK(id.reduced == triangle());
    CHECK(id.representative == std::vector<std::size_t>{0});

    // Equal extensions of different arity are not merged.
    Structure z(Signature({{"A", 1}, {"B", 2}}), 2);
    CHECK(reduce_duplicate_relations(z).reduced.signature().size() == 2);
}

TEST_CASE("reduction preserves satisfaction") {
    Rng rng(51);
    for (int i = 0; i < 60; ++i) {
        const int n = static_cast<int>(uniform_int(rng, 1, 4));
        Structure base = generate({GeneratorKind::Random, n, static_cast<std::uint64_t>(i), 0.4, Signature({{"R", 2}, {"S", 1}})});
        Structure y(Signature({{"R", 2}, {"S", 1}, {"R_copy", 2}}), n);
        y.set_relation(0, base.relation(0));
        y.set_relation(1, base.relation(1));
        y.set_relation(2, base.relation(0));
        const auto r = reduce_duplicate_relations(y);
        CHECK(r.reduced.signature().size() == 2);
        for (int j = 0; j < 20; ++j) {
            auto phi = random_formula(y.signature(), rng, 3, 3, 2);
            std::vector<Element> a;
            for (int v = 0; v < 3; ++v) a.push_back(static_cast<Element>(uniform_int(rng, 0, n - 1)));
            CHECK(eval(y, phi, Assignment(a)) == eval(r.reduced, r.translate(phi), Assignment(a)));
        }
    }
}
