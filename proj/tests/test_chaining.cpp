#include "monostruct/chaining.hpp"
#include "monostruct/combinatorics.hpp"
#include "monostruct/corpus.hpp"
#include "monostruct/definability.hpp"
#include "monostruct/error.hpp"
#include "monostruct/monomorphy.hpp"
#include "monostruct/report.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <fstream>

using namespace mono;

namespace {

Structure triangle() { return generate({GeneratorKind::Triangle, 3}); }

std::vector<LinearOrder> all_orders(int n) {
    std::vector<LinearOrder> out;
    auto p = identity_permutation(n);
    do {
        out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::vector<Element>> ascending_lists(const ChainSet& c) {
    std::vector<std::vector<Element>> out;
    for (const auto& x : c.orders) out.push_back(x.ascending());
    return out;
}

}  // namespace

TEST_CASE("chains: examples") {
    CHECK(chains(generate({GeneratorKind::Betweenness, 4}), LinearOrder::natural(4)).chains);
    for (const auto& x : all_orders(3)) {
        auto c = chains(triangle(), x);
        CHECK_FALSE(c.chains);
        REQUIRE(c.witness);
        CHECK(c.witness->symbol == "R");
    }
    Structure empty(Signature({{"R", 2}, {"S", 3}}), 4);
    for (const auto& x : all_orders(4)) CHECK(chains(empty, x).chains);
    CHECK_THROWS_AS(chains(triangle(), LinearOrder::natural(4)), DomainError);
}

TEST_CASE("chains agrees with the partial-automorphism oracle") {
    Rng rng(3);
    for (const auto& y : standard_corpus(6)) {
        for (int i = 0; i < 6; ++i) {
            const auto x = i == 0 ? LinearOrder::natural(y.size()) : random_order(y.size(), rng);
            const auto c = chains(y, x);
            CHECK(c.chains == oracle::chains(y, x.ascending()));
            if (!c.chains) {
                REQUIRE(c.witness);
                const auto symbol = *y.signature().find(c.witness->symbol);
                CHECK(y.contains(symbol, c.witness->member));
                CHECK_FALSE(y.contains(symbol, c.witness->non_member));
                CHECK(tuple_pattern(c.witness->member, x) == tuple_pattern(c.witness->non_member, x));
            }
        }
    }
}

TEST_CASE("enumerate_chaining_orders: examples") {
    CHECK(enumerate_chaining_orders(triangle()).empty());

    auto k = enumerate_chaining_orders(generate({GeneratorKind::Constant, 4}));
    CHECK(k.size() == 24);

    auto c = enumerate_chaining_orders(generate({GeneratorKind::Cyclic, 4}));
    CHECK(c.size() == 8);
    for (int r = 0; r < 4; ++r) {
        std::vector<Element> rotation;
        for (int i = 0; i < 4; ++i) rotation.push_back((r + i) % 4);
        CHECK(c.contains(LinearOrder(rotation)));
        CHECK(c.contains(LinearOrder(rotation).reversed()));
    }

    auto z = enumerate_chaining_orders(Structure(Signature({{"R", 2}}), 0));
    CHECK(z.size() == 1);
    CHECK_THROWS_AS(enumerate_chaining_orders(Structure(Signature({{"R", 1}}), 10)), DomainError);
}

TEST_CASE("enumeration matches the naive filter and the oracle for n <= 6") {
    for (const auto& y : standard_corpus(6)) {
        const auto fast = enumerate_chaining_orders(y);
        CHECK(ascending_lists(fast) == ascending_lists(naive_chaining_orders(y)));
        if (y.size() <= 5) CHECK(ascending_lists(fast) == oracle::chaining_orders(y));
    }
}

TEST_CASE("enumeration is thread independent") {
    for (const auto& y : standard_corpus(6))
        for (int t : {2, 3, 8}) CHECK(ascending_lists(enumerate_chaining_orders(y, 9, t)) == ascending_lists(enumerate_chaining_orders(y)));
}

TEST_CASE("chain sets are closed under reversal") {
    for (const auto& y : standard_corpus(6))
        for (const auto& x : all_orders(y.size())) CHECK(chains(y, x).chains == chains(y, x.reversed()).chains);
}

TEST_CASE("chainable implies monomorphic, with an exact round trip") {
    for (const auto& y : standard_corpus(6)) {
        const auto set = enumerate_chaining_orders(y);
        if (set.empty()) continue;
        CHECK(is_monomorphic(y).monomorphic);
        for (const auto& x : set.orders) CHECK(derive_structure(x, synthesize_definition(y, x).definitions()) == y);
    }
}

TEST_CASE("classify_chain_set: examples") {
    auto k = generate({GeneratorKind::Constant, 4});
    auto rk = classify_chain_set(k, enumerate_chaining_orders(k));
    CHECK(rk.kind == Trichotomy::Constant);
    CHECK(rk.chain_count == 24);

    for (int n = 4; n <= 6; ++n) {
        auto c = generate({GeneratorKind::Cyclic, n});
        auto rc = classify_chain_set(c, enumerate_chaining_orders(c));
        CHECK(rc.kind == Trichotomy::CutReversal);
        REQUIRE(rc.witness);
        CHECK(cut_reversal_closure(*rc.witness).size() == static_cast<std::size_t>(2 * n));

        auto b = generate({GeneratorKind::Betweenness, n});
        auto rb = classify_chain_set(b, enumerate_chaining_orders(b));
        CHECK(rb.kind == Trichotomy::Kernel);
        CHECK(rb.prefix.empty());
        CHECK(rb.suffix.empty());
        CHECK(rb.middle == identity_permutation(n));
        CHECK_FALSE(rb.degenerate);
    }
    CHECK_THROWS_AS(classify_chain_set(ChainSet{3, {}}), DomainError);
}

TEST_CASE("classify_chain_set: kernel blocks and none-of-these") {
    // S(a,b,c) iff a < b, c < b and c != a: the two least elements can be
    // exchanged without changing any pattern's membership.
    const Signature s3({{"S", 3}});
    const auto y = derive_structure(LinearOrder::natural(5),
                                    {s3, {parse_formula("(v0 < v1 & v2 < v1 & ~v2 = v0)", Signature::order())}});
    const auto set = enumerate_chaining_orders(y);
    const auto r = classify_chain_set(y, set);
    CHECK(r.kind == Trichotomy::Kernel);
    CHECK(set.size() == 4);
    CHECK(r.chain_count == set.size());
    CHECK(r.prefix.size() + r.suffix.size() == 2);
    REQUIRE(r.witness);
    std::set<LinearOrder> family;
    for (const auto& x : kernel_family(*r.witness, static_cast<int>(r.prefix.size()), static_cast<int>(r.suffix.size())))
        family.insert(x);
    CHECK(std::vector<LinearOrder>(family.begin(), family.end()) == set.orders);
    CHECK(r.degenerate == r.middle.empty());

    // An arbitrary pair of orders that is not closed in any of the three ways.
    ChainSet odd{4, {LinearOrder({0, 1, 2, 3}), LinearOrder({1, 0, 3, 2})}};
    CHECK(classify_chain_set(odd).kind == Trichotomy::NoneOfThese);
}

TEST_CASE("trichotomy fixtures match the frozen oracle baseline") {
    std::ifstream in(std::string(MONOSTRUCT_GOLDEN_DIR) + "/trichotomy.json");
    REQUIRE(in);
    const auto golden = Json::parse(in);
    CHECK(golden.size() == 12);
    for (const auto& f : golden) {
        const int n = f["size"].get<int>();
        if (n > 6) continue;  // sizes 7 run in the acceptance suite
        const auto y = generate({parse_generator_kind(f["generator"].get<std::string>()), n});
        const auto set = enumerate_chaining_orders(y);
        const auto r = classify_chain_set(y, set);
        CHECK(to_string(r.kind) == f["kind"].get<std::string>());
        CHECK(set.size() == f["chain_count"].get<std::size_t>());
        CHECK(ascending_lists(set) == f["orders"].get<std::vector<std::vector<Element>>>());
    }
}

TEST_CASE("transport_order") {
    auto x = LinearOrder({2, 0, 1});
    CHECK(transport_order(Bijection{{0, 1, 2}}, x) == x);

    auto t = triangle();
    auto z = relabel(t, Bijection{{2, 0, 1}});
    auto f = find_isomorphism(z, t);
    REQUIRE(f);
    for (const auto& o : all_orders(3)) CHECK_FALSE(chains(z, transport_order(*f, o)).chains);

    Rng rng(8);
    for (int n = 4; n <= 6; ++n) {
        auto y = generate({GeneratorKind::Cyclic, n});
        auto zc = relabel(y, Bijection{random_order(n, rng).ascending()});
        auto g = find_isomorphism(zc, y);
        REQUIRE(g);
        std::vector<LinearOrder> pulled;
        for (const auto& o : enumerate_chaining_orders(y).orders) {
            CHECK(chains(zc, transport_order(*g, o)).chains);
            pulled.push_back(transport_order(*g, o));
        }
        std::sort(pulled.begin(), pulled.end());
        CHECK(pulled == enumerate_chaining_orders(zc).orders);
    }
}
