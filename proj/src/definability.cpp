#include "monostruct/combinatorics.hpp"
#include "monostruct/definability.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace mono {

std::string Pattern::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ranks[i]);
    }
    return out + ")";
}

Pattern tuple_pattern(std::span<const Element> t, const LinearOrder& x) {
    Pattern p;
    p.ranks.reserve(t.size());
    std::vector<int> pos;
    pos.reserve(t.size());
    for (Element e : t) {
        if (e < 0 || e >= x.size()) throw DomainError("tuple entry " + std::to_string(e) + " is outside the order's domain");
        pos.push_back(x.rank(e));
    }
    std::vector<int> distinct = pos;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int q : pos)
        p.ranks.push_back(static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), q) - distinct.begin()));
    return p;
}

std::size_t pattern_id(std::span<const int> ranks) {
    std::size_t id = 0;
    for (int r : ranks) id = id * ranks.size() + static_cast<std::size_t>(r);
    return id;
}

std::vector<Pattern> all_patterns(int arity) {
    std::vector<Pattern> out;
    for_each_tuple(arity, arity, [&](std::span<const int> t) {
        // A rank vector is valid iff its value set is {0..max}.
        int top = *std::max_element(t.begin(), t.end());
        for (int v = 0; v <= top; ++v)
            if (std::find(t.begin(), t.end(), v) == t.end()) return;
        out.push_back({std::vector<int>(t.begin(), t.end())});
    });
    return out;
}

NodePtr pattern_formula(const Pattern& p, int order_symbol) {
    std::vector<NodePtr> parts;
    const auto& r = p.ranks;
    for (std::size_t j = 0; j < r.size(); ++j)
        for (std::size_t k = j + 1; k < r.size(); ++k) {
            const int a = static_cast<int>(j), b = static_cast<int>(k);
            if (r[j] < r[k])
                parts.push_back(ast::atom(order_symbol, {a, b}));
            else if (r[j] == r[k])
                parts.push_back(ast::equal(a, b));
            else
                parts.push_back(ast::atom(order_symbol, {b, a}));
        }
    return ast::conj(std::move(parts));
}

std::optional<std::vector<std::pair<Element, Element>>> order_preserving_map(std::span<const Element> a,
                                                                             std::span<const Element> b,
                                                                             const LinearOrder& x) {
    if (a.size() != b.size()) return std::nullopt;
    std::map<Element, Element> f;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto [it, fresh] = f.emplace(a[i], b[i]);
        if (!fresh && it->second != b[i]) return std::nullopt;
    }
    std::vector<std::pair<Element, Element>> pairs(f.begin(), f.end());
    std::sort(pairs.begin(), pairs.end(), [&](auto& l, auto& r) { return x.less(l.first, r.first); });
    for (std::size_t i = 1; i < pairs.size(); ++i)
        if (!x.less(pairs[i - 1].second, pairs[i].second)) return std::nullopt;
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

namespace {
std::string tuple_text(const Tuple& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t[i]);
    }
    return out + ")";
}
}  // namespace

MixedPatternError::MixedPatternError(std::string symbol, Tuple member, Tuple non_member)
    : DomainError("MixedPattern: " + symbol + tuple_text(member) + " holds but " + symbol + tuple_text(non_member) +
                  " does not, although both tuples have the same order pattern"),
      symbol_(std::move(symbol)), member_(std::move(member)), non_member_(std::move(non_member)) {}

OrderDefinitions QFDefinition::definitions() const {
    OrderDefinitions out{signature, {}};
    for (const auto& s : symbols) out.formulas.push_back(s.formula);
    return out;
}

bool is_equality_invariant(const Structure& y, std::size_t symbol) {
    const auto& rel = y.relation(symbol);
    std::map<std::vector<int>, bool> seen;
    std::size_t idx = 0;
    bool invariant = true;
    for_each_tuple(y.size(), rel.arity(), [&](std::span<const Element> t) {
        const bool member = rel.contains_index(idx++);
        if (!invariant) return;
        std::vector<int> key(t.size());
        for (std::size_t j = 0; j < t.size(); ++j)
            key[j] = static_cast<int>(std::find(t.begin(), t.end(), t[j]) - t.begin());
        auto [it, fresh] = seen.emplace(std::move(key), member);
        if (!fresh && it->second != member) invariant = false;
    });
    return invariant;
}

QFDefinition synthesize_definition(const Structure& y, const LinearOrder& x) {
    if (x.size() != y.size()) throw DomainError("order size does not match the structure");
    const Signature order_sig = Signature::order();
    QFDefinition out{x, y.signature(), {}};
    for (std::size_t r = 0; r < y.signature().size(); ++r) {
        const auto& sym = y.signature()[r];
        const auto& rel = y.relation(r);
        const std::size_t ids = bounded_power(sym.arity, sym.arity, std::size_t{1} << 24);
        if (ids == 0) throw DomainError("arity too large for pattern tables");
        std::vector<int> state(ids, -1);
        std::vector<Tuple> first(ids);
        std::vector<Pattern> accepted;
        std::size_t idx = 0;
        for_each_tuple(y.size(), sym.arity, [&](std::span<const Element> t) {
            const int member = rel.contains_index(idx++) ? 1 : 0;
            Pattern p = tuple_pattern(t, x);
            const auto id = pattern_id(p.ranks);
            if (state[id] < 0) {
                state[id] = member;
                first[id].assign(t.begin(), t.end());
                if (member) accepted.push_back(std::move(p));
            } else if (state[id] != member) {
                Tuple here(t.begin(), t.end());
                if (member) throw MixedPatternError(sym.name, here, first[id]);
                throw MixedPatternError(sym.name, first[id], here);
            }
        });
        std::sort(accepted.begin(), accepted.end());
        std::vector<NodePtr> disjuncts;
        for (const auto& p : accepted) disjuncts.push_back(pattern_formula(p));
        out.symbols.push_back(
            {sym.name, sym.arity, accepted, is_equality_invariant(y, r), Formula(order_sig, ast::disj(std::move(disjuncts)))});
    }
    return out;
}

Structure derive_structure(const LinearOrder& x, const OrderDefinitions& defs) {
    defs.validate();
    const Structure ordered = order_structure(x);
    Structure out(defs.signature, x.size());
    for (std::size_t r = 0; r < defs.signature.size(); ++r) {
        const auto& phi = defs.formulas[r];
        std::size_t idx = 0;
        for_each_tuple(x.size(), defs.signature[r].arity, [&](std::span<const Element> t) {
            out.set(r, idx++, eval(ordered, phi, Assignment(std::vector<Element>(t.begin(), t.end()))));
        });
    }
    return out;
}

OrderDefinitions parse_definitions(std::string_view text) {
    std::vector<Symbol> symbols;
    std::vector<std::string> bodies;
    std::vector<int> lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError("expected '<name>/<arity>: <formula>'", line_no);
        Signature one;
        try {
            one = parse_signature(line.substr(0, colon));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
        if (one.size() != 1) throw ParseError("expected exactly one <name>/<arity> before ':'", line_no);
        symbols.push_back(one[0]);
        bodies.emplace_back(line.substr(colon + 1));
        lines.push_back(line_no);
    }
    OrderDefinitions defs;
    try {
        defs.signature = Signature(symbols);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    const Signature order = Signature::order();
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        try {
            defs.formulas.push_back(parse_formula(bodies[i], order));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lines[i]);
        }
    }
    defs.validate();
    return defs;
}

std::string to_text(const OrderDefinitions& defs) {
    std::string out;
    for (std::size_t i = 0; i < defs.signature.size(); ++i)
        out += defs.signature[i].name + "/" + std::to_string(defs.signature[i].arity) + ": " + defs.formulas[i].to_string() + "\n";
    return out;
}

}  // namespace mono
