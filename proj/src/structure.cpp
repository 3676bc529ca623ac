#include "monostruct/structure.hpp"

#include "monostruct/combinatorics.hpp"
#include "monostruct/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace mono {

namespace {

constexpr std::uint64_t kMaxRelationCells = std::uint64_t{1} << 24;

bool valid_symbol_name(std::string_view name) {
    if (name == "<") return true;
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto& s = symbols_[i];
        if (!valid_symbol_name(s.name)) throw DomainError("invalid symbol name '" + s.name + "'");
        if (s.arity < 1) throw DomainError("symbol " + s.name + " must have arity >= 1");
        if (s.name == "<" && s.arity != 2) throw DomainError("the order symbol < must be binary");
        for (std::size_t j = 0; j < i; ++j)
            if (symbols_[j].name == s.name) throw DomainError("duplicate symbol name '" + s.name + "'");
    }
}

Signature Signature::order() { return Signature({{"<", 2}}); }

std::optional<std::size_t> Signature::find(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name == name) return i;
    return std::nullopt;
}

Signature Signature::reduct(std::span<const std::size_t> keep) const {
    std::vector<Symbol> out;
    out.reserve(keep.size());
    for (std::size_t i : keep) out.push_back(symbols_.at(i));
    return Signature(std::move(out));
}

std::string Signature::to_string() const {
    std::string out;
    for (const auto& s : symbols_) {
        if (!out.empty()) out += ' ';
        out += s.name + "/" + std::to_string(s.arity);
    }
    return out;
}

Signature parse_signature(std::string_view text) {
    std::vector<Symbol> symbols;
    std::istringstream in{std::string(text)};
    std::string word;
    while (in >> word) {
        auto slash = word.rfind('/');
        if (slash == std::string::npos || slash == 0) throw ParseError("expected <name>/<arity>, got '" + word + "'");
        int arity = 0;
        auto digits = std::string_view(word).substr(slash + 1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), arity);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw ParseError("bad arity in '" + word + "'");
        symbols.push_back({word.substr(0, slash), arity});
    }
    try {
        return Signature(std::move(symbols));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

Relation::Relation(int arity, int domain_size) : arity_(arity), domain_(domain_size) {
    if (domain_size < 0) throw DomainError("negative domain size");
    auto cells = bounded_power(domain_size, arity, kMaxRelationCells);
    if (cells == 0 && domain_size > 0)
        throw DomainError("relation of arity " + std::to_string(arity) + " over " + std::to_string(domain_size) +
                          " elements exceeds the dense representation limit");
    bits_.assign(cells, 0);
}

std::size_t Relation::count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)); }

std::vector<Tuple> Relation::tuples() const {
    std::vector<Tuple> out;
    std::size_t i = 0;
    for_each_tuple(domain_, arity_, [&](std::span<const Element> t) {
        if (bits_[i++]) out.emplace_back(t.begin(), t.end());
    });
    return out;
}

Structure::Structure(Signature signature, int size) : signature_(std::move(signature)), size_(size) {
    if (size < 0) throw DomainError("negative domain size");
    relations_.reserve(signature_.size());
    for (const auto& s : signature_.symbols()) relations_.emplace_back(s.arity, size);
}

void Structure::insert(std::size_t symbol, std::span<const Element> t) {
    if (symbol >= relations_.size()) throw DomainError("unknown symbol index");
    const auto& sym = signature_[symbol];
    if (static_cast<int>(t.size()) != sym.arity)
        throw DomainError("arity mismatch: " + sym.name + " has arity " + std::to_string(sym.arity) + " but tuple has " +
                          std::to_string(t.size()) + " entries");
    for (Element e : t)
        if (e < 0 || e >= size_)
            throw DomainError("element " + std::to_string(e) + " out of range for domain of size " + std::to_string(size_));
    relations_[symbol].insert(t);
}

void Structure::insert(std::string_view symbol, std::initializer_list<Element> t) {
    auto i = signature_.find(symbol);
    if (!i) throw DomainError("unknown symbol '" + std::string(symbol) + "'");
    insert(*i, std::span<const Element>(t.begin(), t.size()));
}

void Structure::set_relation(std::size_t symbol, Relation r) {
    if (r.arity() != signature_[symbol].arity || r.domain_size() != size_)
        throw DomainError("relation shape does not match symbol " + signature_[symbol].name);
    relations_.at(symbol) = std::move(r);
}

Structure Structure::reduct(std::span<const std::size_t> keep) const {
    Structure out(signature_.reduct(keep), size_);
    for (std::size_t i = 0; i < keep.size(); ++i) out.relations_[i] = relations_.at(keep[i]);
    return out;
}

bool Bijection::is_permutation() const {
    std::vector<bool> seen(forward.size(), false);
    for (Element e : forward) {
        if (e < 0 || e >= size() || seen[static_cast<std::size_t>(e)]) return false;
        seen[static_cast<std::size_t>(e)] = true;
    }
    return true;
}

Bijection Bijection::inverse() const {
    if (!is_permutation()) throw DomainError("map is not a bijection of {0..n-1}");
    Bijection inv{std::vector<Element>(forward.size())};
    for (std::size_t i = 0; i < forward.size(); ++i) inv.forward[static_cast<std::size_t>(forward[i])] = static_cast<Element>(i);
    return inv;
}

Tuple Bijection::apply(std::span<const Element> t) const {
    Tuple out;
    out.reserve(t.size());
    for (Element e : t) out.push_back(forward.at(static_cast<std::size_t>(e)));
    return out;
}

std::string CanonicalCode::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out += digits[c >> 4];
        out += digits[c & 15];
    }
    return out;
}

Structure induced_substructure(const Structure& s, std::span<const Element> subset) {
    if (subset.empty()) throw DomainError("induced substructure needs a nonempty subset");
    std::vector<Element> h(subset.begin(), subset.end());
    std::sort(h.begin(), h.end());
    if (std::adjacent_find(h.begin(), h.end()) != h.end()) throw DomainError("subset has repeated elements");
    if (h.front() < 0 || h.back() >= s.size()) throw DomainError("subset is not contained in the domain");

    const int m = static_cast<int>(h.size());
    Structure out(s.signature(), m);
    Tuple image;
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        const auto& rel = s.relation(r);
        Relation restricted(rel.arity(), m);
        std::size_t idx = 0;
        for_each_tuple(m, rel.arity(), [&](std::span<const Element> t) {
            image.clear();
            for (Element e : t) image.push_back(h[static_cast<std::size_t>(e)]);
            restricted.set_index(idx++, rel.contains(image));
        });
        out.set_relation(r, std::move(restricted));
    }
    return out;
}

Structure relabel(const Structure& s, const Bijection& p) {
    if (p.size() != s.size() || !p.is_permutation()) throw DomainError("relabel needs a permutation of the domain");
    Structure out(s.signature(), s.size());
    for (std::size_t r = 0; r < s.signature().size(); ++r)
        for (const auto& t : s.tuples(r)) out.insert(r, p.apply(t));
    return out;
}

bool is_isomorphism(const Structure& a, const Structure& b, const Bijection& f) {
    if (a.signature() != b.signature()) throw DomainError("signature mismatch");
    if (a.size() != b.size() || f.size() != a.size() || !f.is_permutation()) return false;
    Tuple image;
    for (std::size_t r = 0; r < a.signature().size(); ++r) {
        const auto& ra = a.relation(r);
        const auto& rb = b.relation(r);
        std::size_t idx = 0;
        bool ok = true;
        for_each_tuple(a.size(), ra.arity(), [&](std::span<const Element> t) {
            if (!ok) return;
            image.clear();
            for (Element e : t) image.push_back(f(e));
            if (ra.contains_index(idx++) != rb.contains(image)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace mono
