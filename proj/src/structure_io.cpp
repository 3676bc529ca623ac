#include "monostruct/error.hpp"
#include "monostruct/structure.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <unordered_map>

namespace mono {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string_view strip_comment(std::string_view s) {
    auto hash = s.find('#');
    return hash == std::string_view::npos ? s : s.substr(0, hash);
}

std::optional<int> to_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

// `keyword rest` -> rest, if the line starts with the keyword followed by whitespace or end.
std::optional<std::string_view> after_keyword(std::string_view line, std::string_view keyword) {
    if (line.substr(0, keyword.size()) != keyword) return std::nullopt;
    auto rest = line.substr(keyword.size());
    if (!rest.empty() && !std::isspace(static_cast<unsigned char>(rest.front()))) return std::nullopt;
    return trim(rest);
}

class StructureReader {
public:
    explicit StructureReader(std::string_view text) : text_(text) {}

    ParsedStructure read() {
        std::optional<Signature> sig;
        std::optional<Structure> out;
        std::vector<std::string> names;
        std::unordered_map<std::string, int> name_index;

        while (next_line()) {
            if (!sig) {
                auto rest = after_keyword(line_, "signature");
                if (!rest) fail("expected 'signature <name>/<arity> ...'");
                try {
                    sig = parse_signature(*rest);
                } catch (const ParseError& e) {
                    fail(e.what());
                }
                continue;
            }
            if (!out) {
                auto rest = after_keyword(line_, "domain");
                if (!rest) fail("expected 'domain <n>'");
                auto n = to_int(*rest);
                if (!n || *n < 0) fail("domain size must be a non-negative integer");
                try {
                    out.emplace(*sig, *n);
                } catch (const DomainError& e) {
                    fail(e.what());
                }
                continue;
            }
            if (auto rest = after_keyword(line_, "names")) {
                if (!names.empty()) fail("duplicate 'names' line");
                std::size_t pos = 0;
                auto list = *rest;
                while (pos < list.size()) {
                    while (pos < list.size() && std::isspace(static_cast<unsigned char>(list[pos]))) ++pos;
                    auto start = pos;
                    while (pos < list.size() && !std::isspace(static_cast<unsigned char>(list[pos]))) ++pos;
                    if (start < pos) {
                        std::string name(list.substr(start, pos - start));
                        if (name_index.count(name)) fail("duplicate element name '" + name + "'");
                        name_index.emplace(name, static_cast<int>(names.size()));
                        names.push_back(std::move(name));
                    }
                }
                if (static_cast<int>(names.size()) != out->size())
                    fail("'names' lists " + std::to_string(names.size()) + " elements but the domain has " +
                         std::to_string(out->size()));
                continue;
            }
            read_extension_line(*out, name_index);
        }
        if (!sig) fail("missing 'signature' line");
        if (!out) fail("missing 'domain' line");
        return {std::move(*out), std::move(names)};
    }

private:
    bool next_line() {
        while (pos_ <= text_.size()) {
            auto end = text_.find('\n', pos_);
            if (end == std::string_view::npos) end = text_.size();
            line_ = trim(strip_comment(text_.substr(pos_, end - pos_)));
            pos_ = end + 1;
            ++line_no_;
            if (!line_.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_no_); }

    void read_extension_line(Structure& out, const std::unordered_map<std::string, int>& name_index) {
        auto colon = line_.find(':');
        if (colon == std::string_view::npos) fail("expected '<symbol>: (..) (..)'");
        auto name = trim(line_.substr(0, colon));
        auto symbol = out.signature().find(name);
        if (!symbol) fail("unknown symbol '" + std::string(name) + "'");
        const int arity = out.signature()[*symbol].arity;

        auto rest = line_.substr(colon + 1);
        std::size_t i = 0;
        auto skip_space = [&] {
            while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
        };
        while (true) {
            skip_space();
            if (i == rest.size()) break;
            if (rest[i] != '(') fail("expected '(' to start a tuple");
            auto close = rest.find(')', i);
            if (close == std::string_view::npos) fail("unterminated tuple");
            Tuple t;
            auto body = rest.substr(i + 1, close - i - 1);
            std::size_t p = 0;
            while (p <= body.size()) {
                auto comma = body.find(',', p);
                if (comma == std::string_view::npos) comma = body.size();
                auto item = trim(body.substr(p, comma - p));
                if (item.empty()) fail("empty tuple entry");
                t.push_back(element(item, out.size(), name_index));
                p = comma + 1;
            }
            if (static_cast<int>(t.size()) != arity)
                fail("arity mismatch: " + std::string(name) + " has arity " + std::to_string(arity) + " but tuple has " +
                     std::to_string(t.size()) + " entries");
            out.insert(*symbol, t);
            i = close + 1;
        }
    }

    Element element(std::string_view item, int size, const std::unordered_map<std::string, int>& name_index) const {
        if (auto it = name_index.find(std::string(item)); it != name_index.end()) return it->second;
        auto v = to_int(item);
        if (!v) fail("unknown element '" + std::string(item) + "'");
        if (*v < 0 || *v >= size)
            fail("element " + std::string(item) + " out of range for domain of size " + std::to_string(size));
        return *v;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_no_ = 0;
    std::string_view line_;
};

}  // namespace

ParsedStructure parse_structure_file(std::string_view text) { return StructureReader(text).read(); }

Structure parse_structure(std::string_view text) { return parse_structure_file(text).structure; }

std::string to_text(const Structure& s) {
    std::string out = "signature " + s.signature().to_string() + "\n";
    out += "domain " + std::to_string(s.size()) + "\n";
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        out += s.signature()[r].name + ":";
        for (const auto& t : s.tuples(r)) {
            out += " (";
            for (std::size_t j = 0; j < t.size(); ++j) {
                if (j) out += ',';
                out += std::to_string(t[j]);
            }
            out += ')';
        }
        out += '\n';
    }
    return out;
}

}  // namespace mono
