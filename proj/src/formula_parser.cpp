#include "monostruct/error.hpp"
#include "monostruct/formula.hpp"

#include <cctype>

namespace mono {

namespace {

enum class Tok { Var, Ident, LParen, RParen, Comma, Not, And, Or, Arrow, Eq, Less, End };

struct Token {
    Tok kind;
    std::string text;
    int var = -1;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        Token t{Tok::End, "", -1, i_};
        if (i_ == s_.size()) return t;
        const char c = s_[i_];
        auto single = [&](Tok k) {
            t.kind = k;
            t.text = std::string(1, c);
            ++i_;
            return t;
        };
        switch (c) {
        case '(': return single(Tok::LParen);
        case ')': return single(Tok::RParen);
        case ',': return single(Tok::Comma);
        case '~': return single(Tok::Not);
        case '&': return single(Tok::And);
        case '|': return single(Tok::Or);
        case '=': return single(Tok::Eq);
        case '<': return single(Tok::Less);
        case '-':
            if (i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
                i_ += 2;
                t.kind = Tok::Arrow;
                t.text = "->";
                return t;
            }
            break;
        default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            t.text = std::string(s_.substr(start, i_ - start));
            bool is_var = t.text.size() > 1 && t.text[0] == 'v';
            for (std::size_t j = 1; is_var && j < t.text.size(); ++j)
                is_var = std::isdigit(static_cast<unsigned char>(t.text[j])) != 0;
            if (is_var) {
                t.kind = Tok::Var;
                t.var = std::stoi(t.text.substr(1));
            } else {
                t.kind = Tok::Ident;
            }
            return t;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i_));
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

class Parser {
public:
    Parser(std::string_view text, const Signature& sig) : lex_(text), sig_(sig) {
        cur_ = lex_.next();
        peek_ = lex_.next();
    }

    NodePtr parse() {
        auto n = formula();
        if (cur_.kind != Tok::End) fail("unexpected '" + cur_.text + "' after the formula");
        return n;
    }

private:
    void advance() {
        cur_ = peek_;
        peek_ = lex_.next();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " (offset " + std::to_string(cur_.pos) + ")");
    }

    void expect(Tok k, const char* what) {
        if (cur_.kind != k) fail(std::string("expected ") + what);
        advance();
    }

    int variable() {
        if (cur_.kind != Tok::Var) fail("expected a variable v<k>");
        int v = cur_.var;
        advance();
        return v;
    }

    NodePtr formula() {
        switch (cur_.kind) {
        case Tok::Not:
            advance();
            return ast::negate(formula());
        case Tok::LParen: return parenthesized();
        case Tok::Var: return variable_atom();
        case Tok::Ident: {
            if ((cur_.text == "A" || cur_.text == "E") && peek_.kind == Tok::Var) {
                const bool universal = cur_.text == "A";
                advance();
                int v = variable();
                auto body = formula();
                return universal ? ast::forall(v, body) : ast::exists(v, body);
            }
            if (cur_.text == "true" && peek_.kind != Tok::LParen) {
                advance();
                return ast::truth();
            }
            if (cur_.text == "false" && peek_.kind != Tok::LParen) {
                advance();
                return ast::falsity();
            }
            return relation_atom();
        }
        default: fail("expected a formula");
        }
    }

    NodePtr parenthesized() {
        expect(Tok::LParen, "'('");
        std::vector<NodePtr> parts{formula()};
        if (cur_.kind == Tok::Arrow) {
            advance();
            auto rhs = formula();
            expect(Tok::RParen, "')'");
            return ast::implies(parts[0], rhs);
        }
        Tok op = cur_.kind;
        if (op == Tok::And || op == Tok::Or) {
            while (cur_.kind == op) {
                advance();
                parts.push_back(formula());
            }
            if (cur_.kind == Tok::And || cur_.kind == Tok::Or || cur_.kind == Tok::Arrow)
                fail("mixed connectives need explicit parentheses");
        }
        expect(Tok::RParen, "')'");
        if (op == Tok::And) return ast::conj(std::move(parts));
        if (op == Tok::Or) return ast::disj(std::move(parts));
        return parts[0];
    }

    NodePtr variable_atom() {
        int first = variable();
        if (cur_.kind == Tok::Eq) {
            advance();
            return ast::equal(first, variable());
        }
        if (cur_.kind == Tok::Less) {
            auto order = sig_.find("<");
            if (!order) fail("'<' used but the signature has no </2 symbol");
            std::vector<NodePtr> links;
            int prev = first;
            while (cur_.kind == Tok::Less) {
                advance();
                int next = variable();
                links.push_back(ast::atom(static_cast<int>(*order), {prev, next}));
                prev = next;
            }
            return ast::conj(std::move(links));
        }
        fail("expected '=' or '<' after a variable");
    }

    NodePtr relation_atom() {
        const std::string name = cur_.text;
        auto symbol = sig_.find(name);
        if (!symbol) fail("unknown symbol '" + name + "'");
        advance();
        expect(Tok::LParen, "'(' after a relation symbol");
        std::vector<int> args{variable()};
        while (cur_.kind == Tok::Comma) {
            advance();
            args.push_back(variable());
        }
        expect(Tok::RParen, "')'");
        const int arity = sig_[*symbol].arity;
        if (static_cast<int>(args.size()) != arity)
            fail("arity mismatch: " + name + " has arity " + std::to_string(arity) + " but got " +
                 std::to_string(args.size()) + " arguments");
        return ast::atom(static_cast<int>(*symbol), std::move(args));
    }

    Lexer lex_;
    const Signature& sig_;
    Token cur_{Tok::End, "", -1, 0};
    Token peek_{Tok::End, "", -1, 0};
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) { return Formula(sig, Parser(text, sig).parse()); }

}  // namespace mono
