#include "monostruct/error.hpp"
#include "monostruct/formula.hpp"

#include <algorithm>
#include <functional>

namespace mono {

namespace ast {

namespace {
NodePtr make(NodeKind kind, int symbol, std::vector<int> vars, std::vector<NodePtr> children) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->symbol = symbol;
    n->vars = std::move(vars);
    n->children = std::move(children);
    return n;
}
}  // namespace

NodePtr truth() {
    static const NodePtr t = make(NodeKind::True, -1, {}, {});
    return t;
}

NodePtr falsity() {
    static const NodePtr f = make(NodeKind::False, -1, {}, {});
    return f;
}

NodePtr equal(int k, int l) { return make(NodeKind::Equal, -1, {k, l}, {}); }

NodePtr atom(int symbol, std::vector<int> args) { return make(NodeKind::Relation, symbol, std::move(args), {}); }

NodePtr negate(NodePtr body) { return make(NodeKind::Not, -1, {}, {std::move(body)}); }

NodePtr conj(std::vector<NodePtr> parts) {
    if (parts.empty()) return truth();
    if (parts.size() == 1) return parts.front();
    return make(NodeKind::And, -1, {}, std::move(parts));
}

NodePtr disj(std::vector<NodePtr> parts) {
    if (parts.empty()) return falsity();
    if (parts.size() == 1) return parts.front();
    return make(NodeKind::Or, -1, {}, std::move(parts));
}

NodePtr implies(NodePtr premise, NodePtr conclusion) {
    return make(NodeKind::Implies, -1, {}, {std::move(premise), std::move(conclusion)});
}

NodePtr forall(int var, NodePtr body) { return make(NodeKind::Forall, -1, {var}, {std::move(body)}); }

NodePtr exists(int var, NodePtr body) { return make(NodeKind::Exists, -1, {var}, {std::move(body)}); }

}  // namespace ast

bool equal_trees(const Node& a, const Node& b) {
    if (&a == &b) return true;
    if (a.kind != b.kind || a.symbol != b.symbol || a.vars != b.vars || a.children.size() != b.children.size())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!equal_trees(*a.children[i], *b.children[i])) return false;
    return true;
}

namespace {

void check_tree(const Signature& sig, const Node& n) {
    if (n.kind == NodeKind::Relation) {
        if (n.symbol < 0 || static_cast<std::size_t>(n.symbol) >= sig.size())
            throw DomainError("relation atom refers to a symbol outside the signature");
        const auto& s = sig[static_cast<std::size_t>(n.symbol)];
        if (static_cast<int>(n.vars.size()) != s.arity)
            throw DomainError("arity mismatch: " + s.name + " has arity " + std::to_string(s.arity) + " but atom has " +
                              std::to_string(n.vars.size()) + " arguments");
    }
    for (int v : n.vars)
        if (v < 0) throw DomainError("negative variable index");
    for (const auto& c : n.children) check_tree(sig, *c);
}

void collect_free(const Node& n, std::vector<int>& bound, std::set<int>& out) {
    switch (n.kind) {
    case NodeKind::Equal:
    case NodeKind::Relation:
        for (int v : n.vars)
            if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
        return;
    case NodeKind::Forall:
    case NodeKind::Exists:
        bound.push_back(n.vars[0]);
        collect_free(*n.children[0], bound, out);
        bound.pop_back();
        return;
    default:
        for (const auto& c : n.children) collect_free(*c, bound, out);
    }
}

void print(const Signature& sig, const Node& n, std::string& out) {
    auto var = [&](int v) { out += 'v' + std::to_string(v); };
    auto join = [&](std::string_view op) {
        out += '(';
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            if (i) out += op;
            print(sig, *n.children[i], out);
        }
        out += ')';
    };
    switch (n.kind) {
    case NodeKind::True: out += "true"; return;
    case NodeKind::False: out += "false"; return;
    case NodeKind::Equal:
        var(n.vars[0]);
        out += " = ";
        var(n.vars[1]);
        return;
    case NodeKind::Relation: {
        const auto& name = sig[static_cast<std::size_t>(n.symbol)].name;
        if (name == "<") {
            var(n.vars[0]);
            out += " < ";
            var(n.vars[1]);
            return;
        }
        out += name + '(';
        for (std::size_t i = 0; i < n.vars.size(); ++i) {
            if (i) out += ',';
            var(n.vars[i]);
        }
        out += ')';
        return;
    }
    case NodeKind::Not:
        out += '~';
        print(sig, *n.children[0], out);
        return;
    case NodeKind::And: join(" & "); return;
    case NodeKind::Or: join(" | "); return;
    case NodeKind::Implies: join(" -> "); return;
    case NodeKind::Forall:
    case NodeKind::Exists:
        out += n.kind == NodeKind::Forall ? "A " : "E ";
        var(n.vars[0]);
        out += ' ';
        print(sig, *n.children[0], out);
        return;
    }
}

NodePtr map_tree(const Node& n, const std::function<NodePtr(const Node&)>& leaf) {
    switch (n.kind) {
    case NodeKind::True:
    case NodeKind::False:
    case NodeKind::Equal:
    case NodeKind::Relation: return leaf(n);
    default: {
        auto copy = std::make_shared<Node>(n);
        for (auto& c : copy->children) c = map_tree(*c, leaf);
        return copy;
    }
    }
}

class Evaluator {
public:
    Evaluator(const Structure& a, std::vector<Element> env) : a_(a), env_(std::move(env)) {}

    bool eval(const Node& n) {
        switch (n.kind) {
        case NodeKind::True: return true;
        case NodeKind::False: return false;
        case NodeKind::Equal: return at(n.vars[0]) == at(n.vars[1]);
        case NodeKind::Relation: {
            const auto& rel = a_.relation(static_cast<std::size_t>(n.symbol));
            std::size_t idx = 0;
            const auto size = static_cast<std::size_t>(a_.size());
            for (int v : n.vars) idx = idx * size + static_cast<std::size_t>(at(v));
            return rel.contains_index(idx);
        }
        case NodeKind::Not: return !eval(*n.children[0]);
        case NodeKind::And:
            return std::all_of(n.children.begin(), n.children.end(), [&](const NodePtr& c) { return eval(*c); });
        case NodeKind::Or:
            return std::any_of(n.children.begin(), n.children.end(), [&](const NodePtr& c) { return eval(*c); });
        case NodeKind::Implies: return !eval(*n.children[0]) || eval(*n.children[1]);
        case NodeKind::Forall:
        case NodeKind::Exists: {
            const int v = n.vars[0];
            if (static_cast<std::size_t>(v) >= env_.size()) env_.resize(static_cast<std::size_t>(v) + 1, -1);
            const Element saved = env_[static_cast<std::size_t>(v)];
            const bool universal = n.kind == NodeKind::Forall;
            bool result = universal;
            for (Element e = 0; e < a_.size(); ++e) {
                env_[static_cast<std::size_t>(v)] = e;
                if (eval(*n.children[0]) != universal) {
                    result = !universal;
                    break;
                }
            }
            env_[static_cast<std::size_t>(v)] = saved;
            return result;
        }
        }
        return false;
    }

private:
    Element at(int v) const { return env_[static_cast<std::size_t>(v)]; }

    const Structure& a_;
    std::vector<Element> env_;
};

}  // namespace

Formula::Formula(Signature signature, NodePtr root) : signature_(std::move(signature)), root_(std::move(root)) {
    if (!root_) throw DomainError("null formula");
    check_tree(signature_, *root_);
}

std::set<int> Formula::free_variables() const {
    std::set<int> out;
    std::vector<int> bound;
    collect_free(*root_, bound, out);
    return out;
}

bool Formula::is_quantifier_free() const { return quantifier_depth() == 0; }

int Formula::quantifier_depth() const {
    std::function<int(const Node&)> depth = [&](const Node& n) {
        int d = 0;
        for (const auto& c : n.children) d = std::max(d, depth(*c));
        return d + ((n.kind == NodeKind::Forall || n.kind == NodeKind::Exists) ? 1 : 0);
    };
    return depth(*root_);
}

std::size_t Formula::node_count() const {
    std::function<std::size_t(const Node&)> count = [&](const Node& n) {
        std::size_t c = 1;
        for (const auto& ch : n.children) c += count(*ch);
        return c;
    };
    return count(*root_);
}

std::string Formula::to_string() const {
    std::string out;
    print(signature_, *root_, out);
    return out;
}

Formula Formula::rebind(const Signature& target) const {
    if (target == signature_) return *this;
    std::vector<int> remap(signature_.size(), -1);
    auto root = map_tree(*root_, [&](const Node& n) -> NodePtr {
        if (n.kind != NodeKind::Relation) return std::make_shared<Node>(n);
        auto& slot = remap[static_cast<std::size_t>(n.symbol)];
        if (slot < 0) {
            const auto& s = signature_[static_cast<std::size_t>(n.symbol)];
            auto found = target.find(s.name);
            if (!found) throw DomainError("signature mismatch: symbol '" + s.name + "' is not in " + target.to_string());
            if (target[*found].arity != s.arity)
                throw DomainError("signature mismatch: symbol '" + s.name + "' has a different arity");
            slot = static_cast<int>(*found);
        }
        return ast::atom(slot, n.vars);
    });
    return Formula(target, std::move(root));
}

void Assignment::bind(int var, Element e) {
    if (var < 0) throw DomainError("negative variable index");
    if (static_cast<std::size_t>(var) >= values_.size()) values_.resize(static_cast<std::size_t>(var) + 1, -1);
    values_[static_cast<std::size_t>(var)] = e;
}

bool eval(const Structure& a, const Formula& phi, const Assignment& assignment) {
    const Formula bound = phi.rebind(a.signature());
    for (int v : bound.free_variables())
        if (!assignment.is_bound(v)) throw DomainError("free variable v" + std::to_string(v) + " is not assigned");
    for (Element e : assignment.values())
        if (e >= a.size()) throw DomainError("assigned element " + std::to_string(e) + " is outside the domain");
    return Evaluator(a, assignment.values()).eval(bound.root());
}

Formula permute_formula(const Formula& phi, std::span<const int> pi) {
    const int n = static_cast<int>(pi.size());
    {
        std::vector<bool> seen(pi.size(), false);
        for (int x : pi) {
            if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) throw DomainError("not a permutation");
            seen[static_cast<std::size_t>(x)] = true;
        }
    }
    for (int v : phi.free_variables())
        if (v >= n) throw DomainError("free variable v" + std::to_string(v) + " is outside the permuted range");
    auto rename = [&](int v) { return v < n ? pi[static_cast<std::size_t>(v)] : v; };
    std::function<NodePtr(const Node&)> walk = [&](const Node& node) -> NodePtr {
        auto copy = std::make_shared<Node>(node);
        for (auto& v : copy->vars) v = rename(v);
        for (auto& c : copy->children) c = walk(*c);
        return copy;
    };
    return Formula(phi.signature(), walk(phi.root()));
}

}  // namespace mono
