#include "monostruct/report.hpp"

#include <cstdio>
#include <sstream>

namespace mono {

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json to_json(const Signature& sig) { return sig.to_string(); }

Json to_json(const Structure& s) {
    Json relations = Json::object();
    for (std::size_t i = 0; i < s.signature().size(); ++i) relations[s.signature()[i].name] = s.tuples(i);
    return {{"signature", to_json(s.signature())}, {"size", s.size()}, {"relations", relations}};
}

Json to_json(const LinearOrder& x) { return x.ascending(); }

Json to_json(const Bijection& f) { return f.forward; }

namespace {

Json witness_json(const std::optional<SubsetPair>& w) {
    if (!w) return nullptr;
    return Json::array({w->first, w->second});
}

}  // namespace

Json to_json(const KMonomorphy& v) { return {{"monomorphic", v.monomorphic}, {"witness", witness_json(v.witness)}}; }

Json to_json(const MonomorphyReport& r) {
    Json levels = Json::array();
    for (const auto& l : r.levels)
        levels.push_back({{"k", l.k},
                          {"monomorphic", l.monomorphic},
                          {"class_count", l.class_count},
                          {"witness", witness_json(l.witness)}});
    return {{"monomorphic", r.monomorphic}, {"levels", levels}};
}

Json to_json(const ReductCheck& r) {
    Json reducts = Json::array();
    for (const auto& v : r.reducts) reducts.push_back({{"symbols", v.symbols}, {"monomorphic", v.monomorphic}});
    Json failure = nullptr;
    if (r.failure) failure = {{"k", r.failure->k}, {"witness", witness_json(r.failure->witness)}};
    return {{"monomorphic", r.monomorphic}, {"agreement", r.agreement}, {"failure", failure}, {"reducts", reducts}};
}

Json to_json(const ChainCheck& c) {
    Json witness = nullptr;
    if (c.witness)
        witness = {{"symbol", c.witness->symbol}, {"member", c.witness->member}, {"non_member", c.witness->non_member}};
    return {{"chains", c.chains}, {"witness", witness}};
}

Json to_json(const ChainSet& c) {
    Json orders = Json::array();
    for (const auto& x : c.orders) orders.push_back(to_json(x));
    return {{"structure_size", c.structure_size}, {"count", c.size()}, {"orders", orders}};
}

Json to_json(const TrichotomyReport& t) {
    Json j = {{"kind", to_string(t.kind)}, {"chain_count", t.chain_count}};
    j["witness"] = t.witness ? to_json(*t.witness) : Json(nullptr);
    if (t.kind == Trichotomy::Kernel) {
        j["prefix"] = t.prefix;
        j["middle"] = t.middle;
        j["suffix"] = t.suffix;
        j["degenerate"] = t.degenerate;
    }
    return j;
}

Json to_json(const QFDefinition& d) {
    Json symbols = Json::array();
    for (const auto& s : d.symbols) {
        Json patterns = Json::array();
        for (const auto& p : s.accepted) patterns.push_back(p.to_string());
        symbols.push_back({{"name", s.name},
                           {"arity", s.arity},
                           {"constant", s.constant},
                           {"formula", s.formula.to_string()},
                           {"patterns", patterns}});
    }
    return {{"order", to_json(d.order)}, {"signature", to_json(d.signature)}, {"symbols", symbols}};
}

Json to_json(const SignatureReduction& r) {
    Json map = Json::object();
    for (std::size_t i = 0; i < r.source.size(); ++i)
        map[r.source[i].name] = r.reduced.signature()[r.representative[i]].name;
    return {{"source", to_json(r.source)}, {"reduced", to_json(r.reduced.signature())}, {"representative", map},
            {"structure", to_json(r.reduced)}};
}

Json to_json(const FrasnayVariant& v) {
    Json per_m = Json::array();
    for (const auto& e : v.per_m) {
        Json examples = Json::array();
        for (const auto& c : e.examples) examples.push_back({{"failing_k", c.failing_k}, {"structure", to_json(c.structure)}});
        per_m.push_back({{"m", e.m},
                         {"structures_tested", e.structures_tested},
                         {"counterexample_count", e.counterexample_count},
                         {"examples", examples}});
    }
    return {{"hypothesis", v.hypothesis}, {"threshold", v.threshold}, {"vacuous", v.vacuous}, {"per_m", per_m}};
}

Json to_json(const FrasnayReport& r) {
    Json j = {{"arity", r.arity}, {"max_size", r.max_size}, {"exhaustive", r.exhaustive}};
    if (!r.exhaustive) {
        j["seed"] = r.seed;
        j["samples"] = r.samples;
    }
    j["m_only"] = to_json(r.m_only);
    j["up_to_m"] = to_json(r.up_to_m);
    return j;
}

namespace {

bool scalar_array(const Json& j) {
    for (const auto& e : j)
        if (e.is_structured() && !(e.is_array() && scalar_array(e))) return false;
    return true;
}

void render(std::ostringstream& out, const Json& j, const std::string& path) {
    if (j.is_object()) {
        if (j.empty()) out << path << ": {}\n";
        for (const auto& [key, value] : j.items()) render(out, value, path.empty() ? key : path + "." + key);
    } else if (j.is_array() && !scalar_array(j)) {
        if (j.empty()) out << path << ": []\n";
        for (std::size_t i = 0; i < j.size(); ++i) render(out, j[i], path + "[" + std::to_string(i) + "]");
    } else if (j.is_string()) {
        out << path << ": " << j.get<std::string>() << "\n";
    } else {
        out << path << ": " << j.dump() << "\n";
    }
}

}  // namespace

std::string render_text(const Json& j) {
    std::ostringstream out;
    render(out, j, "");
    return out.str();
}

}  // namespace mono
