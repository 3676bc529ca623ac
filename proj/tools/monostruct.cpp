// Command-line front end. Every subcommand calls one library operation and
// prints its result as a report: a JSON envelope with --json, otherwise the
// same document rendered one leaf per line.

#include "monostruct/chaining.hpp"
#include "monostruct/corpus.hpp"
#include "monostruct/definability.hpp"
#include "monostruct/error.hpp"
#include "monostruct/formula.hpp"
#include "monostruct/monomorphy.hpp"
#include "monostruct/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using mono::Json;

// Unreadable files and inconsistent flag combinations: exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Input {
    std::string path;
    std::string text;
};

Input read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return {path, buf.str()};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

struct Run {
    std::vector<Input> inputs;
    Json result = Json::object();

    const Input& load(const std::string& path) {
        inputs.push_back(read_file(path));
        return inputs.back();
    }
    mono::ParsedStructure structure(const std::string& path) {
        const auto& in = load(path);
        try {
            return mono::parse_structure_file(in.text);
        } catch (const mono::ParseError& e) {
            throw mono::ParseError(path + ": " + e.what());
        }
    }
};

struct Global {
    bool json = false;
    bool timing = false;
    int threads = 1;
};

void note_names(Json& result, const mono::ParsedStructure& p) {
    if (!p.element_names.empty()) result["element_names"] = p.element_names;
}

mono::LinearOrder order_or_natural(const std::string& text, int n) {
    if (text.empty()) return mono::LinearOrder::natural(n);
    auto x = mono::parse_order(text);
    if (x.size() != n)
        throw mono::DomainError("order has " + std::to_string(x.size()) + " elements, structure has " + std::to_string(n));
    return x;
}

mono::Assignment parse_assignment(const std::string& text) {
    std::vector<mono::Element> values;
    if (text.empty()) return mono::Assignment(values);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw mono::ParseError("bad assignment entry '" + item + "'");
        }
    }
    return mono::Assignment(std::move(values));
}

Json error_json(const std::exception& e) {
    Json err = {{"kind", "Error"}, {"message", e.what()}};
    if (const auto* mixed = dynamic_cast<const mono::MixedPatternError*>(&e)) {
        err["kind"] = "MixedPattern";
        err["symbol"] = mixed->symbol();
        err["member"] = mixed->member();
        err["non_member"] = mixed->non_member();
    } else if (dynamic_cast<const mono::DomainError*>(&e)) {
        err["kind"] = "DomainError";
    } else if (dynamic_cast<const mono::ParseError*>(&e)) {
        err["kind"] = "ParseError";
    } else if (dynamic_cast<const UsageError*>(&e)) {
        err["kind"] = "UsageError";
    }
    return err;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monomorphic relational structures: monomorphy, chaining orders, definability, sentences"};
    app.require_subcommand(1);
    app.fallthrough();
    Global global;
    app.add_flag("--json", global.json, "Print the report as JSON");
    app.add_flag("--timing", global.timing, "Add wall-clock time to the report");
    app.add_option("--threads", global.threads, "Worker threads (output is identical for any count)")
        ->check(CLI::Range(1, 256));

    Run run;
    std::function<void()> action;

    // check-monomorphy
    std::string mono_file;
    int mono_k = 0;
    bool mono_reducts = false;
    auto* cm = app.add_subcommand("check-monomorphy", "k-monomorphy for every k (or one k), with witnesses");
    cm->add_option("structure", mono_file)->required();
    cm->add_option("--k", mono_k, "Check only this k");
    cm->add_flag("--reducts", mono_reducts, "Also check every reduct (at most 4 symbols)");
    cm->callback([&] {
        action = [&] {
            auto p = run.structure(mono_file);
            note_names(run.result, p);
            if (mono_k > 0) {
                run.result["k"] = mono_k;
                run.result["verdict"] = to_json(mono::is_k_monomorphic(p.structure, mono_k));
            } else {
                run.result["monomorphy"] = to_json(mono::is_monomorphic(p.structure));
            }
            if (mono_reducts) run.result["reducts"] = to_json(mono::check_reducts(p.structure));
        };
    });

    // find-chains / classify
    std::string chain_file;
    int chain_cap = mono::kDefaultChainCap;
    auto* fc = app.add_subcommand("find-chains", "Every linear order chaining the structure, plus its classification");
    fc->add_option("structure", chain_file)->required();
    fc->add_option("--max-size", chain_cap, "Largest domain to enumerate")->capture_default_str();
    fc->callback([&] {
        action = [&] {
            auto p = run.structure(chain_file);
            note_names(run.result, p);
            auto set = mono::enumerate_chaining_orders(p.structure, chain_cap, global.threads);
            run.result["chain_set"] = to_json(set);
            run.result["trichotomy"] = set.empty() ? Json(nullptr) : to_json(mono::classify_chain_set(p.structure, set));
        };
    });
    auto* cl = app.add_subcommand("classify", "Classify the chain set as constant, cut-reversal, kernel or none");
    cl->add_option("structure", chain_file)->required();
    cl->add_option("--max-size", chain_cap, "Largest domain to enumerate")->capture_default_str();
    cl->callback([&] {
        action = [&] {
            auto p = run.structure(chain_file);
            auto set = mono::enumerate_chaining_orders(p.structure, chain_cap, global.threads);
            run.result["chainable"] = !set.empty();
            run.result["trichotomy"] = set.empty() ? Json(nullptr) : to_json(mono::classify_chain_set(p.structure, set));
        };
    });

    // synthesize-def
    std::string syn_file, syn_order, syn_out;
    auto* sd = app.add_subcommand("synthesize-def", "Quantifier-free order definitions of the relations");
    sd->add_option("structure", syn_file)->required();
    sd->add_option("--order", syn_order, "Ascending enumeration, e.g. 2,0,1 (default: natural order)");
    sd->add_option("-o,--output", syn_out, "Write the definitions file here");
    sd->callback([&] {
        action = [&] {
            auto p = run.structure(syn_file);
            auto defs = mono::synthesize_definition(p.structure, order_or_natural(syn_order, p.structure.size()));
            run.result["definition"] = to_json(defs);
            if (!syn_out.empty()) write_file(syn_out, mono::to_text(defs.definitions()));
        };
    });

    // derive
    std::string der_order, der_def_file, der_out;
    int der_size = -1;
    std::vector<std::string> der_defs;
    auto* dv = app.add_subcommand("derive", "Structure carved out of a linear order by order definitions");
    auto* der_order_opt = dv->add_option("--order", der_order, "Ascending enumeration of the order");
    auto* der_size_opt = dv->add_option("--size", der_size, "Use the natural order on this many elements");
    der_order_opt->excludes(der_size_opt);
    auto* der_file_opt = dv->add_option("--def-file", der_def_file, "Definitions file (`Name/arity: formula` lines)");
    auto* der_def_opt = dv->add_option("--def", der_defs, "One definition `Name/arity: formula` (repeatable)");
    der_file_opt->excludes(der_def_opt);
    dv->add_option("-o,--output", der_out, "Write the structure file here");
    dv->callback([&] {
        action = [&] {
            if (der_order.empty() && der_size < 0) throw UsageError("derive needs --order or --size");
            std::string text;
            if (!der_def_file.empty()) {
                text = run.load(der_def_file).text;
            } else {
                if (der_defs.empty()) throw UsageError("derive needs --def-file or --def");
                for (const auto& d : der_defs) text += d + "\n";
            }
            const auto x = der_order.empty() ? mono::LinearOrder::natural(der_size) : mono::parse_order(der_order);
            auto y = mono::derive_structure(x, mono::parse_definitions(text));
            run.result["order"] = to_json(x);
            run.result["structure"] = to_json(y);
            if (!der_out.empty()) write_file(der_out, mono::to_text(y));
        };
    });

    // gen
    std::string gen_kind, gen_sig = "R/2", gen_out;
    mono::GeneratorSpec gen_spec;
    auto* gn = app.add_subcommand("gen", "Generate a named or random structure");
    gn->add_option("kind", gen_kind,
                   "linear | betweenness | cyclic | triangle | transitive_tournament | constant | random")
        ->required();
    gn->add_option("--size", gen_spec.size, "Domain size")->capture_default_str();
    gn->add_option("--seed", gen_spec.seed, "Seed (random only)")->capture_default_str();
    gn->add_option("--density", gen_spec.density, "Tuple probability (random only)")->capture_default_str();
    gn->add_option("--signature", gen_sig, "Signature (random only)")->capture_default_str();
    gn->add_option("-o,--output", gen_out, "Write the structure file here");
    gn->callback([&] {
        action = [&] {
            gen_spec.kind = mono::parse_generator_kind(gen_kind);
            if (gen_spec.kind == mono::GeneratorKind::Triangle) gen_spec.size = 3;
            gen_spec.signature = mono::parse_signature(gen_sig);
            auto y = mono::generate(gen_spec);
            run.result["kind"] = mono::to_string(gen_spec.kind);
            if (gen_spec.kind == mono::GeneratorKind::Random) {
                run.result["seed"] = gen_spec.seed;
                run.result["density"] = gen_spec.density;
            }
            run.result["structure"] = to_json(y);
            if (!gen_out.empty()) write_file(gen_out, mono::to_text(y));
        };
    });

    // gen-sentence
    std::string sen_kind, sen_file, sen_sig, sen_out;
    int sen_n = 0;
    mono::SentenceCaps caps;
    auto* gs = app.add_subcommand("gen-sentence", "Build alpha, phi or psi of a structure K, or psi-n of a signature");
    gs->add_option("kind", sen_kind, "alpha | phi | psi | psi-n")->required();
    gs->add_option("structure", sen_file, "K (alpha, phi, psi)");
    gs->add_option("--signature", sen_sig, "Signature (psi-n)");
    gs->add_option("--n", sen_n, "Substructure size (psi-n)");
    gs->add_option("--max-n", caps.max_size, "Largest n for phi, psi and psi-n")->capture_default_str();
    gs->add_option("--max-classes", caps.max_classes, "Largest class count for psi-n")->capture_default_str();
    gs->add_option("-o,--output", sen_out, "Write the sentence here");
    gs->callback([&] {
        action = [&] {
            std::optional<mono::Formula> phi;
            if (sen_kind == "psi-n") {
                if (sen_sig.empty() || sen_n < 1) throw UsageError("psi-n needs --signature and --n >= 1");
                phi = mono::build_psi_n(mono::parse_signature(sen_sig), sen_n, caps);
            } else {
                if (sen_file.empty()) throw UsageError(sen_kind + " needs a structure file");
                auto k = run.structure(sen_file).structure;
                if (sen_kind == "alpha")
                    phi = mono::build_alpha(k);
                else if (sen_kind == "phi")
                    phi = mono::build_phi(k, caps);
                else if (sen_kind == "psi")
                    phi = mono::build_psi(k, caps);
                else
                    throw UsageError("unknown sentence kind '" + sen_kind + "'");
            }
            run.result["kind"] = sen_kind;
            run.result["signature"] = to_json(phi->signature());
            run.result["node_count"] = phi->node_count();
            run.result["quantifier_depth"] = phi->quantifier_depth();
            run.result["formula"] = phi->to_string();
            if (!sen_out.empty()) write_file(sen_out, phi->to_string() + "\n");
        };
    });

    // model-check
    std::string mc_file, mc_sentence, mc_sentence_file, mc_assign;
    auto* mc = app.add_subcommand("model-check", "Evaluate a formula in a structure");
    mc->add_option("structure", mc_file)->required();
    auto* mc_s = mc->add_option("--sentence", mc_sentence, "Formula text");
    auto* mc_f = mc->add_option("--sentence-file", mc_sentence_file, "File holding the formula");
    mc_s->excludes(mc_f);
    mc->add_option("--assign", mc_assign, "Values of v0,v1,... for free variables, e.g. 0,2");
    mc->callback([&] {
        action = [&] {
            auto y = run.structure(mc_file).structure;
            std::string text = mc_sentence;
            if (!mc_sentence_file.empty()) text = run.load(mc_sentence_file).text;
            if (text.empty()) throw UsageError("model-check needs --sentence or --sentence-file");
            auto phi = mono::parse_formula(text, y.signature());
            auto a = parse_assignment(mc_assign);
            run.result["formula"] = phi.to_string();
            run.result["assignment"] = a.values();
            run.result["holds"] = mono::eval(y, phi, a);
        };
    });

    // reduce-sig
    std::string rs_file, rs_formula, rs_assign, rs_out;
    auto* rs = app.add_subcommand("reduce-sig", "Merge relations with identical extensions");
    rs->add_option("structure", rs_file)->required();
    rs->add_option("--formula", rs_formula, "Also translate this formula and evaluate both sides");
    rs->add_option("--assign", rs_assign, "Assignment for --formula");
    rs->add_option("-o,--output", rs_out, "Write the reduced structure file here");
    rs->callback([&] {
        action = [&] {
            auto y = run.structure(rs_file).structure;
            auto r = mono::reduce_duplicate_relations(y);
            run.result["reduction"] = to_json(r);
            if (!rs_formula.empty()) {
                auto phi = mono::parse_formula(rs_formula, y.signature());
                auto translated = r.translate(phi);
                auto a = parse_assignment(rs_assign);
                run.result["formula"] = phi.to_string();
                run.result["translated"] = translated.to_string();
                run.result["holds_source"] = mono::eval(y, phi, a);
                run.result["holds_reduced"] = mono::eval(r.reduced, translated, a);
            }
            if (!rs_out.empty()) write_file(rs_out, mono::to_text(r.reduced));
        };
    });

    // frasnay-sweep
    mono::FrasnayOptions fr;
    auto* fs = app.add_subcommand("frasnay-sweep", "Least m for which m-monomorphy forces monomorphy, at finite scale");
    fs->add_option("--arity", fr.arity, "Arity of the single relation")->capture_default_str();
    fs->add_option("--max-size", fr.max_size, "Largest structure size")->capture_default_str();
    fs->add_option("--samples", fr.samples, "Samples when exhaustive enumeration is infeasible")->capture_default_str();
    fs->add_option("--seed", fr.seed, "Sampling seed")->capture_default_str();
    fs->add_option("--keep", fr.keep_examples, "Counterexamples kept per eliminated m")->capture_default_str();
    fs->callback([&] {
        action = [&] {
            fr.threads = global.threads;
            run.result = to_json(mono::frasnay_sweep(fr));
        };
    });

    // transport
    std::string tr_z, tr_y, tr_order;
    auto* tp = app.add_subcommand("transport", "Pull chaining orders of Y back along an isomorphism Z -> Y");
    tp->add_option("source", tr_z, "Z")->required();
    tp->add_option("target", tr_y, "Y")->required();
    tp->add_option("--order", tr_order, "Transport this order of Y instead of all of L_Y");
    tp->add_option("--max-size", chain_cap, "Largest domain to enumerate")->capture_default_str();
    tp->callback([&] {
        action = [&] {
            auto z = run.structure(tr_z).structure;
            auto y = run.structure(tr_y).structure;
            auto f = mono::find_isomorphism(z, y);
            if (!f) throw mono::DomainError("structures are not isomorphic");
            run.result["isomorphism"] = to_json(*f);
            if (!tr_order.empty()) {
                auto x = order_or_natural(tr_order, y.size());
                auto pulled = mono::transport_order(*f, x);
                run.result["order"] = to_json(x);
                run.result["chains_target"] = mono::chains(y, x).chains;
                run.result["transported"] = to_json(pulled);
                run.result["chains_source"] = mono::chains(z, pulled).chains;
                return;
            }
            auto ly = mono::enumerate_chaining_orders(y, chain_cap, global.threads);
            auto lz = mono::enumerate_chaining_orders(z, chain_cap, global.threads);
            mono::ChainSet pulled{z.size(), {}};
            for (const auto& x : ly.orders) pulled.orders.push_back(mono::transport_order(*f, x));
            std::sort(pulled.orders.begin(), pulled.orders.end());
            run.result["target_chain_set"] = to_json(ly);
            run.result["transported"] = to_json(pulled);
            run.result["source_chain_set"] = to_json(lz);
            run.result["bijective"] = pulled.orders == lz.orders;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::string command;
    for (const auto* sub : app.get_subcommands()) command = sub->get_name();
    Json report = {{"command", command}, {"schema_version", mono::kReportSchemaVersion}};
    int exit_code = 0;
    const auto start = std::chrono::steady_clock::now();
    try {
        action();
    } catch (const mono::DomainError& e) {
        report["error"] = error_json(e);
        exit_code = 2;
    } catch (const std::exception& e) {
        report["error"] = error_json(e);
        exit_code = 1;
    }
    Json inputs = Json::array();
    for (const auto& in : run.inputs) inputs.push_back({{"path", in.path}, {"digest", mono::digest(in.text)}});
    report["inputs"] = inputs;
    if (exit_code == 0) report["result"] = run.result;
    if (global.timing)
        report["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (exit_code != 0) std::cerr << "error: " << report["error"]["message"].get<std::string>() << "\n";
    if (global.json)
        std::cout << report.dump(2) << "\n";
    else if (exit_code == 0)
        std::cout << mono::render_text(report);
    return exit_code;
}
