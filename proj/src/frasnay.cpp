#include "monostruct/combinatorics.hpp"
#include "monostruct/error.hpp"
#include "monostruct/monomorphy.hpp"
#include "monostruct/random.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <map>

namespace mono {

namespace {

struct Tally {
    std::size_t tested = 0;
    std::size_t failures = 0;
    std::vector<FrasnayCounterexample> examples;
};

struct Tallies {
    std::vector<Tally> m_only, up_to_m;  // index m-1

    explicit Tallies(int max_size) : m_only(static_cast<std::size_t>(max_size)), up_to_m(static_cast<std::size_t>(max_size)) {}
};

std::vector<bool> k_verdicts(const Structure& y) {
    std::vector<bool> v;
    for (int k = 1; k <= y.size(); ++k) v.push_back(is_k_monomorphic(y, k).monomorphic);
    return v;
}

void record(Tally& t, const Structure& y, const std::vector<bool>& verdicts, std::size_t keep) {
    ++t.tested;
    auto bad = std::find(verdicts.begin(), verdicts.end(), false);
    if (bad == verdicts.end()) return;
    ++t.failures;
    if (t.examples.size() < keep) t.examples.push_back({y, static_cast<int>(bad - verdicts.begin()) + 1});
}

// Scores one structure of size s against every m < s it can inform.
// `m_lo`/`m_hi` restrict m (exhaustive mode scores each m separately).
void score(Tallies& tallies, const Structure& y, const std::vector<bool>& verdicts, int m_lo, int m_hi, std::size_t keep) {
    for (int m = m_lo; m <= m_hi && m < y.size(); ++m) {
        if (!verdicts[static_cast<std::size_t>(m - 1)]) continue;
        record(tallies.m_only[static_cast<std::size_t>(m - 1)], y, verdicts, keep);
        if (std::all_of(verdicts.begin(), verdicts.begin() + m, [](bool b) { return b; }))
            record(tallies.up_to_m[static_cast<std::size_t>(m - 1)], y, verdicts, keep);
    }
}

// One-point extensions of `parent` that stay m-monomorphic. All m-subsets of
// the parent already induce copies of `reference`, so only subsets through
// the new element need checking.
std::vector<std::pair<CanonicalCode, Structure>> monomorphic_extensions(const Structure& parent, int m) {
    std::vector<Element> first(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) first[static_cast<std::size_t>(i)] = i;
    const Structure reference = induced_substructure(parent, first);
    const int fresh = parent.size();
    std::vector<std::pair<CanonicalCode, Structure>> out;
    for_each_one_point_extension(parent, [&](const Structure& ext) {
        bool ok = true;
        for_each_combination(fresh, m - 1, [&](std::span<const Element> rest) {
            if (!ok) return;
            std::vector<Element> h(rest.begin(), rest.end());
            h.push_back(fresh);
            if (!are_isomorphic(reference, induced_substructure(ext, h))) ok = false;
        });
        if (ok) out.emplace_back(canonical_code(ext), ext);
    });
    return out;
}

std::vector<Structure> grow(const std::vector<Structure>& level, int m, int threads) {
    std::vector<std::vector<std::pair<CanonicalCode, Structure>>> parts(level.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < level.size(); ++i) parts[i] = monomorphic_extensions(level[i], m);
    } else {
        std::vector<std::future<void>> workers;
        for (int w = 0; w < threads; ++w)
            workers.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < level.size(); i += static_cast<std::size_t>(threads))
                    parts[i] = monomorphic_extensions(level[i], m);
            }));
        for (auto& f : workers) f.get();
    }
    std::map<CanonicalCode, Structure> classes;
    for (auto& part : parts)
        for (auto& [code, s] : part) classes.emplace(std::move(code), std::move(s));
    std::vector<Structure> out;
    out.reserve(classes.size());
    for (auto& [code, s] : classes) out.push_back(std::move(s));
    return out;
}

FrasnayVariant finish(std::string hypothesis, const std::vector<Tally>& tallies, int max_size) {
    FrasnayVariant v;
    v.hypothesis = std::move(hypothesis);
    v.threshold = max_size;
    v.vacuous = true;
    for (int m = 1; m < max_size; ++m)
        if (tallies[static_cast<std::size_t>(m - 1)].failures == 0) {
            v.threshold = m;
            v.vacuous = false;
            break;
        }
    for (int m = 1; m <= v.threshold; ++m) {
        const auto& t = tallies[static_cast<std::size_t>(m - 1)];
        v.per_m.push_back({m, t.tested, t.failures, t.examples});
    }
    return v;
}

}  // namespace

bool frasnay_exhaustive(int arity, int max_size) {
    return (arity == 1 && max_size <= 10) || (arity == 2 && max_size <= 5) || (arity == 3 && max_size <= 2);
}

FrasnayReport frasnay_sweep(const FrasnayOptions& options) {
    const int arity = options.arity;
    const int max_size = options.max_size;
    if (arity < 1 || arity > 4) throw DomainError("frasnay sweep supports arity 1..4");
    if (max_size < 1 || max_size > 10) throw DomainError("frasnay sweep supports max size 1..10");
    const Signature sig({{"R", arity}});

    FrasnayReport report;
    report.arity = arity;
    report.max_size = max_size;
    report.exhaustive = frasnay_exhaustive(arity, max_size);
    Tallies tallies(max_size);

    if (report.exhaustive) {
        for (int m = 1; m < max_size; ++m) {
            auto level = enumerate_isomorphism_classes(sig, m, 20, std::numeric_limits<std::size_t>::max());
            for (int s = m + 1; s <= max_size; ++s) {
                level = grow(level, m, options.threads);
                for (const auto& y : level) score(tallies, y, k_verdicts(y), m, m, options.keep_examples);
            }
        }
    } else {
        report.seed = options.seed;
        report.samples = options.samples;
        Rng rng(options.seed);
        for (std::size_t i = 0; i < options.samples; ++i) {
            const int size = static_cast<int>(uniform_int(rng, std::min(2, max_size), max_size));
            const double density = unit_interval(rng);
            Structure y(sig, size);
            const std::size_t cells = y.relation(0).capacity();
            for (std::size_t c = 0; c < cells; ++c) y.set(0, c, unit_interval(rng) < density);
            score(tallies, y, k_verdicts(y), 1, max_size, options.keep_examples);
        }
    }
    report.m_only = finish("m-monomorphic", tallies.m_only, max_size);
    report.up_to_m = finish("k-monomorphic for all k <= m", tallies.up_to_m, max_size);
    return report;
}

}  // namespace mono
