#include "monostruct/combinatorics.hpp"
#include "monostruct/error.hpp"
#include "monostruct/monomorphy.hpp"

#include <algorithm>

namespace mono {

KMonomorphy is_k_monomorphic(const Structure& y, int k) {
    if (k < 1 || k > y.size())
        throw DomainError("k = " + std::to_string(k) + " outside 1.." + std::to_string(y.size()));
    std::optional<std::vector<Element>> first_subset;
    std::optional<Structure> reference;
    KMonomorphy out{true, std::nullopt};
    for_each_combination(y.size(), k, [&](std::span<const Element> h) {
        if (!out.monomorphic) return;
        if (!reference) {
            first_subset.emplace(h.begin(), h.end());
            reference = induced_substructure(y, h);
            return;
        }
        if (!are_isomorphic(*reference, induced_substructure(y, h))) {
            out.monomorphic = false;
            out.witness = SubsetPair{*first_subset, std::vector<Element>(h.begin(), h.end())};
        }
    });
    return out;
}

MonomorphyReport is_monomorphic(const Structure& y) {
    MonomorphyReport report;
    for (int k = 1; k <= y.size(); ++k) {
        MonomorphyLevel level;
        level.k = k;
        auto verdict = is_k_monomorphic(y, k);
        level.monomorphic = verdict.monomorphic;
        level.witness = std::move(verdict.witness);
        if (level.monomorphic) {
            level.class_count = 1;
        } else if (y.size() <= kDefaultCanonicalCap) {
            level.class_count = age(y, k).at(k).size();
        } else {
            // Pairwise classification when canonical codes are out of range.
            std::vector<Structure> reps;
            for_each_combination(y.size(), k, [&](std::span<const Element> h) {
                auto s = induced_substructure(y, h);
                if (std::none_of(reps.begin(), reps.end(), [&](const Structure& r) { return are_isomorphic(r, s); }))
                    reps.push_back(std::move(s));
            });
            level.class_count = reps.size();
        }
        report.monomorphic = report.monomorphic && level.monomorphic;
        report.levels.push_back(std::move(level));
    }
    return report;
}

ReductCheck check_reducts(const Structure& y, int max_symbols) {
    const auto& sig = y.signature();
    if (static_cast<int>(sig.size()) > max_symbols)
        throw DomainError("reduct check supports at most " + std::to_string(max_symbols) + " symbols, got " +
                          std::to_string(sig.size()));
    ReductCheck out;
    const auto full = is_monomorphic(y);
    out.monomorphic = full.monomorphic;
    for (const auto& level : full.levels)
        if (!level.monomorphic) {
            out.failure = level;
            break;
        }
    const std::size_t masks = std::size_t{1} << sig.size();
    for (std::size_t mask = 1; mask < masks; ++mask) {
        std::vector<std::size_t> keep;
        ReductVerdict v;
        for (std::size_t i = 0; i < sig.size(); ++i)
            if (mask & (std::size_t{1} << i)) {
                keep.push_back(i);
                v.symbols.push_back(sig[i].name);
            }
        v.monomorphic = is_monomorphic(y.reduct(keep)).monomorphic;
        if (out.monomorphic && !v.monomorphic) out.agreement = false;
        out.reducts.push_back(std::move(v));
    }
    return out;
}

}  // namespace mono
