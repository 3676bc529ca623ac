#include "monostruct/combinatorics.hpp"
#include "monostruct/error.hpp"
#include "monostruct/structure.hpp"

#include <algorithm>

namespace mono {

namespace {

// For each level i and relation r: the tuples over {0..i} that mention i,
// flattened, in lexicographic order. Both the isomorphism search and the
// canonical labelling assign elements level by level and only ever need
// the tuples that the newest element completes.
struct LevelTuples {
    // levels[i][r] is a flattened list of arity-sized tuples.
    std::vector<std::vector<std::vector<Element>>> levels;

    LevelTuples(const Signature& sig, int n) : levels(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) {
            auto& level = levels[static_cast<std::size_t>(i)];
            level.resize(sig.size());
            for (std::size_t r = 0; r < sig.size(); ++r)
                for_each_tuple(i + 1, sig[r].arity, [&](std::span<const Element> t) {
                    if (std::find(t.begin(), t.end(), i) != t.end()) level[r].insert(level[r].end(), t.begin(), t.end());
                });
        }
    }
};

std::size_t mapped_index(const Relation& rel, std::span<const Element> positions, std::span<const Element> map) {
    std::size_t idx = 0;
    const auto n = static_cast<std::size_t>(rel.domain_size());
    for (Element p : positions) idx = idx * n + static_cast<std::size_t>(map[static_cast<std::size_t>(p)]);
    return idx;
}

// Per-element invariant: positional incidence counts and the diagonal bit, per relation.
std::vector<std::vector<int>> element_invariants(const Structure& s) {
    std::vector<std::vector<int>> inv(static_cast<std::size_t>(s.size()));
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        const auto& rel = s.relation(r);
        const int a = rel.arity();
        std::vector<std::vector<int>> counts(static_cast<std::size_t>(s.size()), std::vector<int>(static_cast<std::size_t>(a), 0));
        for (const auto& t : rel.tuples())
            for (int j = 0; j < a; ++j) ++counts[static_cast<std::size_t>(t[static_cast<std::size_t>(j)])][static_cast<std::size_t>(j)];
        for (int x = 0; x < s.size(); ++x) {
            auto& v = inv[static_cast<std::size_t>(x)];
            const auto& c = counts[static_cast<std::size_t>(x)];
            v.insert(v.end(), c.begin(), c.end());
            Tuple diag(static_cast<std::size_t>(a), x);
            v.push_back(rel.contains(diag) ? 1 : 0);
        }
    }
    return inv;
}

class IsomorphismSearch {
public:
    IsomorphismSearch(const Structure& a, const Structure& b)
        : a_(a), b_(b), levels_(a.signature(), a.size()), inv_a_(element_invariants(a)), inv_b_(element_invariants(b)),
          map_(static_cast<std::size_t>(a.size()), -1), used_(static_cast<std::size_t>(a.size()), false) {}

    std::optional<Bijection> run() {
        if (extend(0)) return Bijection{map_};
        return std::nullopt;
    }

private:
    bool consistent(int i) const {
        const auto& level = levels_.levels[static_cast<std::size_t>(i)];
        for (std::size_t r = 0; r < level.size(); ++r) {
            const auto& ra = a_.relation(r);
            const auto& rb = b_.relation(r);
            const auto a = static_cast<std::size_t>(ra.arity());
            const auto& flat = level[r];
            for (std::size_t off = 0; off < flat.size(); off += a) {
                std::span<const Element> t(flat.data() + off, a);
                if (ra.contains(t) != rb.contains_index(mapped_index(rb, t, map_))) return false;
            }
        }
        return true;
    }

    bool extend(int i) {
        if (i == a_.size()) return true;
        const auto& want = inv_a_[static_cast<std::size_t>(i)];
        for (int j = 0; j < b_.size(); ++j) {
            if (used_[static_cast<std::size_t>(j)] || inv_b_[static_cast<std::size_t>(j)] != want) continue;
            map_[static_cast<std::size_t>(i)] = j;
            used_[static_cast<std::size_t>(j)] = true;
            if (consistent(i) && extend(i + 1)) return true;
            used_[static_cast<std::size_t>(j)] = false;
        }
        map_[static_cast<std::size_t>(i)] = -1;
        return false;
    }

    const Structure& a_;
    const Structure& b_;
    LevelTuples levels_;
    std::vector<std::vector<int>> inv_a_, inv_b_;
    std::vector<Element> map_;
    std::vector<bool> used_;
};

// Canonical labelling by exhaustive minimisation. A labelling is an
// enumeration sigma of the domain; its code is the concatenation, over
// positions p, of the membership bits of sigma(t) for every position tuple t
// over {0..p} that mentions p. Every tuple of positions occurs in exactly one
// block, so the code of a labelling determines the relabelled structure and
// the least code over all labellings is a complete invariant. Blocks at one
// level have equal length across labellings, so the search keeps only the
// siblings with the least block and skips candidates that a transposition
// automorphism maps onto an explored sibling.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Structure& s)
        : s_(s), n_(s.size()), levels_(s.signature(), s.size()), swap_auto_(static_cast<std::size_t>(n_ * n_), false),
          sigma_(static_cast<std::size_t>(n_)), used_(static_cast<std::size_t>(n_), false),
          current_(static_cast<std::size_t>(n_)), best_(static_cast<std::size_t>(n_)), less_(static_cast<std::size_t>(n_), false) {
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) {
                auto p = identity_permutation(n_);
                std::swap(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]);
                bool aut = is_isomorphism(s_, s_, Bijection{p});
                swap_auto_[static_cast<std::size_t>(u * n_ + v)] = aut;
                swap_auto_[static_cast<std::size_t>(v * n_ + u)] = aut;
            }
    }

    CanonicalCode run() {
        search(0);
        std::vector<std::uint8_t> bits;
        for (const auto& block : best_) bits.insert(bits.end(), block.begin(), block.end());
        CanonicalCode code;
        code.bytes.push_back(static_cast<char>(n_));
        for (std::size_t i = 0; i < bits.size(); i += 8) {
            unsigned char byte = 0;
            for (std::size_t j = 0; j < 8; ++j) byte = static_cast<unsigned char>((byte << 1) | (i + j < bits.size() ? bits[i + j] : 0));
            code.bytes.push_back(static_cast<char>(byte));
        }
        return code;
    }

private:
    std::vector<std::uint8_t> block(int p) const {
        std::vector<std::uint8_t> out;
        const auto& level = levels_.levels[static_cast<std::size_t>(p)];
        for (std::size_t r = 0; r < level.size(); ++r) {
            const auto& rel = s_.relation(r);
            const auto a = static_cast<std::size_t>(rel.arity());
            for (std::size_t off = 0; off < level[r].size(); off += a) {
                std::span<const Element> t(level[r].data() + off, a);
                out.push_back(rel.contains_index(mapped_index(rel, t, sigma_)) ? 1 : 0);
            }
        }
        return out;
    }

    void search(int p) {
        if (p == n_) {
            if (!have_best_ || (p > 0 && less_[static_cast<std::size_t>(p - 1)])) {
                best_ = current_;
                have_best_ = true;
                std::fill(less_.begin(), less_.end(), false);
            }
            return;
        }
        std::vector<int> candidates;
        std::vector<std::vector<std::uint8_t>> blocks;
        for (int x = 0; x < n_; ++x) {
            if (used_[static_cast<std::size_t>(x)]) continue;
            sigma_[static_cast<std::size_t>(p)] = x;
            candidates.push_back(x);
            blocks.push_back(block(p));
        }
        const auto least = *std::min_element(blocks.begin(), blocks.end());
        std::vector<int> explored;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (blocks[c] != least) continue;
            const int x = candidates[c];
            bool mirrored = std::any_of(explored.begin(), explored.end(),
                                        [&](int u) { return swap_auto_[static_cast<std::size_t>(u * n_ + x)]; });
            if (mirrored) continue;
            explored.push_back(x);

            // Compare against the current best, which may have changed in an earlier sibling.
            bool parent_less = !have_best_ || (p > 0 && less_[static_cast<std::size_t>(p - 1)]);
            if (!parent_less) {
                const auto& b = best_[static_cast<std::size_t>(p)];
                if (least > b) return;
                less_[static_cast<std::size_t>(p)] = least < b;
            } else {
                less_[static_cast<std::size_t>(p)] = true;
            }
            sigma_[static_cast<std::size_t>(p)] = x;
            current_[static_cast<std::size_t>(p)] = least;
            used_[static_cast<std::size_t>(x)] = true;
            search(p + 1);
            used_[static_cast<std::size_t>(x)] = false;
        }
    }

    const Structure& s_;
    int n_;
    LevelTuples levels_;
    std::vector<bool> swap_auto_;
    std::vector<Element> sigma_;
    std::vector<bool> used_;
    std::vector<std::vector<std::uint8_t>> current_, best_;
    std::vector<bool> less_;
    bool have_best_ = false;
};

}  // namespace

std::optional<Bijection> find_isomorphism(const Structure& a, const Structure& b) {
    if (a.signature() != b.signature()) throw DomainError("signature mismatch");
    if (a.size() != b.size()) return std::nullopt;
    for (std::size_t r = 0; r < a.signature().size(); ++r)
        if (a.relation(r).count() != b.relation(r).count()) return std::nullopt;
    return IsomorphismSearch(a, b).run();
}

bool are_isomorphic(const Structure& a, const Structure& b) { return find_isomorphism(a, b).has_value(); }

CanonicalCode canonical_code(const Structure& s, int max_size) {
    if (s.size() > max_size)
        throw DomainError("canonical code: structure size " + std::to_string(s.size()) + " exceeds cap " +
                          std::to_string(max_size));
    if (s.size() > 255) throw DomainError("canonical code: size does not fit the code header");
    return CanonicalSearch(s).run();
}

std::map<int, std::set<CanonicalCode>> age(const Structure& s, int k) {
    if (k < 1 || k > s.size())
        throw DomainError("age: k = " + std::to_string(k) + " outside 1.." + std::to_string(s.size()));
    std::map<int, std::set<CanonicalCode>> out;
    for (int m = 1; m <= k; ++m) {
        auto& classes = out[m];
        for_each_combination(s.size(), m, [&](std::span<const Element> h) {
            classes.insert(canonical_code(induced_substructure(s, h)));
        });
    }
    return out;
}

void for_each_one_point_extension(const Structure& s, const std::function<void(const Structure&)>& visit, int max_bits) {
    const int n = s.size();
    const int m = n + 1;
    Structure base(s.signature(), m);
    std::vector<std::pair<std::size_t, std::size_t>> free_cells;
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        const auto& old = s.relation(r);
        const auto& fresh = base.relation(r);
        for_each_tuple(m, old.arity(), [&](std::span<const Element> t) {
            if (std::find(t.begin(), t.end(), n) != t.end())
                free_cells.emplace_back(r, fresh.index(t));
            else if (old.contains(t))
                base.set(r, fresh.index(t), true);
        });
    }
    if (static_cast<int>(free_cells.size()) > max_bits)
        throw DomainError("one-point extension has " + std::to_string(free_cells.size()) + " free tuples (cap " +
                          std::to_string(max_bits) + ")");
    const std::uint64_t total = std::uint64_t{1} << free_cells.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t c = 0; c < free_cells.size(); ++c)
            base.set(free_cells[c].first, free_cells[c].second, ((mask >> c) & 1U) != 0);
        visit(base);
    }
}

std::vector<Structure> enumerate_isomorphism_classes(const Signature& sig, int size, int max_bits, std::size_t max_classes) {
    if (size < 0) throw DomainError("negative size");
    std::vector<Structure> reps{Structure(sig, 0)};
    for (int m = 1; m <= size; ++m) {
        std::map<CanonicalCode, Structure> classes;
        for (const auto& rep : reps) {
            for_each_one_point_extension(rep, [&](const Structure& ext) {
                auto code = canonical_code(ext);
                if (!classes.count(code)) {
                    if (classes.size() >= max_classes)
                        throw DomainError("more than " + std::to_string(max_classes) + " isomorphism classes of size " +
                                          std::to_string(m) + " over " + sig.to_string());
                    classes.emplace(std::move(code), ext);
                }
            }, max_bits);
        }
        reps.clear();
        for (auto& [code, s] : classes) reps.push_back(std::move(s));
    }
    return reps;
}

}  // namespace mono
