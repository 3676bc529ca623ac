#include "monostruct/chaining.hpp"
#include "monostruct/combinatorics.hpp"
#include "monostruct/definability.hpp"
#include "monostruct/error.hpp"

#include <algorithm>
#include <future>

namespace mono {

ChainCheck chains(const Structure& y, const LinearOrder& x) {
    if (x.size() != y.size()) throw DomainError("order size does not match the structure");
    for (std::size_t r = 0; r < y.signature().size(); ++r) {
        const auto& sym = y.signature()[r];
        const auto& rel = y.relation(r);
        const std::size_t ids = bounded_power(sym.arity, sym.arity, std::size_t{1} << 24);
        if (ids == 0) throw DomainError("arity too large for pattern tables");
        std::vector<int> state(ids, -1);
        std::vector<Tuple> first(ids);
        std::size_t idx = 0;
        std::optional<ChainWitness> witness;
        for_each_tuple(y.size(), sym.arity, [&](std::span<const Element> t) {
            const int member = rel.contains_index(idx++) ? 1 : 0;
            if (witness) return;
            const auto id = pattern_id(tuple_pattern(t, x).ranks);
            if (state[id] < 0) {
                state[id] = member;
                first[id].assign(t.begin(), t.end());
            } else if (state[id] != member) {
                Tuple here(t.begin(), t.end());
                witness = member ? ChainWitness{sym.name, here, first[id]} : ChainWitness{sym.name, first[id], here};
            }
        });
        if (witness) return {false, std::move(witness)};
    }
    return {true, std::nullopt};
}

bool ChainSet::contains(const LinearOrder& x) const { return std::binary_search(orders.begin(), orders.end(), x); }

namespace {

// Position tuples completed when position p is filled, with their pattern ids.
struct PositionTuple {
    std::vector<int> positions;
    std::size_t pattern;
};

class ChainEnumerator {
public:
    explicit ChainEnumerator(const Structure& y) : y_(y), n_(y.size()), levels_(static_cast<std::size_t>(n_)) {
        for (int p = 0; p < n_; ++p) {
            auto& level = levels_[static_cast<std::size_t>(p)];
            level.resize(y.signature().size());
            for (std::size_t r = 0; r < y.signature().size(); ++r)
                for_each_tuple(p + 1, y.signature()[r].arity, [&](std::span<const int> t) {
                    if (std::find(t.begin(), t.end(), p) == t.end()) return;
                    // Positions are ranks in the order, so the pattern of a position tuple is its own pattern.
                    level[r].push_back({std::vector<int>(t.begin(), t.end()),
                                        pattern_id(tuple_pattern(t, LinearOrder::natural(p + 1)).ranks)});
                });
        }
    }

    std::vector<LinearOrder> run_from(Element first) const {
        Search s(*this);
        s.run(first);
        return std::move(s.found);
    }

private:
    struct Search {
        const ChainEnumerator& e;
        std::vector<std::vector<int>> members, non_members;
        std::vector<Element> prefix;
        std::vector<bool> used;
        std::vector<LinearOrder> found;

        explicit Search(const ChainEnumerator& owner) : e(owner), used(static_cast<std::size_t>(owner.n_), false) {
            for (const auto& s : owner.y_.signature().symbols()) {
                const auto ids = bounded_power(s.arity, s.arity, std::size_t{1} << 24);
                if (ids == 0) throw DomainError("arity too large for pattern tables");
                members.emplace_back(ids, 0);
                non_members.emplace_back(ids, 0);
            }
        }

        // Records the tuples completed by placing `x` at the next position.
        // Returns false (with counts restored) when a pattern class becomes mixed.
        bool place(Element x) {
            const int p = static_cast<int>(prefix.size());
            prefix.push_back(x);
            const auto& level = e.levels_[static_cast<std::size_t>(p)];
            std::vector<std::pair<std::size_t, const PositionTuple*>> done;
            Tuple t;
            for (std::size_t r = 0; r < level.size(); ++r) {
                const auto& rel = e.y_.relation(r);
                for (const auto& pt : level[r]) {
                    t.clear();
                    for (int q : pt.positions) t.push_back(prefix[static_cast<std::size_t>(q)]);
                    const bool member = rel.contains(t);
                    auto& mine = member ? members[r][pt.pattern] : non_members[r][pt.pattern];
                    const auto& other = member ? non_members[r][pt.pattern] : members[r][pt.pattern];
                    ++mine;
                    done.emplace_back(r, &pt);
                    if (other > 0) {
                        unplace(done);
                        return false;
                    }
                }
            }
            used[static_cast<std::size_t>(x)] = true;
            return true;
        }

        void unplace(const std::vector<std::pair<std::size_t, const PositionTuple*>>& done) {
            Tuple t;
            for (const auto& [r, pt] : done) {
                t.clear();
                for (int q : pt->positions) t.push_back(prefix[static_cast<std::size_t>(q)]);
                if (e.y_.relation(r).contains(t))
                    --members[r][pt->pattern];
                else
                    --non_members[r][pt->pattern];
            }
            prefix.pop_back();
        }

        void remove_last() {
            const int p = static_cast<int>(prefix.size()) - 1;
            const auto& level = e.levels_[static_cast<std::size_t>(p)];
            std::vector<std::pair<std::size_t, const PositionTuple*>> done;
            for (std::size_t r = 0; r < level.size(); ++r)
                for (const auto& pt : level[r]) done.emplace_back(r, &pt);
            used[static_cast<std::size_t>(prefix.back())] = false;
            unplace(done);
        }

        void extend() {
            if (static_cast<int>(prefix.size()) == e.n_) {
                found.emplace_back(prefix);
                return;
            }
            for (Element x = 0; x < e.n_; ++x) {
                if (used[static_cast<std::size_t>(x)] || !place(x)) continue;
                extend();
                remove_last();
            }
        }

        void run(Element first) {
            if (!place(first)) return;
            extend();
            remove_last();
        }
    };

    const Structure& y_;
    int n_;
    std::vector<std::vector<std::vector<PositionTuple>>> levels_;
};

}  // namespace

ChainSet enumerate_chaining_orders(const Structure& y, int max_size, int threads) {
    if (y.size() > max_size)
        throw DomainError("chain enumeration: structure size " + std::to_string(y.size()) + " exceeds cap " +
                          std::to_string(max_size));
    ChainSet out{y.size(), {}};
    if (y.size() == 0) {
        out.orders.emplace_back();
        return out;
    }
    const ChainEnumerator enumerator(y);
    std::vector<std::vector<LinearOrder>> parts(static_cast<std::size_t>(y.size()));
    if (threads <= 1) {
        for (Element first = 0; first < y.size(); ++first) parts[static_cast<std::size_t>(first)] = enumerator.run_from(first);
    } else {
        // Workers take first elements round-robin; results land in fixed slots.
        std::vector<std::future<void>> workers;
        for (int w = 0; w < threads; ++w)
            workers.push_back(std::async(std::launch::async, [&, w] {
                for (Element first = w; first < y.size(); first += threads)
                    parts[static_cast<std::size_t>(first)] = enumerator.run_from(first);
            }));
        for (auto& f : workers) f.get();
    }
    for (auto& p : parts) out.orders.insert(out.orders.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return out;
}

ChainSet naive_chaining_orders(const Structure& y) {
    ChainSet out{y.size(), {}};
    auto perm = identity_permutation(y.size());
    do {
        LinearOrder x(perm);
        if (chains(y, x)) out.orders.push_back(std::move(x));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

LinearOrder transport_order(const Bijection& f, const LinearOrder& x) {
    if (f.size() != x.size() || !f.is_permutation())
        throw DomainError("transport needs a bijection between domains of the order's size");
    const Bijection back = f.inverse();
    std::vector<Element> ascending;
    ascending.reserve(x.ascending().size());
    for (Element y : x.ascending()) ascending.push_back(back(y));
    return LinearOrder(std::move(ascending));
}

}  // namespace mono
