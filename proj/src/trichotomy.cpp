#include "monostruct/chaining.hpp"
#include "monostruct/combinatorics.hpp"
#include "monostruct/error.hpp"

#include <algorithm>

namespace mono {

std::string to_string(Trichotomy t) {
    switch (t) {
    case Trichotomy::Constant: return "Constant";
    case Trichotomy::CutReversal: return "CutReversal";
    case Trichotomy::Kernel: return "Kernel";
    case Trichotomy::NoneOfThese: return "NoneOfThese";
    }
    return "?";
}

namespace {

std::vector<LinearOrder> sorted_unique(std::vector<LinearOrder> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::vector<LinearOrder> cut_reversal_closure(const LinearOrder& x) {
    const auto& a = x.ascending();
    std::vector<LinearOrder> out;
    for (std::size_t cut = 0; cut <= a.size(); ++cut) {
        // x = I + F with I = a[0, cut), F = a[cut, n)
        std::vector<Element> rotated(a.begin() + static_cast<std::ptrdiff_t>(cut), a.end());
        rotated.insert(rotated.end(), a.begin(), a.begin() + static_cast<std::ptrdiff_t>(cut));
        LinearOrder f_plus_i(rotated);
        out.push_back(f_plus_i.reversed());  // I* + F*
        out.push_back(std::move(f_plus_i));
    }
    return sorted_unique(std::move(out));
}

std::vector<LinearOrder> kernel_family(const LinearOrder& x, int k, int h) {
    const auto& a = x.ascending();
    const int n = x.size();
    if (k < 0 || h < 0 || k + h > n) throw DomainError("kernel blocks do not fit the order");
    std::vector<Element> head(a.begin(), a.begin() + k);
    std::vector<Element> tail(a.end() - h, a.end());
    std::sort(head.begin(), head.end());
    std::sort(tail.begin(), tail.end());
    std::vector<LinearOrder> out;
    do {
        std::vector<Element> t = tail;
        std::sort(t.begin(), t.end());
        do {
            std::vector<Element> order = head;
            order.insert(order.end(), a.begin() + k, a.end() - h);
            order.insert(order.end(), t.begin(), t.end());
            LinearOrder o(std::move(order));
            out.push_back(o.reversed());
            out.push_back(std::move(o));
        } while (std::next_permutation(t.begin(), t.end()));
    } while (std::next_permutation(head.begin(), head.end()));
    return sorted_unique(std::move(out));
}

TrichotomyReport classify_chain_set(const ChainSet& chain_set) {
    if (chain_set.empty()) throw DomainError("cannot classify an empty chain set");
    const int n = chain_set.structure_size;
    TrichotomyReport report;
    report.chain_count = chain_set.size();
    if (n <= 20 && chain_set.size() == factorial(n)) {
        report.kind = Trichotomy::Constant;
        return report;
    }
    const auto& orders = chain_set.orders;

    // A cut-reversal closure has at most 2(n+1) members.
    if (orders.size() <= static_cast<std::size_t>(2 * (n + 1))) {
        for (const auto& x : orders)
            if (cut_reversal_closure(x) == orders) {
                report.kind = Trichotomy::CutReversal;
                report.witness = x;
                return report;
            }
    }

    // Every member of a kernel family generates the same family (its reverse
    // swaps the roles of the two blocks), so the least member is tried with
    // every block split. Blocks of size 1 add nothing and are skipped.
    const LinearOrder& x = orders.front();
    std::vector<std::pair<int, int>> splits;
    for (int k = 0; k <= n; ++k)
        for (int h = 0; k + h <= n; ++h)
            if (k != 1 && h != 1) splits.emplace_back(k, h);
    std::stable_sort(splits.begin(), splits.end(),
                     [](auto& l, auto& r) { return l.first + l.second < r.first + r.second; });
    for (auto [k, h] : splits) {
        if (static_cast<double>(factorial(k)) * static_cast<double>(factorial(h)) > static_cast<double>(orders.size())) continue;
        if (kernel_family(x, k, h) != orders) continue;
        const auto& a = x.ascending();
        report.kind = Trichotomy::Kernel;
        report.witness = x;
        report.prefix.assign(a.begin(), a.begin() + k);
        report.middle.assign(a.begin() + k, a.end() - h);
        report.suffix.assign(a.end() - h, a.end());
        report.degenerate = report.middle.empty();
        return report;
    }
    report.kind = Trichotomy::NoneOfThese;
    return report;
}

TrichotomyReport classify_chain_set(const Structure& y, const ChainSet& chain_set) {
    if (chain_set.structure_size != y.size()) throw DomainError("chain set does not belong to this structure");
    return classify_chain_set(chain_set);
}

}  // namespace mono
