#include "monostruct/error.hpp"
#include "monostruct/order.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace mono {

LinearOrder::LinearOrder(std::vector<Element> ascending) : ascending_(std::move(ascending)) {
    position_.assign(ascending_.size(), -1);
    for (std::size_t i = 0; i < ascending_.size(); ++i) {
        const Element e = ascending_[i];
        if (e < 0 || e >= size() || position_[static_cast<std::size_t>(e)] >= 0)
            throw DomainError("order is not a permutation of {0.." + std::to_string(size() - 1) + "}");
        position_[static_cast<std::size_t>(e)] = static_cast<int>(i);
    }
}

LinearOrder LinearOrder::natural(int n) {
    std::vector<Element> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return LinearOrder(std::move(v));
}

LinearOrder LinearOrder::reversed() const { return LinearOrder(std::vector<Element>(ascending_.rbegin(), ascending_.rend())); }

std::string LinearOrder::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < ascending_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ascending_[i]);
    }
    return out;
}

LinearOrder parse_order(std::string_view text) {
    std::vector<Element> v;
    std::size_t p = 0;
    while (p < text.size()) {
        auto comma = text.find(',', p);
        if (comma == std::string_view::npos) comma = text.size();
        auto item = text.substr(p, comma - p);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        int x = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw ParseError("bad order entry '" + std::string(item) + "'");
        v.push_back(x);
        p = comma + 1;
    }
    return LinearOrder(std::move(v));
}

Structure order_structure(const LinearOrder& x) {
    Structure out(Signature::order(), x.size());
    const auto& asc = x.ascending();
    for (std::size_t i = 0; i < asc.size(); ++i)
        for (std::size_t j = i + 1; j < asc.size(); ++j) out.insert(0, {asc[i], asc[j]});
    return out;
}

}  // namespace mono
