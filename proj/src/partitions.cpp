#include "h4t/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace h4t {

template <class Kind>
BasicPartition<Kind>::BasicPartition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    for (int p : parts_)
        if (!Kind::admissible(p))
            throw std::invalid_argument(std::string(Kind::what) + ", got " + std::to_string(p));
    std::sort(parts_.begin(), parts_.end());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

template <class Kind>
int BasicPartition<Kind>::multiplicity(int part) const
{
    auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), part);
    return static_cast<int>(hi - lo);
}

template <class Kind>
BasicPartition<Kind> BasicPartition<Kind>::without(int part) const
{
    auto it = std::lower_bound(parts_.begin(), parts_.end(), part);
    if (it == parts_.end() || *it != part)
        throw std::invalid_argument("part " + std::to_string(part) + " not present");
    return without_index(static_cast<std::size_t>(it - parts_.begin()));
}

template <class Kind>
BasicPartition<Kind> BasicPartition<Kind>::without_index(std::size_t index) const
{
    BasicPartition r;
    r.parts_.reserve(parts_.size() - 1);
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (i != index)
            r.parts_.push_back(parts_[i]);
    r.size_ = size_ - parts_[index];
    return r;
}

template <class Kind>
BasicPartition<Kind> BasicPartition<Kind>::with(int part) const
{
    if (!Kind::admissible(part))
        throw std::invalid_argument(std::string(Kind::what) + ", got " + std::to_string(part));
    BasicPartition r = *this;
    r.parts_.insert(std::upper_bound(r.parts_.begin(), r.parts_.end(), part), part);
    r.size_ += part;
    return r;
}

template <class Kind>
std::string BasicPartition<Kind>::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

template class BasicPartition<OddParts>;
template class BasicPartition<EvenParts>;

namespace {

std::vector<int> parse_parts(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ')
            s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ')
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("partition must be written as [p1,p2,...]");
    text = trim(text.substr(1, text.size() - 2));
    std::vector<int> parts;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto item = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || ptr != item.data() + item.size())
            throw std::invalid_argument("bad partition part '" + std::string(item) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text = text.substr(comma + 1);
    }
    return parts;
}

/* Non-decreasing sequences summing to `remaining` with parts from
 * {first, first+2, ...}, appended in lexicographic order.
 */
void sequences(int remaining, int first, std::vector<int>& prefix, std::vector<std::vector<int>>& out)
{
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int p = first; p <= remaining; p += 2) {
        if (p == 0)
            continue;
        prefix.push_back(p);
        sequences(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

OddPartition parse_odd_partition(std::string_view text)
{
    return OddPartition(parse_parts(text));
}

EvenPseudoPartition parse_even_pseudopartition(std::string_view text)
{
    return EvenPseudoPartition(parse_parts(text));
}

std::vector<OddPartition> odd_partitions_of(int size)
{
    std::vector<std::vector<int>> raw;
    std::vector<int> prefix;
    if (size >= 0)
        sequences(size, 1, prefix, raw);
    std::vector<OddPartition> out;
    out.reserve(raw.size());
    for (auto& r : raw)
        out.emplace_back(std::move(r));
    return out;
}

std::vector<OddPartition> enumerate_odd_partitions(int max_size)
{
    std::vector<OddPartition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto level = odd_partitions_of(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<EvenPseudoPartition> enumerate_even_pseudopartitions(int max_size, int zero_cap)
{
    std::vector<EvenPseudoPartition> out;
    for (int n = 0; n <= max_size; ++n) {
        std::vector<std::vector<int>> positive;
        std::vector<int> prefix;
        sequences(n, 2, prefix, positive);
        for (int z = 0; z <= zero_cap; ++z)
            for (const auto& p : positive) {
                std::vector<int> parts(static_cast<std::size_t>(z), 0);
                parts.insert(parts.end(), p.begin(), p.end());
                out.emplace_back(BasicPartition<EvenParts>(std::move(parts)));
            }
    }
    std::stable_sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_odd_partitions(int n)
{
    if (n < 0)
        return 0;
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; part += 2)
        for (int s = part; s <= n; ++s)
            ways[s] += ways[s - part];
    return ways[n];
}

std::uint64_t count_distinct_partitions(int n)
{
    if (n < 0)
        return 0;
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = n; s >= part; --s)
            ways[s] += ways[s - part];
    return ways[n];
}

std::uint64_t count_even_positive_partitions(int n)
{
    if (n < 0)
        return 0;
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 2; part <= n; part += 2)
        for (int s = part; s <= n; ++s)
            ways[s] += ways[s - part];
    return ways[n];
}

} // namespace h4t
