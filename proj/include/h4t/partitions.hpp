#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace h4t {

struct OddParts {
    static bool admissible(int part) { return part >= 1 && part % 2 == 1; }
    static constexpr const char* what = "odd partition parts must be odd and >= 1";
};

struct EvenParts {
    static bool admissible(int part) { return part >= 0 && part % 2 == 0; }
    static constexpr const char* what = "even pseudopartition parts must be even and >= 0";
};

/* A non-decreasing sequence of parts drawn from the admissible set of
 * `Kind`. Storage is always the sorted sequence; multiplicities are a
 * derived view.
 */
template <class Kind>
class BasicPartition {
public:
    BasicPartition() = default;

    /* Sorts `parts` and validates every entry; throws std::invalid_argument. */
    explicit BasicPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const { return size_; }
    int count() const { return static_cast<int>(parts_.size()); }
    int multiplicity(int part) const;

    int front() const { return parts_.front(); }

    /* Copy with one occurrence of `part` removed (must be present). */
    BasicPartition without(int part) const;
    /* Copy with the part at `index` removed. */
    BasicPartition without_index(std::size_t index) const;
    /* Copy with `part` inserted in sorted position. */
    BasicPartition with(int part) const;

    std::string to_string() const;

    friend bool operator==(const BasicPartition&, const BasicPartition&) = default;
    /* (size, then lexicographic on parts) */
    friend std::strong_ordering operator<=>(const BasicPartition& a, const BasicPartition& b)
    {
        if (auto c = a.size_ <=> b.size_; c != 0)
            return c;
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

using OddPartition = BasicPartition<OddParts>;

class EvenPseudoPartition : public BasicPartition<EvenParts> {
public:
    using BasicPartition<EvenParts>::BasicPartition;
    EvenPseudoPartition() = default;
    EvenPseudoPartition(BasicPartition<EvenParts> p) : BasicPartition<EvenParts>(std::move(p)) {}
    int zero_count() const { return multiplicity(0); }
};

/* Parses the bracket text form, e.g. "[1,1,3]" or "[]". */
OddPartition parse_odd_partition(std::string_view text);
EvenPseudoPartition parse_even_pseudopartition(std::string_view text);

/* Every odd partition of size <= max_size, ordered by (size, lex). */
std::vector<OddPartition> enumerate_odd_partitions(int max_size);

/* Odd partitions of exactly `size`, lexicographic order. */
std::vector<OddPartition> odd_partitions_of(int size);

/* Every even pseudopartition with size <= max_size and at most zero_cap
 * zero parts, ordered by (size, lex).
 */
std::vector<EvenPseudoPartition> enumerate_even_pseudopartitions(int max_size, int zero_cap);

/* Number of partitions of n into odd parts (coin-change recurrence). */
std::uint64_t count_odd_partitions(int n);

/* Number of partitions of n into distinct parts. Equal to
 * count_odd_partitions(n) by Euler's identity; kept as a second oracle.
 */
std::uint64_t count_distinct_partitions(int n);

/* Number of partitions of n into even parts >= 2. */
std::uint64_t count_even_positive_partitions(int n);

} // namespace h4t
