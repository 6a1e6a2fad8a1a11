#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hyperweil {

/// Multiset of positive integers, stored ascending (d1 <= d2 <= ... <= dr).
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int sum() const;
    bool has_distinct_parts() const;
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
    std::string to_string() const;  // "{1, 3, 4}"
};

/// Visits every partition of n exactly once, in lexicographic order of the
/// ascending parts vector.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

std::vector<Partition> partitions_of(int n);

/// Number of partitions of n.
int64_t partition_count(int n);

}  // namespace hyperweil
