#include "hyperweil/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hyperweil {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (int d : parts) {
        if (d < 1) throw std::invalid_argument("Partition: parts must be positive");
    }
    std::sort(parts.begin(), parts.end());
}

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::has_distinct_parts() const {
    for (size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] == parts[i - 1]) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(parts[i]);
    }
    return s + "}";
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    if (n < 1) throw std::invalid_argument("for_each_partition: n must be >= 1");
    Partition cur;
    std::function<void(int, int)> rec = [&](int rem, int min_part) {
        if (rem == 0) {
            visit(cur);
            return;
        }
        for (int p = min_part; p <= rem; ++p) {
            cur.parts.push_back(p);
            rec(rem - p, p);
            cur.parts.pop_back();
        }
    };
    rec(n, 1);
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

int64_t partition_count(int n) {
    if (n < 0) throw std::invalid_argument("partition_count: n must be >= 0");
    std::vector<int64_t> cnt(static_cast<size_t>(n) + 1, 0);
    cnt[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int s = part; s <= n; ++s) cnt[s] += cnt[s - part];
    }
    return cnt[n];
}

}  // namespace hyperweil
