#pragma once

#include <compare>
#include <string>
#include <vector>

namespace signpoly {

// An integer partition: weakly decreasing positive parts. The empty
// partition is legal and behaves as the unit for every operation here.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }  // k
    int lambda1() const { return parts_.empty() ? 0 : parts_.front(); }
    // 1-indexed part access with the usual convention lambda_i = 0 for i > k.
    int part(int i) const;
    long long boxes() const;  // |lambda|
    bool empty() const { return parts_.empty(); }

    bool is_rectangle() const;  // all parts equal (true for k <= 1)
    bool is_hook() const;       // [a, 1, 1, ..., 1]

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

// Frequency representation: vector a of length lambda1 with a[i-1] the
// number of parts equal to i.
std::vector<int> frequency_rep(const Partition& p);

// Number of distinct part sizes.
int distinct_part_sizes(const Partition& p);

// All partitions with at most max_parts parts, each at most max_part,
// including the empty partition. Deterministic order.
std::vector<Partition> partitions_in_box(int max_parts, int max_part);

// Strictly increasing vectors of the given length with entries in [1, n].
std::vector<std::vector<int>> increasing_vectors(int length, int n);

}  // namespace signpoly
