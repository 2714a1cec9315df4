#include "signpoly/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace signpoly {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("partition part index is 1-based");
    return i <= num_parts() ? parts_[i - 1] : 0;
}

long long Partition::boxes() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::is_rectangle() const {
    return parts_.empty() || parts_.front() == parts_.back();
}

bool Partition::is_hook() const {
    if (parts_.empty()) return false;
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] != 1) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

Partition conjugate(const Partition& p) {
    std::vector<int> out;
    out.reserve(p.lambda1());
    for (int j = 1; j <= p.lambda1(); ++j) {
        int count = 0;
        for (int part : p.parts())
            if (part >= j) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

std::vector<int> frequency_rep(const Partition& p) {
    std::vector<int> a(p.lambda1(), 0);
    for (int part : p.parts()) ++a[part - 1];
    return a;
}

int distinct_part_sizes(const Partition& p) {
    int d = 0;
    for (int x : frequency_rep(p))
        if (x > 0) ++d;
    return d;
}

std::vector<Partition> partitions_in_box(int max_parts, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // depth-first: next part at most the previous one
    auto rec = [&](auto&& self, int prev) -> void {
        out.emplace_back(Partition(cur));
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int next = prev; next >= 1; --next) {
            cur.push_back(next);
            self(self, next);
            cur.pop_back();
        }
    };
    rec(rec, max_part);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> increasing_vectors(int length, int n) {
    std::vector<std::vector<int>> out;
    if (length == 0) {
        out.push_back({});
        return out;
    }
    if (length > n) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int low) -> void {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        int remaining = length - static_cast<int>(cur.size());
        for (int x = low; x + remaining - 1 <= n; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace signpoly
