#pragma once

// Brute-force oracles, independent of the library's enumeration paths.
// Only usable at very small sizes; the tests freeze their outputs.

#include <vector>

#include "signpoly/partition.hpp"
#include "signpoly/sign_matrix.hpp"

namespace oracles {

// Counts fillings of the shape with entries in [1, n] that are weakly
// increasing along rows and strictly increasing down columns, by plain
// odometer enumeration over all assignments.
inline long brute_force_ssyt_count(const signpoly::Partition& shape, int n) {
    std::vector<std::pair<int, int>> cells;  // (row, col), 0-indexed
    for (int i = 1; i <= shape.num_parts(); ++i)
        for (int j = 1; j <= shape.part(i); ++j) cells.push_back({i - 1, j - 1});
    if (cells.empty()) return 1;
    std::vector<int> fill(cells.size(), 1);
    auto valid = [&]() {
        std::vector<std::vector<int>> grid(shape.num_parts(),
                                           std::vector<int>(shape.lambda1(), 0));
        for (size_t t = 0; t < cells.size(); ++t) grid[cells[t].first][cells[t].second] = fill[t];
        for (size_t t = 0; t < cells.size(); ++t) {
            auto [i, j] = cells[t];
            if (j > 0 && grid[i][j - 1] > grid[i][j]) return false;
            if (i > 0 && grid[i - 1][j] >= grid[i][j]) return false;
        }
        return true;
    };
    long count = 0;
    while (true) {
        if (valid()) ++count;
        size_t t = cells.size();
        while (t > 0 && fill[t - 1] == n) fill[--t] = 1;
        if (t == 0) break;
        ++fill[t - 1];
    }
    return count;
}

// Counts m x n sign matrices by scanning all {-1,0,1} assignments.
inline long brute_force_sign_matrix_count(int m, int n) {
    std::vector<int> digits(static_cast<size_t>(m) * n, -1);
    long count = 0;
    while (true) {
        std::vector<std::vector<int>> entries(m, std::vector<int>(n));
        for (size_t t = 0; t < digits.size(); ++t)
            entries[t / n][t % n] = digits[t];
        if (!signpoly::SignMatrix::check(entries)) ++count;
        size_t t = digits.size();
        while (t > 0 && digits[t - 1] == 1) digits[--t] = -1;
        if (t == 0) break;
        ++digits[t - 1];
    }
    return count;
}

}  // namespace oracles
