#pragma once

#include <vector>

#include "signpoly/partition.hpp"
#include "signpoly/rational.hpp"

namespace signpoly {

// Semistandard Young tableau: rows weakly increase, columns strictly
// increase, entries in [1, bound_n].
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;
    int bound_n = 0;

    bool empty() const { return rows.empty(); }
    // Entries of column c (1-indexed), top to bottom.
    std::vector<int> column(int c) const;
    int num_columns() const { return shape.lambda1(); }

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

// Validates the semistandard conditions; throws std::invalid_argument.
Tableau make_tableau(std::vector<std::vector<int>> rows, int bound_n);

// |SSYT(shape, n)| by the hook content product. The content convention
// used here is c(u) = j - i for the box in row i, column j; this is the
// convention validated against brute-force enumeration (see tests).
// Throws std::logic_error if the product fails to be integral.
Integer hook_content_count(const Partition& shape, int n);

// |SSYT with at most m columns and entries at most n| via the Gordon
// product formula.
Integer gordon_count(int m, int n);

// All SSYT of the given shape with entries at most n, generated cell by
// cell in row-major order with the smallest admissible entry first, so
// the output is lexicographic in the row reading word.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int n);

// The subset of enumerate_ssyt(shape, n) whose first column equals v.
// v must have exactly shape.num_parts() strictly increasing entries;
// entries above n simply give an empty result.
std::vector<Tableau> enumerate_ssyt_first_column(const std::vector<int>& v,
                                                 const Partition& shape, int n);

}  // namespace signpoly
