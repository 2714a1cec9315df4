#pragma once

#include <string>
#include <utility>
#include <vector>

#include "signpoly/rational_matrix.hpp"

namespace signpoly {

// The (m,n) grid graph: vertices (i,j), 1 <= i <= m+1, 1 <= j <= n+1;
// vertical edges (i,j)-(i+1,j) and horizontal edges (i,j)-(i,j+1) for
// 1 <= i <= m, 1 <= j <= n. Boundary vertices are row m+1 and column n+1.
struct GridSpec {
    int m = 0, n = 0;
    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Edge labels of the grid graph for a matrix X: horizontal edge (i,j)
// carries the row partial sum r_ij, vertical edge (i,j) the column
// partial sum c_ij (1-indexed grid positions, 0-indexed storage).
struct PartialSumLabeling {
    GridSpec grid;
    std::vector<std::vector<Rational>> r;  // r[i][j] = sum of row i through column j
    std::vector<std::vector<Rational>> c;  // c[i][j] = sum of column j through row i
};

PartialSumLabeling partial_sums(const RationalMatrix& X);

// Recovers X from its column partial sum table: X_ij = c_ij - c_{i-1,j}.
RationalMatrix matrix_from_column_sums(const std::vector<std::vector<Rational>>& c);

// Grid edge, 1-indexed: vertical true means the edge (i,j)-(i+1,j)
// labeled c_ij, otherwise (i,j)-(i,j+1) labeled r_ij.
struct GridEdge {
    bool vertical;
    int i, j;
    friend bool operator==(const GridEdge&, const GridEdge&) = default;
};

// A walk through edges with non-integer labels: either a simple cycle
// (closed) or a simple path between two boundary vertices (open). The
// corners are the vertices where the walk turns, in traversal order;
// corner signs alternate starting positive.
struct Circuit {
    bool closed = false;
    std::vector<GridEdge> edges;                 // traversal order
    std::vector<std::pair<int, int>> corners;    // 1-indexed positions
};

// Finds a circuit through fractional partial sums of X. When
// row_sums_fixed is set (families with prescribed row sums), open
// circuits may only start and end on the bottom boundary; otherwise the
// right boundary is also permitted. Throws std::invalid_argument if X
// has no fractional column partial sum.
//
// Deterministic choices: the walk starts at the bottom vertex under the
// smallest-j fractional bottom column sum, else at the lexicographically
// smallest (i,j) with fractional c_ij. At each step it prefers an edge
// reaching an allowed boundary endpoint, then an edge turning the walk,
// then continues straight; remaining ties break in the order down,
// right, up, left. A walk that closes on itself keeps the loop and
// drops the tail.
Circuit find_fractional_circuit(const RationalMatrix& X, bool row_sums_fixed);

// DOT rendering of the labeled grid graph, for external visualisation.
std::string partial_sum_graph_dot(const RationalMatrix& X);

}  // namespace signpoly
