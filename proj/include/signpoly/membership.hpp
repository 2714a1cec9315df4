#pragma once

#include <string>
#include <utility>
#include <vector>

#include "signpoly/partial_sums.hpp"
#include "signpoly/rational_matrix.hpp"
#include "signpoly/sign_matrix.hpp"

namespace signpoly {

struct Verdict {
    bool ok = false;
    std::string violation;  // first violated constraint, fixed scan order
    explicit operator bool() const { return ok; }
};

// Inequality-description membership test for the tagged family. Scan
// order for the reported violation: column bounds by (j,i), then row
// bounds by (i,j), then the family's equalities. Throws on dimension
// mismatch.
Verdict membership(const RationalMatrix& X, const FamilyTag& tag);

// One circuit-splitting step: X = (l-/(l+ + l-)) X+ + (l+/(l+ + l-)) X-,
// where both children satisfy the family inequalities and each has
// strictly more partial sums at an integer bound than X.
struct SplitResult {
    RationalMatrix x_plus, x_minus;
    Rational ell_plus, ell_minus;
    Circuit circuit;
};

SplitResult split(const RationalMatrix& X, const FamilyTag& tag);

// Number of partial sums at an integer bound: column partial sums equal
// to 0 or 1 plus row partial sums equal to 0. Splitting strictly
// increases this, which bounds the decomposition depth.
int integral_bound_count(const RationalMatrix& X);

struct ConvexCombination {
    std::vector<std::pair<Rational, SignMatrix>> terms;  // canonical matrix order
};

// Full decomposition into a convex combination of family vertices by
// iterated splitting with a work list; duplicate matrices are merged.
// Exact: the weighted sum reproduces X and the weights sum to 1.
ConvexCombination decompose(const RationalMatrix& X, const FamilyTag& tag);

// Evaluates the weighted sum of a combination's terms.
RationalMatrix combination_value(const ConvexCombination& comb);

// Margins of the transportation polytope matching the nonnegative part
// of P(v, lambda, n): y_i = a_{lambda1-i+1}, z_j = [j in v].
struct TransportationSpec {
    std::vector<int> y;  // row margins, length lambda1
    std::vector<int> z;  // column margins, length n
};

TransportationSpec transportation_spec(const std::vector<int>& v, const Partition& lambda,
                                       int n);

bool satisfies_margins(const RationalMatrix& X, const TransportationSpec& spec);

// Test oracle: for entrywise nonnegative X, family membership in
// ShapeFirstCol(v,lambda,n) must agree with the transportation margins.
// Returns whether the two predicates agree.
bool nonneg_equivalence_check(const RationalMatrix& X, const std::vector<int>& v,
                              const Partition& lambda, int n);

// Scans all integer matrices with entries in {-1,0,1} (entries outside
// that range are excluded by the column partial sum bounds) and keeps
// the family members. Must equal enumerate_family(tag).
std::vector<SignMatrix> integer_points(const FamilyTag& tag);

}  // namespace signpoly
