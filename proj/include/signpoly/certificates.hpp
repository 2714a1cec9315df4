#pragma once

#include <vector>

#include "signpoly/rational.hpp"
#include "signpoly/rational_matrix.hpp"
#include "signpoly/sign_matrix.hpp"

namespace signpoly {

// Separating hyperplane sum_{ij} coeffs[i][j] X_ij = threshold. The
// certified matrix evaluates strictly above the threshold, every other
// family member strictly below.
struct Hyperplane {
    std::vector<std::vector<long long>> coeffs;
    Rational threshold;
};

Rational evaluate(const Hyperplane& h, const RationalMatrix& X);
long long evaluate(const Hyperplane& h, const SignMatrix& M);

// Certificate for the prescribed-row-sum families: with
// C_M = {(i,j) : c_ij = 1}, the functional sums the column partial sums
// over C_M; the threshold is |lambda| - 1/2. Requires in_family(M, tag)
// with a Shape, ShapeFirstCol or Padded tag.
Hyperplane hyperplane_shape(const SignMatrix& M, const FamilyTag& tag);

// Certificate for the full m x n family: the Shape functional minus the
// same sum over the complement of C_M; threshold |C_M| - 1/2.
Hyperplane hyperplane_mn(const SignMatrix& M);

// Exhaustive separation check of M against every other member of its
// family, with the family-appropriate hyperplane.
bool verify_vertex(const SignMatrix& M, const FamilyTag& tag);

// Same check over the whole family at once; returns per-member results
// in canonical enumeration order.
std::vector<std::pair<SignMatrix, bool>> verify_vertex_all(const FamilyTag& tag,
                                                           int threads = 1);

}  // namespace signpoly
