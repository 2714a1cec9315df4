#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "signpoly/rational.hpp"
#include "signpoly/sign_matrix.hpp"

namespace signpoly {

// Edge labeling of the grid graph representing a face of the polytope.
// Vertical edge labels are subsets of {0,1} (bit 0 for label 0, bit 1
// for label 1); horizontal edge labels live on the chain
// empty < {0} < {star}. Fixed decorations (the last-column row sums for
// shape-like variants, the last-row column sums for the first-column
// variant) are never darkened and carry no member-specific information.
class Component {
public:
    static constexpr uint8_t kHEmpty = 0, kHZero = 1, kHStar = 2;

    Component() = default;
    Component(Family family, int m, int n);  // empty labeling

    Family family() const { return family_; }
    int rows() const { return m_; }
    int cols() const { return n_; }
    bool is_empty() const;

    uint8_t vlabel(int i, int j) const { return v_[static_cast<size_t>(i) * n_ + j]; }
    uint8_t hlabel(int i, int j) const { return h_[static_cast<size_t>(i) * n_ + j]; }
    void set_vlabel(int i, int j, uint8_t x) { v_[static_cast<size_t>(i) * n_ + j] = x; }
    void set_hlabel(int i, int j, uint8_t x) { h_[static_cast<size_t>(i) * n_ + j] = x; }

    // Darkened edges: vertical labels {0,1}, horizontal labels star.
    bool v_darkened(int i, int j) const { return vlabel(i, j) == 3; }
    bool h_darkened(int i, int j) const { return hlabel(i, j) == kHStar; }

    std::string encode() const;  // canonical key, also used for ordering

    friend bool operator==(const Component&, const Component&) = default;

private:
    Family family_ = Family::MN;
    int m_ = 0, n_ = 0;
    std::vector<uint8_t> v_, h_;
};

// The 0-dimensional component of a family member: vertical labels {c_ij},
// horizontal labels 0 where r_ij = 0 and star otherwise. Injective on
// the family. Throws if M is not in the family, or for Padded tags,
// whose face machinery is not defined here.
Component zero_dim_component(const SignMatrix& M, const FamilyTag& tag);

// Entrywise label operations with 0 u star = star and 0 n star = 0.
Component component_union(const Component& a, const Component& b);
Component component_intersection(const Component& a, const Component& b);
// Entrywise subset test (0 counts as a subset of star): is b inside a?
bool component_contains(const Component& a, const Component& b);

// Number of bounded planar regions of the darkened subgraph, with every
// darkened edge end on the bottom or right boundary identified to one
// exterior point: E - V + C by the Euler relation. The empty component
// counts -1. Equals the dimension of the corresponding face.
int region_count(const Component& delta);

struct FaceLattice {
    FamilyTag tag;
    std::vector<SignMatrix> atoms;           // canonical family order
    std::vector<Component> components;       // sorted by (region, encoding); [0] empty
    std::vector<int> region;                 // per component
    std::vector<std::vector<int>> atom_ids;  // atoms contained in each component
    std::map<std::string, int> index;        // encoding -> component position
    std::vector<int> atom_component_;        // atom index -> component position

    int size() const { return static_cast<int>(components.size()); }
    int find(const Component& c) const;      // -1 if absent
    bool leq(int a, int b) const;
    int join(int a, int b) const;
    // Union of all 0-dimensional components inside the intersection.
    int meet(int a, int b) const;
    int top() const;
    std::vector<std::pair<int, int>> cover_edges() const;  // Hasse diagram
    std::string to_dot() const;
};

// All unions of 0-dimensional components plus the empty component,
// ordered by containment and graded by region count. The size guard
// aborts runaway closures (the count grows fast with the family).
FaceLattice face_lattice(const FamilyTag& tag, size_t max_components = 1000000);

// Facet machinery ---------------------------------------------------------

enum class FacetKind { RowSumZero, ColSumZero, ColSumOne, CornerZero, FullColOne };

// One facet-defining equality: r_ij = 0, c_ij = 0, c_ij = 1, the corner
// X_11 = 0, or the full first column sum c_m1 = 1.
struct FacetEquality {
    FacetKind kind;
    int i = 0, j = 0;  // 1-indexed
    friend bool operator==(const FacetEquality&, const FacetEquality&) = default;
    std::string to_string() const;
};

bool facet_equality_tight(const FacetEquality& eq, const SignMatrix& M);

// Closed-form facet counts. The MN count requires m > 1; the shape count
// requires k < n, except that a rectangle with k = n is a point and
// reports 0 facets. Out-of-scope parameters throw std::domain_error.
long long facet_count_mn(int m, int n);
long long facet_count_shape(const Partition& lambda, int n);

// Specialised forms; each equals facet_count_shape on its hypothesis
// domain. two_row requires lambda1 != lambda2; hook requires k >= 2 and
// covers k = n by reduction to a one-row rectangle.
long long facet_count_two_row(int lambda1, int lambda2, int n);
long long facet_count_rectangle(int lambda1, int k, int n);
long long facet_count_hook(int lambda1, int k, int n);

// The explicit facet equality list for MN and Shape tags; its length
// always equals the matching facet count.
std::vector<FacetEquality> facet_equalities(const FamilyTag& tag);

// Computational certificate that the listed equalities are genuine,
// pairwise distinct facets: each tight vertex set has affine dimension
// dim(P) - 1, the tight sets are distinct, and every non-listed
// inequality from the defining description is implied (its tight set
// either is not codimension 1 or coincides with a listed facet).
struct FacetCheck {
    FacetEquality eq;
    int tight_count = 0;
    long long affine_dim = -1;
    bool pass = false;
};

struct DiscardedCheck {
    FacetEquality eq;
    long long affine_dim = -1;
    bool implied = false;
};

struct FacetReport {
    bool pass = false;
    long long polytope_dim = -1;
    long long expected_count = -1;
    std::vector<FacetCheck> listed;
    std::vector<DiscardedCheck> discarded;
    std::string failure;  // first failure description, empty when pass
};

FacetReport verify_facets(const FamilyTag& tag, int threads = 1);

// Exact rank of a set of rational vectors (fraction-free elimination on
// the denominator-cleared integer rows).
int rational_rank(const std::vector<std::vector<Rational>>& vectors);

// Affine dimension of a finite point set (-1 for the empty set).
long long affine_dimension(const std::vector<const SignMatrix*>& points);

}  // namespace signpoly
