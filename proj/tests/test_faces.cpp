#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "signpoly/faces.hpp"

using namespace signpoly;

namespace {

SignMatrix sm(std::vector<std::vector<int>> e) { return SignMatrix::validate(e); }

}  // namespace

TEST_CASE("zero dimensional components") {
    FamilyTag tag = FamilyTag::mn(2, 2);
    Component zero = zero_dim_component(SignMatrix(2, 2), tag);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(zero.vlabel(i, j) == 1);  // {0}
            CHECK(zero.hlabel(i, j) == Component::kHZero);
        }

    Component id = zero_dim_component(sm({{1, 0}, {0, 1}}), tag);
    CHECK(id.vlabel(0, 0) == 2);
    CHECK(id.vlabel(1, 0) == 2);
    CHECK(id.vlabel(0, 1) == 1);
    CHECK(id.vlabel(1, 1) == 2);
    CHECK(id.hlabel(0, 0) == Component::kHStar);
    CHECK(id.hlabel(0, 1) == Component::kHStar);
    CHECK(id.hlabel(1, 0) == Component::kHZero);
    CHECK(id.hlabel(1, 1) == Component::kHStar);
}

TEST_CASE("components are injective on the family") {
    FamilyTag tag = FamilyTag::mn(2, 2);
    std::set<std::string> seen;
    for (const SignMatrix& M : enumerate_family(tag))
        CHECK(seen.insert(zero_dim_component(M, tag).encode()).second);
}

TEST_CASE("union and intersection follow the label conventions") {
    FamilyTag tag = FamilyTag::mn(2, 2);
    auto family = enumerate_family(tag);
    Component a = zero_dim_component(family[0], tag);
    Component b = zero_dim_component(family[5], tag);
    CHECK(component_union(a, a) == a);
    CHECK(component_intersection(a, a) == a);
    Component u = component_union(a, b);
    CHECK(component_contains(u, a));
    CHECK(component_contains(u, b));
    Component i = component_intersection(a, b);
    CHECK(component_contains(a, i));
    CHECK(component_contains(u, i));
    CHECK_THROWS_AS(component_union(a, Component(Family::MN, 3, 3)),
                    std::invalid_argument);
}

TEST_CASE("region counts") {
    FamilyTag tag = FamilyTag::mn(2, 2);
    auto family = enumerate_family(tag);
    for (const SignMatrix& M : family)
        CHECK(region_count(zero_dim_component(M, tag)) == 0);
    CHECK(region_count(Component(Family::MN, 2, 2)) == -1);

    Component all(Family::MN, 2, 2);
    for (const SignMatrix& M : family)
        all = component_union(all, zero_dim_component(M, tag));
    CHECK(region_count(all) == 4);
}

TEST_CASE("face lattice of a segment") {
    FaceLattice L = face_lattice(FamilyTag::mn(1, 1));
    REQUIRE(L.size() == 4);  // empty, two vertices, the segment
    CHECK(L.region == std::vector<int>{-1, 0, 0, 1});
    CHECK(L.atom_ids[3].size() == 2);
    CHECK(L.meet(1, 2) == 0);
    CHECK(L.join(1, 2) == 3);
}

TEST_CASE("face lattice of the shape family") {
    FaceLattice L = face_lattice(FamilyTag::shape(Partition({2, 2}), 3));
    CHECK(L.atoms.size() == 6);
    int atoms_seen = 0;
    for (int t = 0; t < L.size(); ++t) atoms_seen += L.region[t] == 0;
    CHECK(atoms_seen == 6);
    CHECK(L.region[L.top()] == 4);
}

TEST_CASE("face lattice of a first-column family") {
    // three vertices spanning a triangle
    FaceLattice L =
        face_lattice(FamilyTag::shape_first_col({1, 2}, Partition({2, 2}), 3));
    CHECK(L.size() == 8);
    CHECK(L.region == std::vector<int>{-1, 0, 0, 0, 1, 1, 1, 2});
    for (int t = 0; t < L.size(); ++t) {
        std::vector<const SignMatrix*> pts;
        for (int a : L.atom_ids[t]) pts.push_back(&L.atoms[a]);
        CHECK(affine_dimension(pts) == L.region[t]);
    }
}

TEST_CASE("covers increase the region count") {
    FaceLattice L = face_lattice(FamilyTag::mn(2, 2));
    for (auto [a, b] : L.cover_edges()) CHECK(L.region[b] >= L.region[a] + 1);
    std::string dot = L.to_dot();
    CHECK(dot.find("digraph") != std::string::npos);
}

TEST_CASE("facet counts") {
    CHECK(facet_count_mn(2, 3) == 13);
    CHECK(facet_count_mn(2, 2) == 8);
    CHECK(facet_count_mn(3, 3) == 20);
    CHECK_THROWS_AS(facet_count_mn(1, 5), std::domain_error);

    CHECK(facet_count_shape(Partition({2, 2}), 3) == 6);
    CHECK(facet_count_shape(Partition({3, 1}), 3) == 10);
    CHECK(facet_count_shape(Partition({2, 2}), 2) == 0);  // point
    CHECK_THROWS_AS(facet_count_shape(Partition({2, 1}), 2), std::domain_error);
    CHECK_THROWS_AS(facet_count_shape(Partition(), 3), std::domain_error);
}

TEST_CASE("specialised counts agree with the general one") {
    CHECK(facet_count_two_row(3, 1, 4) == facet_count_shape(Partition({3, 1}), 4));
    CHECK(facet_count_two_row(3, 1, 3) == facet_count_shape(Partition({3, 1}), 3));
    CHECK(facet_count_rectangle(2, 2, 3) == 6);
    CHECK(facet_count_rectangle(2, 2, 3) == facet_count_shape(Partition({2, 2}), 3));
    CHECK(facet_count_hook(2, 2, 4) == facet_count_shape(Partition({2, 1}), 4));
    CHECK(facet_count_hook(2, 2, 4) == 13);
    CHECK_THROWS_AS(facet_count_two_row(2, 2, 4), std::domain_error);
    CHECK_THROWS_AS(facet_count_hook(1, 3, 4), std::domain_error);
}

TEST_CASE("facet equality lists match the counts") {
    CHECK(facet_equalities(FamilyTag::mn(2, 2)).size() == 8);
    CHECK(facet_equalities(FamilyTag::mn(2, 3)).size() == 13);
    CHECK(facet_equalities(FamilyTag::shape(Partition({2, 2}), 3)).size() == 6);
    CHECK(facet_equalities(FamilyTag::shape(Partition({3, 1}), 3)).size() == 10);
    CHECK_THROWS_AS(facet_equalities(FamilyTag::shape_first_col({1, 2}, Partition({2, 2}), 3)),
                    std::domain_error);
}

TEST_CASE("facet verification on the smallest full family") {
    FacetReport report = verify_facets(FamilyTag::mn(2, 2));
    CHECK(report.pass);
    CHECK(report.polytope_dim == 4);
    CHECK(report.listed.size() == 8);
    for (const auto& check : report.listed) {
        CHECK(check.pass);
        CHECK(check.affine_dim == 3);
    }
    for (const auto& d : report.discarded) CHECK(d.implied);
}

TEST_CASE("facet verification on the worked shape family") {
    FacetReport report = verify_facets(FamilyTag::shape(Partition({2, 2}), 3));
    CHECK(report.pass);
    CHECK(report.polytope_dim == 4);
    CHECK(report.listed.size() == 6);
}

TEST_CASE("exact rank") {
    CHECK(rational_rank({}) == 0);
    std::vector<std::vector<Rational>> basis = {
        {Rational(1), Rational(0), Rational(0)},
        {Rational(0), Rational(1), Rational(0)},
        {Rational(0), Rational(0), Rational(1)}};
    CHECK(rational_rank(basis) == 3);

    std::vector<std::vector<Rational>> dependent = {
        {rational_from_string("1/2"), rational_from_string("1/3")},
        {rational_from_string("3/2"), rational_from_string("1")},
        {rational_from_string("1/6"), rational_from_string("1/9")}};
    CHECK(rational_rank(dependent) == 1);

    auto family = enumerate_family(FamilyTag::mn(2, 2));
    std::vector<const SignMatrix*> pts;
    for (const auto& M : family) pts.push_back(&M);
    CHECK(affine_dimension(pts) == 4);
    CHECK(affine_dimension({}) == -1);
    CHECK(affine_dimension({pts[0]}) == 0);
}

TEST_CASE("padded families have no component model") {
    CHECK_THROWS_AS(
        zero_dim_component(pad_embed(sm({{1}}), 2), FamilyTag::padded(2, Partition({1}), 1)),
        std::invalid_argument);
}
