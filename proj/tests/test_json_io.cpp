#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "signpoly/json_io.hpp"
#include "signpoly/membership.hpp"

using namespace signpoly;

TEST_CASE("rational wire format") {
    CHECK(rational_from_json(json::parse("\"9/10\"")) == make_rational(9, 10));
    CHECK(rational_from_json(json::parse("\"-7/10\"")) == make_rational(-7, 10));
    CHECK(rational_from_json(json::parse("3")) == 3);
    CHECK(rational_to_json(make_rational(4, 2)) == json("2"));
    CHECK(rational_to_json(make_rational(1, 2)) == json("1/2"));
    CHECK_THROWS_AS(rational_from_json(json::parse("0.9")), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(json::parse("\"1/0\"")), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
}

TEST_CASE("sign matrix and tableau round trips") {
    SignMatrix M = SignMatrix::validate({{0, 0, 1}, {1, 0, -1}});
    json j = sign_matrix_to_json(M);
    CHECK(j.at("m") == 2);
    CHECK(sign_matrix_from_json(j) == M);

    Tableau T = phi(M);
    CHECK(tableau_from_json(tableau_to_json(T)) == T);

    json bad = j;
    bad["entries"][0][0] = -1;
    CHECK_THROWS_AS(sign_matrix_from_json(bad), std::invalid_argument);
}

TEST_CASE("family tag round trips") {
    std::vector<FamilyTag> tags = {
        FamilyTag::mn(2, 3), FamilyTag::shape(Partition({3, 1}), 4),
        FamilyTag::shape_first_col({1, 3}, Partition({2, 2}), 3),
        FamilyTag::padded(5, Partition({2, 1}), 3)};
    for (const FamilyTag& tag : tags)
        CHECK(family_tag_from_json(family_tag_to_json(tag)) == tag);
    CHECK_THROWS_AS(family_tag_from_json(json{{"variant", "nope"}}),
                    std::invalid_argument);
}

TEST_CASE("rational matrix round trip") {
    RationalMatrix X(2, 2);
    X.at(0, 0) = make_rational(9, 10);
    X.at(1, 1) = make_rational(-1, 3);
    CHECK(rational_matrix_from_json(rational_matrix_to_json(X)) == X);
    json mixed = json::parse(R"({"entries": [["1/2", 1], [0, "0"]]})");
    RationalMatrix Y = rational_matrix_from_json(mixed);
    CHECK(Y.at(0, 0) == make_rational(1, 2));
    CHECK(Y.at(0, 1) == 1);
}

TEST_CASE("combination wire format") {
    FamilyTag tag = FamilyTag::shape(Partition({2, 2}), 3);
    auto family = enumerate_family(tag);
    RationalMatrix X = linear_combination(make_rational(1, 3), RationalMatrix(family[0]),
                                          make_rational(2, 3), RationalMatrix(family[5]));
    ConvexCombination comb = decompose(X, tag);
    json j = combination_to_json(comb);
    ConvexCombination back = combination_from_json(j);
    CHECK(back.terms.size() == comb.terms.size());
    CHECK(combination_value(back) == X);
    for (const auto& term : j.at("terms")) CHECK(term.at("weight").is_string());
}

TEST_CASE("component wire format") {
    FamilyTag tag = FamilyTag::shape(Partition({2, 2}), 3);
    auto family = enumerate_family(tag);
    json j = component_to_json(zero_dim_component(family[0], tag), tag);
    CHECK(j.at("v").size() == 2);
    CHECK(j.at("h")[0].size() == 3);
    CHECK(j.contains("fixed_row_sums"));
    for (const auto& row : j.at("v"))
        for (const auto& cell : row)
            CHECK((cell == "0" || cell == "1" || cell == "01" || cell == ""));

    json circuit = circuit_to_json(
        find_fractional_circuit(rational_matrix_from_json(json::parse(
                                    R"({"entries": [["1/2","1/2"]]})")),
                                false));
    CHECK((circuit.at("kind") == "open" || circuit.at("kind") == "closed"));
    CHECK(circuit.at("corners").is_array());
}

TEST_CASE("facet report serialisation") {
    FacetReport report = verify_facets(FamilyTag::mn(2, 2));
    json j = facet_report_to_json(report);
    CHECK(j.at("pass") == true);
    CHECK(j.at("count") == 8);
    CHECK(j.at("listed").size() == 8);
}
