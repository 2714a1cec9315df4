#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "signpoly/sign_matrix.hpp"

using namespace signpoly;

namespace {

// the worked 3x6 example: SSYT of shape [3,3,1,1,1] and its sign matrix
const std::vector<std::vector<int>> kWorked36 = {
    {0, 0, 1, 0, 0, 1}, {0, 1, 0, 0, 0, -1}, {1, 0, -1, 1, 1, 1}};

}  // namespace

TEST_CASE("validation accepts and rejects correctly") {
    CHECK(SignMatrix::validate({{1}}).at(0, 0) == 1);
    auto err = SignMatrix::check({{-1}});
    REQUIRE(err.has_value());
    CHECK(err->find("column partial sum") != std::string::npos);
    CHECK(err->find("(1,1)") != std::string::npos);
    CHECK_FALSE(SignMatrix::check(kWorked36).has_value());
    CHECK(SignMatrix::check({{1, 0}, {0}}).has_value());
    CHECK(SignMatrix::check({{2}}).has_value());
    // row condition reported with its location
    auto rowerr = SignMatrix::check({{1, 0}, {-1, 0}});
    REQUIRE(rowerr.has_value());
    CHECK(rowerr->find("row partial sum") != std::string::npos);
    CHECK(rowerr->find("(2,1)") != std::string::npos);
}

TEST_CASE("canonical order is lexicographic on entries") {
    SignMatrix a = SignMatrix::validate({{0, 1}, {1, -1}});
    SignMatrix b = SignMatrix::validate({{1, 0}, {0, 0}});
    CHECK(a < b);  // -1 < 0 < 1 entrywise from the front
}

TEST_CASE("the bijection maps the worked 3x6 matrix to its tableau") {
    SignMatrix M = SignMatrix::validate(kWorked36);
    Tableau T = phi(M);
    CHECK(T.shape == Partition({3, 3, 1, 1, 1}));
    CHECK(T.rows ==
          std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 6}, {4}, {5}, {6}});
    CHECK(T.bound_n == 6);
    CHECK(phi_inv(T) == M);
    CHECK(phi_inv(T).row_sums() == std::vector<int>{2, 0, 3});
}

TEST_CASE("small bijection cases") {
    SignMatrix zero(1, 1);
    CHECK(phi(zero).empty());
    CHECK(phi_inv(phi(zero), 1) == zero);

    SignMatrix M = SignMatrix::validate({{1, 0}, {0, 1}});
    Tableau T = phi(M);
    CHECK(T.shape == Partition({2, 1}));
    CHECK(T.rows == std::vector<std::vector<int>>{{1, 1}, {2}});
    CHECK(phi_inv(T) == M);
}

TEST_CASE("row sums of the image follow the frequency representation") {
    // frequency representation of [2,2] is (0,2); matrix row i sums to
    // the reversed-index entry, so the row sum vector is (2,0)
    for (const Tableau& T : enumerate_ssyt(Partition({2, 2}), 3))
        CHECK(phi_inv(T).row_sums() == std::vector<int>{2, 0});
}

TEST_CASE("round trips") {
    for (const Partition& p : partitions_in_box(3, 3))
        for (int n = 1; n <= 4; ++n)
            for (const Tableau& T : enumerate_ssyt(p, n)) CHECK(phi(phi_inv(T)) == T);
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (const SignMatrix& M : enumerate_family(FamilyTag::mn(m, n)))
                CHECK(pad_embed(phi_inv(phi(M)), m) == M);
}

TEST_CASE("family membership") {
    SignMatrix M = SignMatrix::validate(kWorked36);
    CHECK(in_family(M, FamilyTag::shape(Partition({3, 3, 1, 1, 1}), 6)));
    CHECK_FALSE(in_family(M, FamilyTag::shape(Partition({3, 3}), 6)));
    CHECK(in_family(SignMatrix(2, 3), FamilyTag::mn(2, 3)));
    CHECK_THROWS_AS(in_family(M, FamilyTag::mn(2, 2)), std::invalid_argument);
}

TEST_CASE("family enumeration counts and canonical order") {
    auto mn22 = enumerate_family(FamilyTag::mn(2, 2));
    CHECK(mn22.size() == 10);
    CHECK(std::is_sorted(mn22.begin(), mn22.end()));
    CHECK(enumerate_family(FamilyTag::shape(Partition({2, 2}), 3)).size() == 6);
    CHECK(enumerate_family(FamilyTag::shape(Partition({3, 2, 1}), 3)).size() == 8);
}

TEST_CASE("backtracking agrees with the tableau route") {
    for (const Partition& p : partitions_in_box(3, 3)) {
        for (int n = 1; n <= 3; ++n) {
            auto direct = enumerate_family(FamilyTag::shape(p, n));
            std::set<SignMatrix> via_tableaux;
            for (const Tableau& T : enumerate_ssyt(p, n))
                via_tableaux.insert(phi_inv(T, p.lambda1()));
            CHECK(via_tableaux == std::set<SignMatrix>(direct.begin(), direct.end()));
        }
    }
}

TEST_CASE("shapes partition the full family") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            std::set<SignMatrix> whole;
            size_t total = 0;
            for (const Partition& p : partitions_in_box(n, m)) {
                for (const Tableau& T : enumerate_ssyt(p, n)) {
                    whole.insert(pad_embed(phi_inv(T), m));
                    ++total;
                }
            }
            auto family = enumerate_family(FamilyTag::mn(m, n));
            CHECK(total == family.size());  // the union is disjoint
            CHECK(whole == std::set<SignMatrix>(family.begin(), family.end()));
        }
}

TEST_CASE("row sum refinement") {
    FamilyTag tag = FamilyTag::shape(Partition({3, 2, 1}), 3);
    std::vector<int> targets = tag.row_sum_targets();
    for (const SignMatrix& M : enumerate_family(tag)) CHECK(M.row_sums() == targets);
}

TEST_CASE("first column family enumeration") {
    CHECK(enumerate_family(
              FamilyTag::shape_first_col({1, 2}, Partition({2, 2}), 3))
              .size() == 3);
    CHECK(enumerate_family(
              FamilyTag::shape_first_col({1, 3}, Partition({2, 2}), 3))
              .size() == 2);
    CHECK(enumerate_family(
              FamilyTag::shape_first_col({2, 3}, Partition({2, 2}), 3))
              .size() == 1);
    CHECK_THROWS_AS(FamilyTag::shape_first_col({3, 2}, Partition({2, 2}), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(FamilyTag::shape_first_col({1, 4}, Partition({2, 2}), 3),
                    std::invalid_argument);
}

TEST_CASE("padded families") {
    FamilyTag padded = FamilyTag::padded(3, Partition({2, 2}), 3);
    auto members = enumerate_family(padded);
    CHECK(members.size() == 6);
    for (const SignMatrix& M : members) {
        CHECK(M.rows() == 3);
        for (int j = 0; j < 3; ++j) CHECK(M.at(0, j) == 0);
        CHECK(in_family(M, padded));
    }
    CHECK_THROWS_AS(FamilyTag::padded(1, Partition({2, 2}), 3), std::invalid_argument);
}

TEST_CASE("alternating sign matrix test") {
    CHECK(is_asm(SignMatrix::validate({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
    CHECK(is_asm(SignMatrix::validate({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}})));
    CHECK_FALSE(is_asm(SignMatrix(2, 2)));
    CHECK_THROWS_AS(is_asm(SignMatrix(2, 3)), std::invalid_argument);

    int count = 0;
    auto family = enumerate_family(FamilyTag::shape(Partition({3, 2, 1}), 3));
    for (const SignMatrix& M : family) count += is_asm(M);
    CHECK(family.size() == 8);
    CHECK(count == 7);
}

TEST_CASE("alternating test agrees with the alternate definition") {
    // rows and columns sum to one and nonzero entries alternate in sign
    auto alternates = [](const std::vector<int>& line) {
        int last = 0;
        for (int x : line)
            if (x != 0) {
                if (last == x) return false;
                last = x;
            }
        return true;
    };
    for (const SignMatrix& M : enumerate_family(FamilyTag::mn(3, 3))) {
        bool direct = true;
        for (int s : M.row_sums()) direct = direct && s == 1;
        for (int s : M.col_sums()) direct = direct && s == 1;
        for (int i = 0; i < 3 && direct; ++i) {
            std::vector<int> row, col;
            for (int j = 0; j < 3; ++j) {
                row.push_back(M.at(i, j));
                col.push_back(M.at(j, i));
            }
            direct = alternates(row) && alternates(col);
        }
        CHECK(direct == is_asm(M));
    }
}

TEST_CASE("padding") {
    SignMatrix M = SignMatrix::validate(kWorked36);
    CHECK(pad_embed(M, 3) == M);
    SignMatrix padded = pad_embed(M, 5);
    CHECK(padded.row_sums() == std::vector<int>{0, 0, 2, 0, 3});
    CHECK(in_family(padded, FamilyTag::padded(5, Partition({3, 3, 1, 1, 1}), 6)));
    CHECK(pad_embed(SignMatrix::validate({{1}}), 2) ==
          SignMatrix::validate({{0}, {1}}));
    CHECK_THROWS_AS(pad_embed(M, 2), std::invalid_argument);
}
