#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "signpoly/partition.hpp"
#include "signpoly/tableau.hpp"

namespace signpoly {

// A sign matrix: entries in {-1,0,1}, every column partial sum from the
// top in {0,1}, every row partial sum from the left nonnegative.
class SignMatrix {
public:
    SignMatrix() = default;
    SignMatrix(int m, int n);  // zero matrix

    // Checks the defining conditions; returns the first violation in
    // row-major scan order (column condition before row condition at
    // each cell), or nullopt if the matrix is valid.
    static std::optional<std::string> check(const std::vector<std::vector<int>>& entries);
    // Same, but throws std::invalid_argument on violation.
    static SignMatrix validate(const std::vector<std::vector<int>>& entries);

    int rows() const { return m_; }
    int cols() const { return n_; }
    int at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }  // 0-indexed

    int row_sum(int i) const;
    std::vector<int> row_sums() const;
    std::vector<int> col_sums() const;
    // Partial sum tables: col_partial[i][j] = sum of column j through row i,
    // row_partial[i][j] = sum of row i through column j (0-indexed).
    std::vector<std::vector<int>> col_partial_sums() const;
    std::vector<std::vector<int>> row_partial_sums() const;

    std::vector<std::vector<int>> entries() const;

    // Canonical order: lexicographic on the row-major entry list.
    friend bool operator==(const SignMatrix&, const SignMatrix&) = default;
    friend auto operator<=>(const SignMatrix&, const SignMatrix&) = default;

    std::string to_string() const;

private:
    static SignMatrix unchecked(int m, int n, std::vector<int8_t> e);
    int m_ = 0, n_ = 0;
    std::vector<int8_t> e_;
    friend SignMatrix pad_embed(const SignMatrix&, int);
    friend class SignMatrixBuilder;
};

// Mutable staging buffer used by enumeration and the tableau bijection.
class SignMatrixBuilder {
public:
    SignMatrixBuilder(int m, int n) : m_(m), n_(n), e_(static_cast<size_t>(m) * n, 0) {}
    void set(int i, int j, int v) { e_[static_cast<size_t>(i) * n_ + j] = static_cast<int8_t>(v); }
    int get(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    SignMatrix finish() const { return SignMatrix::unchecked(m_, n_, e_); }

private:
    int m_, n_;
    std::vector<int8_t> e_;
};

enum class Family { MN, Shape, ShapeFirstCol, Padded };

// Selector for the four polytope families:
//   MN(m,n)                all m x n sign matrices
//   Shape(lambda,n)        row sums prescribed by the shape
//   ShapeFirstCol(v,...)   additionally column sums prescribed by v
//   Padded(m,lambda,n)     Shape embedded in m rows under leading zero rows
class FamilyTag {
public:
    static FamilyTag mn(int m, int n);
    static FamilyTag shape(Partition lambda, int n);
    static FamilyTag shape_first_col(std::vector<int> v, Partition lambda, int n);
    static FamilyTag padded(int m, Partition lambda, int n);

    Family family() const { return family_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Partition& lambda() const { return lambda_; }
    const std::vector<int>& first_col() const { return v_; }

    bool row_sums_fixed() const { return family_ != Family::MN; }
    bool col_sums_fixed() const { return family_ == Family::ShapeFirstCol; }
    // Prescribed total sum of each matrix row (empty for MN).
    std::vector<int> row_sum_targets() const;
    // Prescribed total sum of each matrix column (ShapeFirstCol only).
    std::vector<int> col_sum_targets() const;
    // Number of leading all-zero rows (Padded only, else 0).
    int zero_rows() const;

    std::string to_string() const;

    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;

private:
    Family family_ = Family::MN;
    int rows_ = 0, cols_ = 0;
    Partition lambda_;
    std::vector<int> v_;
};

// Aval bijection, sign matrix to tableau: tableau column m-i+1 lists, in
// increasing order, the columns j whose partial sum through row i is 1.
Tableau phi(const SignMatrix& M);

// Inverse direction. The result has shape.lambda1() rows by default;
// pass `rows` to embed into a taller matrix (leading zero rows), which
// is the convention for tableaux with fewer than m columns.
SignMatrix phi_inv(const Tableau& T, std::optional<int> rows = std::nullopt);

bool in_family(const SignMatrix& M, const FamilyTag& tag);

// Every member of the family exactly once, in canonical (lexicographic
// row-major, -1 < 0 < 1) order, by backtracking over the column partial
// sum vector.
std::vector<SignMatrix> enumerate_family(const FamilyTag& tag);

// Alternating sign matrix test: square, in the staircase shape family,
// and with row partial sums also in {0,1}. Throws on non-square input.
bool is_asm(const SignMatrix& M);

// Prepend rows - M.rows() zero rows. Throws if rows < M.rows().
SignMatrix pad_embed(const SignMatrix& M, int rows);

}  // namespace signpoly
