#include "signpoly/sign_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace signpoly {

SignMatrix::SignMatrix(int m, int n) : m_(m), n_(n), e_(static_cast<size_t>(m) * n, 0) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative matrix dimensions");
}

SignMatrix SignMatrix::unchecked(int m, int n, std::vector<int8_t> e) {
    SignMatrix M;
    M.m_ = m;
    M.n_ = n;
    M.e_ = std::move(e);
    return M;
}

std::optional<std::string> SignMatrix::check(const std::vector<std::vector<int>>& entries) {
    int m = static_cast<int>(entries.size());
    int n = m == 0 ? 0 : static_cast<int>(entries[0].size());
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != n) return "matrix is not rectangular";
    std::vector<int> col(n, 0);
    for (int i = 0; i < m; ++i) {
        int rowsum = 0;
        for (int j = 0; j < n; ++j) {
            int e = entries[i][j];
            if (e < -1 || e > 1)
                return "entry " + std::to_string(e) + " outside {-1,0,1} at (" +
                       std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            col[j] += e;
            rowsum += e;
            if (col[j] < 0 || col[j] > 1)
                return "column partial sum " + std::to_string(col[j]) + " at (" +
                       std::to_string(i + 1) + "," + std::to_string(j + 1) + ") not in {0,1}";
            if (rowsum < 0)
                return "row partial sum " + std::to_string(rowsum) + " at (" +
                       std::to_string(i + 1) + "," + std::to_string(j + 1) + ") negative";
        }
    }
    return std::nullopt;
}

SignMatrix SignMatrix::validate(const std::vector<std::vector<int>>& entries) {
    if (auto err = check(entries)) throw std::invalid_argument(*err);
    int m = static_cast<int>(entries.size());
    int n = m == 0 ? 0 : static_cast<int>(entries[0].size());
    std::vector<int8_t> e;
    e.reserve(static_cast<size_t>(m) * n);
    for (const auto& row : entries)
        for (int x : row) e.push_back(static_cast<int8_t>(x));
    return unchecked(m, n, std::move(e));
}

int SignMatrix::row_sum(int i) const {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += at(i, j);
    return s;
}

std::vector<int> SignMatrix::row_sums() const {
    std::vector<int> out(m_);
    for (int i = 0; i < m_; ++i) out[i] = row_sum(i);
    return out;
}

std::vector<int> SignMatrix::col_sums() const {
    std::vector<int> out(n_, 0);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) out[j] += at(i, j);
    return out;
}

std::vector<std::vector<int>> SignMatrix::col_partial_sums() const {
    std::vector<std::vector<int>> c(m_, std::vector<int>(n_, 0));
    for (int j = 0; j < n_; ++j) {
        int acc = 0;
        for (int i = 0; i < m_; ++i) {
            acc += at(i, j);
            c[i][j] = acc;
        }
    }
    return c;
}

std::vector<std::vector<int>> SignMatrix::row_partial_sums() const {
    std::vector<std::vector<int>> r(m_, std::vector<int>(n_, 0));
    for (int i = 0; i < m_; ++i) {
        int acc = 0;
        for (int j = 0; j < n_; ++j) {
            acc += at(i, j);
            r[i][j] = acc;
        }
    }
    return r;
}

std::vector<std::vector<int>> SignMatrix::entries() const {
    std::vector<std::vector<int>> out(m_, std::vector<int>(n_));
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) out[i][j] = at(i, j);
    return out;
}

std::string SignMatrix::to_string() const {
    std::string s;
    for (int i = 0; i < m_; ++i) {
        s += i == 0 ? "[" : " ";
        for (int j = 0; j < n_; ++j) {
            s += at(i, j) < 0 ? "" : " ";
            s += std::to_string(at(i, j));
        }
        s += i + 1 == m_ ? " ]" : "\n";
    }
    if (m_ == 0) s = "[ ]";
    return s;
}

// FamilyTag ----------------------------------------------------------------

FamilyTag FamilyTag::mn(int m, int n) {
    if (m < 0 || n < 1) throw std::invalid_argument("mn family requires m >= 0, n >= 1");
    FamilyTag t;
    t.family_ = Family::MN;
    t.rows_ = m;
    t.cols_ = n;
    return t;
}

FamilyTag FamilyTag::shape(Partition lambda, int n) {
    if (n < 1) throw std::invalid_argument("shape family requires n >= 1");
    FamilyTag t;
    t.family_ = Family::Shape;
    t.rows_ = lambda.lambda1();
    t.cols_ = n;
    t.lambda_ = std::move(lambda);
    return t;
}

FamilyTag FamilyTag::shape_first_col(std::vector<int> v, Partition lambda, int n) {
    if (n < 1) throw std::invalid_argument("family requires n >= 1");
    if (static_cast<int>(v.size()) != lambda.num_parts())
        throw std::invalid_argument("first column length must equal the number of parts");
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1 || v[i] > n)
            throw std::invalid_argument("first column entries must lie in [1, n]");
        if (i > 0 && v[i - 1] >= v[i])
            throw std::invalid_argument("first column must be strictly increasing");
    }
    FamilyTag t;
    t.family_ = Family::ShapeFirstCol;
    t.rows_ = lambda.lambda1();
    t.cols_ = n;
    t.lambda_ = std::move(lambda);
    t.v_ = std::move(v);
    return t;
}

FamilyTag FamilyTag::padded(int m, Partition lambda, int n) {
    if (n < 1) throw std::invalid_argument("family requires n >= 1");
    if (m < lambda.lambda1())
        throw std::invalid_argument("padded family requires m >= lambda1");
    FamilyTag t;
    t.family_ = Family::Padded;
    t.rows_ = m;
    t.cols_ = n;
    t.lambda_ = std::move(lambda);
    return t;
}

std::vector<int> FamilyTag::row_sum_targets() const {
    std::vector<int> out;
    if (family_ == Family::MN) return out;
    std::vector<int> a = frequency_rep(lambda_);
    int l1 = lambda_.lambda1();
    out.assign(rows_, 0);
    int pad = rows_ - l1;  // zero_rows() for Padded, 0 otherwise
    for (int i = 0; i < l1; ++i) out[pad + i] = a[l1 - 1 - i];
    return out;
}

std::vector<int> FamilyTag::col_sum_targets() const {
    if (family_ != Family::ShapeFirstCol)
        throw std::logic_error("column sums are only prescribed for the first-column family");
    std::vector<int> z(cols_, 0);
    for (int x : v_) z[x - 1] = 1;
    return z;
}

int FamilyTag::zero_rows() const {
    return family_ == Family::Padded ? rows_ - lambda_.lambda1() : 0;
}

std::string FamilyTag::to_string() const {
    switch (family_) {
        case Family::MN:
            return "MN(" + std::to_string(rows_) + "," + std::to_string(cols_) + ")";
        case Family::Shape:
            return "Shape(" + lambda_.to_string() + "," + std::to_string(cols_) + ")";
        case Family::ShapeFirstCol: {
            std::string v = "(";
            for (size_t i = 0; i < v_.size(); ++i) {
                if (i) v += ",";
                v += std::to_string(v_[i]);
            }
            return "ShapeFirstCol(" + v + ")," + lambda_.to_string() + "," +
                   std::to_string(cols_) + ")";
        }
        case Family::Padded:
            return "Padded(" + std::to_string(rows_) + "," + lambda_.to_string() + "," +
                   std::to_string(cols_) + ")";
    }
    return "?";
}

// Bijection ----------------------------------------------------------------

Tableau phi(const SignMatrix& M) {
    int m = M.rows(), n = M.cols();
    auto c = M.col_partial_sums();
    // Tableau column m-i+1 collects the columns with partial sum one in
    // matrix row i; assemble columns, then transpose into rows.
    std::vector<std::vector<int>> cols(m);
    for (int i = 0; i < m; ++i) {
        auto& col = cols[m - 1 - i];
        for (int j = 0; j < n; ++j)
            if (c[i][j] == 1) col.push_back(j + 1);
    }
    while (!cols.empty() && cols.back().empty()) cols.pop_back();
    size_t nrows = cols.empty() ? 0 : cols[0].size();
    std::vector<std::vector<int>> rows(nrows);
    for (const auto& col : cols)
        for (size_t r = 0; r < col.size(); ++r) rows[r].push_back(col[r]);
    return make_tableau(std::move(rows), n);
}

SignMatrix phi_inv(const Tableau& T, std::optional<int> rows) {
    int l1 = T.shape.lambda1();
    int m = rows.value_or(l1);
    if (m < l1)
        throw std::invalid_argument("target rows smaller than the number of tableau columns");
    int n = T.bound_n;
    SignMatrixBuilder b(m, n);
    std::vector<int> prev(n, 0);  // column partial sums of the row above
    for (int i = 0; i < m; ++i) {
        std::vector<int> cur(n, 0);
        int tcol = m - i;  // 1-indexed tableau column feeding matrix row i
        if (tcol <= l1)
            for (int x : T.column(tcol)) cur[x - 1] = 1;
        for (int j = 0; j < n; ++j) b.set(i, j, cur[j] - prev[j]);
        prev = std::move(cur);
    }
    return b.finish();
}

// Families -----------------------------------------------------------------

bool in_family(const SignMatrix& M, const FamilyTag& tag) {
    if (M.rows() != tag.rows() || M.cols() != tag.cols())
        throw std::invalid_argument("matrix dimensions do not match the family tag");
    switch (tag.family()) {
        case Family::MN:
            return true;
        case Family::Shape:
        case Family::Padded: {
            if (M.row_sums() != tag.row_sum_targets()) return false;
            for (int i = 0; i < tag.zero_rows(); ++i)
                for (int j = 0; j < M.cols(); ++j)
                    if (M.at(i, j) != 0) return false;
            return true;
        }
        case Family::ShapeFirstCol:
            return M.row_sums() == tag.row_sum_targets() &&
                   M.col_sums() == tag.col_sum_targets();
    }
    return false;
}

namespace {

// Row-by-row backtracking with entries tried in the order -1, 0, 1 so the
// output is already in canonical lexicographic order. State: the column
// partial sum vector (each in {0,1}), the running row partial sum, and
// the remaining row sum budget when row totals are prescribed.
struct FamilyEnumerator {
    const FamilyTag& tag;
    int m, n;
    std::vector<int> row_targets;  // empty when rows are free
    std::vector<int> col_targets;  // empty when columns are free
    int zero_rows;
    SignMatrixBuilder b;
    std::vector<int> col;  // current column partial sums
    std::vector<SignMatrix> out;

    explicit FamilyEnumerator(const FamilyTag& t)
        : tag(t),
          m(t.rows()),
          n(t.cols()),
          row_targets(t.row_sums_fixed() ? t.row_sum_targets() : std::vector<int>{}),
          col_targets(t.col_sums_fixed() ? t.col_sum_targets() : std::vector<int>{}),
          zero_rows(t.zero_rows()),
          b(t.rows(), t.cols()),
          col(t.cols(), 0) {}

    void run() {
        cell(0, 0, 0);
    }

    void cell(int i, int j, int rowsum) {
        if (i == m) {
            out.push_back(b.finish());
            return;
        }
        if (j == n) {
            if (!row_targets.empty() && rowsum != row_targets[i]) return;
            cell(i + 1, 0, 0);
            return;
        }
        bool forced_zero = i < zero_rows;
        for (int e = -1; e <= 1; ++e) {
            if (forced_zero && e != 0) continue;
            int c = col[j] + e;
            if (c < 0 || c > 1) continue;
            int rs = rowsum + e;
            if (rs < 0) continue;
            if (!row_targets.empty()) {
                // the remaining cells of this row change the sum by at most 1 each
                int remaining = n - 1 - j;
                if (rs - remaining > row_targets[i] || rs + remaining < row_targets[i])
                    continue;
            }
            if (!col_targets.empty()) {
                int rows_left = m - 1 - i;
                if (c - rows_left > col_targets[j] || c + rows_left < col_targets[j])
                    continue;
            }
            col[j] = c;
            b.set(i, j, e);
            cell(i, j + 1, rs);
            col[j] -= e;
        }
    }
};

}  // namespace

std::vector<SignMatrix> enumerate_family(const FamilyTag& tag) {
    if (tag.rows() == 0) return {SignMatrix(0, tag.cols())};
    FamilyEnumerator en(tag);
    en.run();
    return std::move(en.out);
}

bool is_asm(const SignMatrix& M) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("alternating sign matrices are square");
    for (int s : M.row_sums())
        if (s != 1) return false;  // staircase shape row sums are all one
    auto r = M.row_partial_sums();
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
            if (r[i][j] < 0 || r[i][j] > 1) return false;
    return true;
}

SignMatrix pad_embed(const SignMatrix& M, int rows) {
    if (rows < M.rows())
        throw std::invalid_argument("pad_embed target has fewer rows than the matrix");
    std::vector<int8_t> e(static_cast<size_t>(rows) * M.cols(), 0);
    std::copy(M.e_.begin(), M.e_.end(),
              e.begin() + static_cast<size_t>(rows - M.rows()) * M.cols());
    return SignMatrix::unchecked(rows, M.cols(), std::move(e));
}

}  // namespace signpoly
