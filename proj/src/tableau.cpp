#include "signpoly/tableau.hpp"

#include <stdexcept>

namespace signpoly {

std::vector<int> Tableau::column(int c) const {
    std::vector<int> out;
    for (const auto& row : rows)
        if (c <= static_cast<int>(row.size())) out.push_back(row[c - 1]);
    return out;
}

Tableau make_tableau(std::vector<std::vector<int>> rows, int bound_n) {
    if (bound_n < 0) throw std::invalid_argument("tableau entry bound must be nonnegative");
    std::vector<int> shape_parts;
    shape_parts.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.empty()) throw std::invalid_argument("tableau rows must be nonempty");
        shape_parts.push_back(static_cast<int>(row.size()));
    }
    Partition shape(shape_parts);  // validates weakly decreasing row lengths
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c < rows[r].size(); ++c) {
            int x = rows[r][c];
            if (x < 1 || x > bound_n)
                throw std::invalid_argument("tableau entry out of range [1, n]");
            if (c > 0 && rows[r][c - 1] > x)
                throw std::invalid_argument("tableau rows must weakly increase");
            if (r > 0 && rows[r - 1][c] >= x)
                throw std::invalid_argument("tableau columns must strictly increase");
        }
    }
    return Tableau{std::move(shape), std::move(rows), bound_n};
}

Integer hook_content_count(const Partition& shape, int n) {
    if (n < 0) throw std::invalid_argument("entry bound must be nonnegative");
    Partition conj = conjugate(shape);
    Integer num = 1, den = 1;
    for (int i = 1; i <= shape.num_parts(); ++i) {
        for (int j = 1; j <= shape.part(i); ++j) {
            long content = j - i;
            if (n + content <= 0) return 0;  // a zero factor kills the product
            long hook = (shape.part(i) - j) + (conj.part(j) - i) + 1;
            num *= Integer(n + content);
            den *= Integer(hook);
        }
    }
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw std::logic_error("hook content product is not integral");
    return q;
}

Integer gordon_count(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("gordon_count requires positive m, n");
    Integer num = 1, den = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            num *= Integer(m + i + j - 1);
            den *= Integer(i + j - 1);
        }
    }
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw std::logic_error("gordon product is not integral");
    return q;
}

namespace {

// Backtracking over cells in row-major order, candidates ascending, so
// tableaux come out sorted by their row reading word. first_col, when
// present, pins column 1.
void fill_cells(const Partition& shape, int n, const std::vector<int>* first_col,
                std::vector<std::vector<int>>& rows, int r, int c,
                std::vector<Tableau>& out) {
    if (r == shape.num_parts()) {
        out.push_back(make_tableau(rows, n));
        return;
    }
    int next_r = r, next_c = c + 1;
    if (next_c == shape.part(r + 1)) {
        ++next_r;
        next_c = 0;
    }
    int lo = 1, hi = n;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0 && c < shape.part(r)) lo = std::max(lo, rows[r - 1][c] + 1);
    if (first_col && c == 0) {
        int forced = (*first_col)[r];
        if (forced < lo || forced > hi) return;
        lo = hi = forced;
    }
    for (int x = lo; x <= hi; ++x) {
        rows[r][c] = x;
        fill_cells(shape, n, first_col, rows, next_r, next_c, out);
    }
}

std::vector<Tableau> enumerate_impl(const Partition& shape, int n,
                                    const std::vector<int>* first_col) {
    std::vector<Tableau> out;
    if (shape.empty()) {
        out.push_back(Tableau{Partition(), {}, n});
        return out;
    }
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= shape.num_parts(); ++i)
        rows.emplace_back(shape.part(i), 0);
    fill_cells(shape, n, first_col, rows, 0, 0, out);
    return out;
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int n) {
    if (n < 0) throw std::invalid_argument("entry bound must be nonnegative");
    return enumerate_impl(shape, n, nullptr);
}

std::vector<Tableau> enumerate_ssyt_first_column(const std::vector<int>& v,
                                                 const Partition& shape, int n) {
    if (static_cast<int>(v.size()) != shape.num_parts())
        throw std::invalid_argument("first column length must equal the number of parts");
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] >= v[i + 1])
            throw std::invalid_argument("first column must be strictly increasing");
    for (int x : v)
        if (x < 1) throw std::invalid_argument("first column entries must be positive");
    return enumerate_impl(shape, n, shape.empty() ? nullptr : &v);
}

}  // namespace signpoly
