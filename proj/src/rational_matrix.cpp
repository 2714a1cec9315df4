#include "signpoly/rational_matrix.hpp"

#include <stdexcept>

namespace signpoly {

RationalMatrix::RationalMatrix(const SignMatrix& M)
    : m_(M.rows()), n_(M.cols()), e_(static_cast<size_t>(M.rows()) * M.cols()) {
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) at(i, j) = M.at(i, j);
}

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows) {
    m_ = static_cast<int>(rows.size());
    n_ = m_ == 0 ? 0 : static_cast<int>(rows[0].size());
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("matrix is not rectangular");
    e_.reserve(static_cast<size_t>(m_) * n_);
    for (const auto& row : rows)
        for (const auto& x : row) e_.push_back(x);
}

bool RationalMatrix::is_integral() const {
    for (const auto& x : e_)
        if (!is_integer(x)) return false;
    return true;
}

bool RationalMatrix::is_nonnegative() const {
    for (const auto& x : e_)
        if (x < 0) return false;
    return true;
}

SignMatrix RationalMatrix::to_sign_matrix() const {
    std::vector<std::vector<int>> entries(m_, std::vector<int>(n_));
    for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const Rational& x = at(i, j);
            if (!is_integer(x) || x < -1 || x > 1)
                throw std::invalid_argument("matrix entry is not a sign matrix entry");
            entries[i][j] = static_cast<int>(x.get_num().get_si());
        }
    }
    return SignMatrix::validate(entries);
}

std::string RationalMatrix::to_string() const {
    std::string s = "[";
    for (int i = 0; i < m_; ++i) {
        if (i) s += "; ";
        for (int j = 0; j < n_; ++j) {
            if (j) s += " ";
            s += rational_to_string(at(i, j));
        }
    }
    return s + "]";
}

RationalMatrix linear_combination(const Rational& x, const RationalMatrix& A,
                                  const Rational& y, const RationalMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw std::invalid_argument("shape mismatch in linear combination");
    RationalMatrix out(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) out.at(i, j) = x * A.at(i, j) + y * B.at(i, j);
    return out;
}

}  // namespace signpoly
