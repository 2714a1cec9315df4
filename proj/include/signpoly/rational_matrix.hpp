#pragma once

#include <vector>

#include "signpoly/rational.hpp"
#include "signpoly/sign_matrix.hpp"

namespace signpoly {

// Dense matrix of exact rationals; the candidate points of the polytopes.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int m, int n) : m_(m), n_(n), e_(static_cast<size_t>(m) * n) {}
    explicit RationalMatrix(const SignMatrix& M);
    explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return m_; }
    int cols() const { return n_; }
    const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }

    bool is_integral() const;
    bool is_nonnegative() const;
    // Conversion when every entry is an integer in {-1,0,1} and the sign
    // matrix conditions hold; throws otherwise.
    SignMatrix to_sign_matrix() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    std::string to_string() const;

private:
    int m_ = 0, n_ = 0;
    std::vector<Rational> e_;
};

// x*A + y*B with exact coefficients; shapes must agree.
RationalMatrix linear_combination(const Rational& x, const RationalMatrix& A,
                                  const Rational& y, const RationalMatrix& B);

}  // namespace signpoly
