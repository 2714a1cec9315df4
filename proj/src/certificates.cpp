#include "signpoly/certificates.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace signpoly {

Rational evaluate(const Hyperplane& h, const RationalMatrix& X) {
    if (static_cast<int>(h.coeffs.size()) != X.rows())
        throw std::invalid_argument("hyperplane shape mismatch");
    Rational acc = 0;
    for (int i = 0; i < X.rows(); ++i) {
        if (static_cast<int>(h.coeffs[i].size()) != X.cols())
            throw std::invalid_argument("hyperplane shape mismatch");
        for (int j = 0; j < X.cols(); ++j)
            if (h.coeffs[i][j] != 0) acc += Rational(static_cast<long>(h.coeffs[i][j])) * X.at(i, j);
    }
    return acc;
}

long long evaluate(const Hyperplane& h, const SignMatrix& M) {
    if (static_cast<int>(h.coeffs.size()) != M.rows())
        throw std::invalid_argument("hyperplane shape mismatch");
    long long acc = 0;
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) acc += h.coeffs[i][j] * M.at(i, j);
    return acc;
}

namespace {

// Summing the column partial sums over C_M = {(i,j) : c_ij = 1} weights
// entry X_{i'j} once for every member of C_M at or below it.
std::vector<std::vector<long long>> shape_coeffs(const SignMatrix& M) {
    auto c = M.col_partial_sums();
    int m = M.rows(), n = M.cols();
    std::vector<std::vector<long long>> coeffs(m, std::vector<long long>(n, 0));
    for (int j = 0; j < n; ++j) {
        long long below = 0;
        for (int i = m - 1; i >= 0; --i) {
            if (c[i][j] == 1) ++below;
            coeffs[i][j] = below;
        }
    }
    return coeffs;
}

long long ones_count(const SignMatrix& M) {
    auto c = M.col_partial_sums();
    long long count = 0;
    for (const auto& row : c)
        for (int x : row) count += x == 1;
    return count;
}

}  // namespace

Hyperplane hyperplane_shape(const SignMatrix& M, const FamilyTag& tag) {
    if (tag.family() == Family::MN)
        throw std::invalid_argument("shape certificates need a prescribed-row-sum family");
    if (!in_family(M, tag))
        throw std::invalid_argument("matrix is not a member of " + tag.to_string());
    Hyperplane h;
    h.coeffs = shape_coeffs(M);
    h.threshold = make_rational(static_cast<long>(2 * ones_count(M) - 1), 2);
    return h;
}

Hyperplane hyperplane_mn(const SignMatrix& M) {
    auto c = M.col_partial_sums();
    int m = M.rows(), n = M.cols();
    Hyperplane h;
    h.coeffs.assign(m, std::vector<long long>(n, 0));
    for (int j = 0; j < n; ++j) {
        long long weight = 0;
        for (int i = m - 1; i >= 0; --i) {
            weight += c[i][j] == 1 ? 1 : -1;  // complement contributes negatively
            h.coeffs[i][j] = weight;
        }
    }
    h.threshold = make_rational(static_cast<long>(2 * ones_count(M) - 1), 2);
    return h;
}

bool verify_vertex(const SignMatrix& M, const FamilyTag& tag) {
    if (!in_family(M, tag))
        throw std::invalid_argument("matrix is not a member of " + tag.to_string());
    Hyperplane h = tag.family() == Family::MN ? hyperplane_mn(M) : hyperplane_shape(M, tag);
    Rational value(static_cast<long>(evaluate(h, M)));
    if (value <= h.threshold) return false;
    for (const SignMatrix& other : enumerate_family(tag)) {
        if (other == M) continue;
        if (Rational(static_cast<long>(evaluate(h, other))) >= h.threshold) return false;
    }
    return true;
}

std::vector<std::pair<SignMatrix, bool>> verify_vertex_all(const FamilyTag& tag,
                                                           int threads) {
    std::vector<SignMatrix> family = enumerate_family(tag);
    std::vector<std::pair<SignMatrix, bool>> out(family.size());
    auto work = [&](size_t lo, size_t hi) {
        for (size_t k = lo; k < hi; ++k) {
            const SignMatrix& M = family[k];
            Hyperplane h =
                tag.family() == Family::MN ? hyperplane_mn(M) : hyperplane_shape(M, tag);
            bool ok = Rational(static_cast<long>(evaluate(h, M))) > h.threshold;
            for (const SignMatrix& other : family) {
                if (!ok) break;
                if (other == M) continue;
                ok = Rational(static_cast<long>(evaluate(h, other))) < h.threshold;
            }
            out[k] = {M, ok};
        }
    };
    int nthreads = std::max(1, threads);
    if (nthreads == 1 || family.size() < 2) {
        work(0, family.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (family.size() + nthreads - 1) / nthreads;
        for (size_t lo = 0; lo < family.size(); lo += chunk)
            pool.emplace_back(work, lo, std::min(lo + chunk, family.size()));
        for (auto& t : pool) t.join();
    }
    return out;
}

}  // namespace signpoly
