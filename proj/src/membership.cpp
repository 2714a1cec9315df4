#include "signpoly/membership.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace signpoly {

Verdict membership(const RationalMatrix& X, const FamilyTag& tag) {
    if (X.rows() != tag.rows() || X.cols() != tag.cols())
        throw std::invalid_argument("matrix dimensions do not match the family tag");
    PartialSumLabeling ps = partial_sums(X);
    int m = X.rows(), n = X.cols();
    auto at = [](int i, int j) {
        return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    };
    // column bounds scanned by (j,i), then row bounds by (i,j)
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) {
            if (ps.c[i][j] < 0)
                return {false, "column partial sum " + rational_to_string(ps.c[i][j]) +
                                   " at " + at(i, j) + " below 0"};
            if (ps.c[i][j] > 1)
                return {false, "column partial sum " + rational_to_string(ps.c[i][j]) +
                                   " at " + at(i, j) + " above 1"};
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (ps.r[i][j] < 0)
                return {false, "row partial sum " + rational_to_string(ps.r[i][j]) +
                                   " at " + at(i, j) + " below 0"};
    if (tag.row_sums_fixed()) {
        std::vector<int> targets = tag.row_sum_targets();
        for (int i = 0; i < m; ++i) {
            const Rational& total = n == 0 ? Rational(0) : ps.r[i][n - 1];
            if (total != targets[i])
                return {false, "row " + std::to_string(i + 1) + " sums to " +
                                   rational_to_string(total) + ", expected " +
                                   std::to_string(targets[i])};
        }
    }
    for (int i = 0; i < tag.zero_rows(); ++i)
        for (int j = 0; j < n; ++j)
            if (X.at(i, j) != 0)
                return {false, "entry at " + at(i, j) + " must be 0 in a padded family"};
    if (tag.col_sums_fixed()) {
        std::vector<int> targets = tag.col_sum_targets();
        for (int j = 0; j < n; ++j) {
            const Rational& total = m == 0 ? Rational(0) : ps.c[m - 1][j];
            if (total != targets[j])
                return {false, "column " + std::to_string(j + 1) + " sums to " +
                                   rational_to_string(total) + ", expected " +
                                   std::to_string(targets[j])};
        }
    }
    return {true, ""};
}

int integral_bound_count(const RationalMatrix& X) {
    PartialSumLabeling ps = partial_sums(X);
    int count = 0;
    for (int i = 0; i < X.rows(); ++i)
        for (int j = 0; j < X.cols(); ++j) {
            if (ps.c[i][j] == 0 || ps.c[i][j] == 1) ++count;
            if (ps.r[i][j] == 0) ++count;
        }
    return count;
}

namespace {

// Governing corner of every circuit edge: a vertical run's edges answer
// to the corner at the run's top, a horizontal run's to the corner at
// its left end. Corner k (0-based) carries +ell in X+ when k is even.
struct EdgeSigns {
    // parallel to circuit.edges: true when the governing corner is even
    // (a plus corner of X+)
    std::vector<bool> plus_corner;
};

EdgeSigns classify_edges(const Circuit& circuit) {
    std::map<std::pair<int, int>, int> corner_index;
    for (size_t k = 0; k < circuit.corners.size(); ++k)
        corner_index[circuit.corners[k]] = static_cast<int>(k);

    EdgeSigns out;
    out.plus_corner.resize(circuit.edges.size());
    size_t t = 0;
    while (t < circuit.edges.size()) {
        size_t end = t;
        while (end + 1 < circuit.edges.size() &&
               circuit.edges[end + 1].vertical == circuit.edges[t].vertical)
            ++end;
        // governing vertex: top of a vertical run, left end of a horizontal run
        int gi, gj;
        if (circuit.edges[t].vertical) {
            gi = circuit.edges[t].i;
            gj = circuit.edges[t].j;
            for (size_t s = t; s <= end; ++s) gi = std::min(gi, circuit.edges[s].i);
        } else {
            gi = circuit.edges[t].i;
            gj = circuit.edges[t].j;
            for (size_t s = t; s <= end; ++s) gj = std::min(gj, circuit.edges[s].j);
        }
        auto it = corner_index.find({gi, gj});
        if (it == corner_index.end())
            throw std::logic_error("circuit run end is not a corner");
        bool plus = it->second % 2 == 0;
        for (size_t s = t; s <= end; ++s) out.plus_corner[s] = plus;
        t = end + 1;
    }
    return out;
}

}  // namespace

SplitResult split(const RationalMatrix& X, const FamilyTag& tag) {
    Verdict v = membership(X, tag);
    if (!v.ok)
        throw std::invalid_argument("split requires a family member: " + v.violation);

    Circuit circuit = find_fractional_circuit(X, tag.row_sums_fixed());
    PartialSumLabeling ps = partial_sums(X);
    EdgeSigns signs = classify_edges(circuit);

    // ell+ is the largest step respecting every bound touched by the
    // circuit when plus corners gain and minus corners lose; ell- is the
    // mirror image.
    std::optional<Rational> ell_plus, ell_minus;
    auto lower = [](std::optional<Rational>& acc, const Rational& x) {
        if (!acc || x < *acc) acc = x;
    };
    for (size_t s = 0; s < circuit.edges.size(); ++s) {
        const GridEdge& e = circuit.edges[s];
        bool plus = signs.plus_corner[s];
        if (e.vertical) {
            const Rational& c = ps.c[e.i - 1][e.j - 1];
            if (plus) {
                lower(ell_plus, 1 - c);  // label rises toward 1 in X+
                lower(ell_minus, c);     // and falls toward 0 in X-
            } else {
                lower(ell_plus, c);
                lower(ell_minus, 1 - c);
            }
        } else {
            const Rational& r = ps.r[e.i - 1][e.j - 1];
            // row partial sums are only bounded below
            if (plus)
                lower(ell_minus, r);
            else
                lower(ell_plus, r);
        }
    }
    if (!ell_plus || !ell_minus || *ell_plus <= 0 || *ell_minus <= 0)
        throw std::logic_error("degenerate circuit step sizes");

    RationalMatrix x_plus = X, x_minus = X;
    for (size_t k = 0; k < circuit.corners.size(); ++k) {
        auto [i, j] = circuit.corners[k];
        if (k % 2 == 0) {
            x_plus.at(i - 1, j - 1) += *ell_plus;
            x_minus.at(i - 1, j - 1) -= *ell_minus;
        } else {
            x_plus.at(i - 1, j - 1) -= *ell_plus;
            x_minus.at(i - 1, j - 1) += *ell_minus;
        }
    }
    return SplitResult{std::move(x_plus), std::move(x_minus), *ell_plus, *ell_minus,
                       std::move(circuit)};
}

ConvexCombination decompose(const RationalMatrix& X, const FamilyTag& tag) {
    Verdict v = membership(X, tag);
    if (!v.ok)
        throw std::invalid_argument("decompose requires a family member: " + v.violation);

    std::map<SignMatrix, Rational> merged;
    std::vector<std::pair<Rational, RationalMatrix>> work;
    work.emplace_back(Rational(1), X);
    size_t safety = 0;
    while (!work.empty()) {
        if (++safety > 200000)
            throw std::runtime_error("decomposition work list exploded");
        auto [w, Y] = std::move(work.back());
        work.pop_back();
        if (Y.is_integral()) {
            merged[Y.to_sign_matrix()] += w;
            continue;
        }
        SplitResult s = split(Y, tag);
        Rational total = s.ell_plus + s.ell_minus;
        work.emplace_back(w * s.ell_minus / total, std::move(s.x_plus));
        work.emplace_back(w * s.ell_plus / total, std::move(s.x_minus));
    }
    ConvexCombination out;
    for (auto& [M, w] : merged) out.terms.emplace_back(w, M);
    return out;
}

RationalMatrix combination_value(const ConvexCombination& comb) {
    if (comb.terms.empty()) throw std::invalid_argument("empty combination");
    const SignMatrix& first = comb.terms.front().second;
    RationalMatrix acc(first.rows(), first.cols());
    for (const auto& [w, M] : comb.terms)
        acc = linear_combination(Rational(1), acc, w, RationalMatrix(M));
    return acc;
}

TransportationSpec transportation_spec(const std::vector<int>& v, const Partition& lambda,
                                       int n) {
    // constructing the tag revalidates (v, lambda, n)
    FamilyTag tag = FamilyTag::shape_first_col(v, lambda, n);
    TransportationSpec spec;
    spec.y = tag.row_sum_targets();
    spec.z = tag.col_sum_targets();
    return spec;
}

bool satisfies_margins(const RationalMatrix& X, const TransportationSpec& spec) {
    if (X.rows() != static_cast<int>(spec.y.size()) ||
        X.cols() != static_cast<int>(spec.z.size()))
        throw std::invalid_argument("matrix dimensions do not match the margins");
    for (int i = 0; i < X.rows(); ++i) {
        Rational s = 0;
        for (int j = 0; j < X.cols(); ++j) s += X.at(i, j);
        if (s != spec.y[i]) return false;
    }
    for (int j = 0; j < X.cols(); ++j) {
        Rational s = 0;
        for (int i = 0; i < X.rows(); ++i) s += X.at(i, j);
        if (s != spec.z[j]) return false;
    }
    return true;
}

bool nonneg_equivalence_check(const RationalMatrix& X, const std::vector<int>& v,
                              const Partition& lambda, int n) {
    if (!X.is_nonnegative())
        throw std::invalid_argument("the equivalence check expects a nonnegative matrix");
    bool member = membership(X, FamilyTag::shape_first_col(v, lambda, n)).ok;
    bool margins = satisfies_margins(X, transportation_spec(v, lambda, n));
    return member == margins;
}

std::vector<SignMatrix> integer_points(const FamilyTag& tag) {
    int m = tag.rows(), n = tag.cols();
    size_t cells = static_cast<size_t>(m) * n;
    if (cells > 16) throw std::invalid_argument("integer point scan limited to 16 cells");
    std::vector<SignMatrix> out;
    std::vector<int> digits(cells, -1);
    while (true) {
        RationalMatrix X(m, n);
        for (size_t t = 0; t < cells; ++t)
            X.at(static_cast<int>(t) / n, static_cast<int>(t) % n) = digits[t];
        if (membership(X, tag).ok) out.push_back(X.to_sign_matrix());
        size_t t = cells;
        while (t > 0 && digits[t - 1] == 1) digits[--t] = -1;
        if (t == 0) break;
        ++digits[t - 1];
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace signpoly
