#include "signpoly/faces.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace signpoly {

// Component ------------------------------------------------------------------

Component::Component(Family family, int m, int n)
    : family_(family),
      m_(m),
      n_(n),
      v_(static_cast<size_t>(m) * n, 0),
      h_(static_cast<size_t>(m) * n, kHEmpty) {}

bool Component::is_empty() const {
    for (uint8_t x : v_)
        if (x) return false;
    for (uint8_t x : h_)
        if (x != kHEmpty) return false;
    return true;
}

std::string Component::encode() const {
    std::string s;
    s.reserve(v_.size() + h_.size() + 8);
    s += static_cast<char>('A' + static_cast<int>(family_));
    s += std::to_string(m_) + "x" + std::to_string(n_) + ":";
    for (uint8_t x : v_) s += static_cast<char>('0' + x);
    for (uint8_t x : h_) s += static_cast<char>('0' + x);
    return s;
}

static bool shape_like(Family f) { return f == Family::Shape || f == Family::ShapeFirstCol; }

Component zero_dim_component(const SignMatrix& M, const FamilyTag& tag) {
    if (tag.family() == Family::Padded)
        throw std::invalid_argument("no partial sum graph labeling for the padded family");
    if (!in_family(M, tag))
        throw std::invalid_argument("matrix is not a member of " + tag.to_string());
    int m = M.rows(), n = M.cols();
    Component d(tag.family(), m, n);
    auto c = M.col_partial_sums();
    auto r = M.row_partial_sums();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            d.set_vlabel(i, j, c[i][j] == 0 ? 1 : 2);
            // the last-column row sums are fixed decorations for the
            // shape variants and never become stars
            if (shape_like(tag.family()) && j == n - 1)
                d.set_hlabel(i, j, Component::kHZero);
            else
                d.set_hlabel(i, j, r[i][j] == 0 ? Component::kHZero : Component::kHStar);
        }
    return d;
}

static void require_same_grid(const Component& a, const Component& b) {
    if (a.family() != b.family() || a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("components live on different grids");
}

Component component_union(const Component& a, const Component& b) {
    require_same_grid(a, b);
    Component out = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            out.set_vlabel(i, j, a.vlabel(i, j) | b.vlabel(i, j));
            out.set_hlabel(i, j, std::max(a.hlabel(i, j), b.hlabel(i, j)));
        }
    return out;
}

Component component_intersection(const Component& a, const Component& b) {
    require_same_grid(a, b);
    Component out = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            out.set_vlabel(i, j, a.vlabel(i, j) & b.vlabel(i, j));
            out.set_hlabel(i, j, std::min(a.hlabel(i, j), b.hlabel(i, j)));
        }
    return out;
}

bool component_contains(const Component& a, const Component& b) {
    require_same_grid(a, b);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (b.vlabel(i, j) & ~a.vlabel(i, j)) return false;
            if (b.hlabel(i, j) > a.hlabel(i, j)) return false;
        }
    return true;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int region_count(const Component& delta) {
    if (delta.is_empty()) return -1;
    int m = delta.rows(), n = delta.cols();
    // vertex keys: internal (i,j) 1-indexed; one shared exterior point for
    // darkened edge ends on the bottom or right boundary
    int stride = n + 2;
    int exterior = (m + 2) * stride;
    std::vector<int> keys;
    std::vector<std::pair<int, int>> edges;  // endpoints as keys
    auto key = [&](int i, int j) { return i >= m + 1 || j >= n + 1 ? exterior : i * stride + j; };
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            if (delta.v_darkened(i - 1, j - 1)) edges.push_back({key(i, j), key(i + 1, j)});
            if (delta.h_darkened(i - 1, j - 1)) edges.push_back({key(i, j), key(i, j + 1)});
        }
    if (edges.empty()) return 0;
    for (auto [a, b] : edges) {
        keys.push_back(a);
        keys.push_back(b);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    auto id = [&](int k) {
        return static_cast<int>(std::lower_bound(keys.begin(), keys.end(), k) - keys.begin());
    };
    UnionFind uf(static_cast<int>(keys.size()));
    for (auto [a, b] : edges) uf.unite(id(a), id(b));
    int comps = 0;
    for (int t = 0; t < static_cast<int>(keys.size()); ++t) comps += uf.find(t) == t;
    return static_cast<int>(edges.size()) - static_cast<int>(keys.size()) + comps;
}

// Face lattice ---------------------------------------------------------------

int FaceLattice::find(const Component& c) const {
    auto it = index.find(c.encode());
    return it == index.end() ? -1 : it->second;
}

bool FaceLattice::leq(int a, int b) const {
    return component_contains(components[b], components[a]);
}

int FaceLattice::join(int a, int b) const {
    return find(component_union(components[a], components[b]));
}

int FaceLattice::meet(int a, int b) const {
    std::vector<int> common;
    std::set_intersection(atom_ids[a].begin(), atom_ids[a].end(), atom_ids[b].begin(),
                          atom_ids[b].end(), std::back_inserter(common));
    Component acc(components[0].family(), components[0].rows(), components[0].cols());
    for (int t : common)
        acc = component_union(acc, components[atom_component_[static_cast<size_t>(t)]]);
    return find(acc);
}

int FaceLattice::top() const {
    for (int t = size() - 1; t >= 0; --t)
        if (static_cast<int>(atom_ids[t].size()) == static_cast<int>(atoms.size())) return t;
    return -1;
}

std::vector<std::pair<int, int>> FaceLattice::cover_edges() const {
    std::vector<std::pair<int, int>> covers;
    int N = size();
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            if (a == b || region[b] <= region[a] || !leq(a, b)) continue;
            bool direct = true;
            for (int c = 0; c < N && direct; ++c) {
                if (c == a || c == b) continue;
                if (region[c] <= region[a] || region[c] >= region[b]) continue;
                if (leq(a, c) && leq(c, b)) direct = false;
            }
            if (direct) covers.push_back({a, b});
        }
    return covers;
}

std::string FaceLattice::to_dot() const {
    std::string dot = "digraph face_lattice {\n  rankdir=BT;\n";
    for (int t = 0; t < size(); ++t)
        dot += "  f" + std::to_string(t) + " [label=\"f" + std::to_string(t) + " dim " +
               std::to_string(region[t]) + "\"];\n";
    for (auto [a, b] : cover_edges())
        dot += "  f" + std::to_string(a) + " -> f" + std::to_string(b) + ";\n";
    dot += "}\n";
    return dot;
}

FaceLattice face_lattice(const FamilyTag& tag, size_t max_components) {
    std::vector<SignMatrix> family = enumerate_family(tag);
    int m = tag.rows(), n = tag.cols();

    std::vector<Component> comps;
    std::map<std::string, int> seen;
    std::deque<int> queue;
    auto insert = [&](const Component& c) {
        auto [it, fresh] = seen.try_emplace(c.encode(), static_cast<int>(comps.size()));
        if (fresh) {
            comps.push_back(c);
            queue.push_back(it->second);
            if (comps.size() > max_components)
                throw std::runtime_error("face lattice exceeds the component guard");
        }
        return it->second;
    };

    std::vector<Component> atom_comps;
    atom_comps.reserve(family.size());
    for (const auto& M : family) atom_comps.push_back(zero_dim_component(M, tag));
    for (const auto& c : atom_comps) insert(c);
    // closure under joins: unions with single atoms reach every union
    while (!queue.empty()) {
        int t = queue.front();
        queue.pop_front();
        Component base = comps[t];
        for (const auto& a : atom_comps) insert(component_union(base, a));
    }
    comps.push_back(Component(tag.family(), m, n));  // empty component

    FaceLattice L;
    L.tag = tag;
    L.atoms = family;

    std::vector<int> order(comps.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> regions(comps.size());
    std::vector<std::string> codes(comps.size());
    for (size_t t = 0; t < comps.size(); ++t) {
        regions[t] = region_count(comps[t]);
        codes[t] = comps[t].encode();
    }
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (regions[x] != regions[y]) return regions[x] < regions[y];
        return codes[x] < codes[y];
    });
    for (int t : order) {
        L.index[codes[t]] = static_cast<int>(L.components.size());
        L.components.push_back(std::move(comps[t]));
        L.region.push_back(regions[t]);
    }
    L.atom_ids.resize(L.components.size());
    L.atom_component_.resize(atom_comps.size());
    for (size_t a = 0; a < atom_comps.size(); ++a)
        L.atom_component_[a] = L.index.at(atom_comps[a].encode());
    for (size_t t = 0; t < L.components.size(); ++t)
        for (size_t a = 0; a < atom_comps.size(); ++a)
            if (component_contains(L.components[t], atom_comps[a]))
                L.atom_ids[t].push_back(static_cast<int>(a));
    return L;
}

// Facet counts ---------------------------------------------------------------

long long facet_count_mn(int m, int n) {
    if (m < 2) throw std::domain_error("the facet count of P(m,n) requires m > 1");
    if (n < 1) throw std::domain_error("n must be positive");
    return 3LL * m * n - n - 2LL * (m - 1);
}

namespace {

// The C(lambda) case list, evaluated top down, first match wins.
long long facet_case_term(const Partition& lambda, int n) {
    int k = lambda.num_parts();
    int l1 = lambda.lambda1(), l2 = lambda.part(2);
    bool rect = lambda.is_rectangle();
    if (k == 1) return 2;
    if (1 < k && k < n - 1 && l1 != l2) return 1;
    if (1 < k && k < n - 1 && l1 == l2) return 0;
    if (k == n - 1 && (l1 != l2 || rect)) return 2;
    if (k == n - 1 && l1 == l2 && !rect) return 1;
    throw std::logic_error("facet case analysis fell through");
}

}  // namespace

long long facet_count_shape(const Partition& lambda, int n) {
    int k = lambda.num_parts();
    if (k == 0) throw std::domain_error("facet count needs a nonempty shape");
    if (k == n && lambda.is_rectangle()) return 0;  // a single point
    if (k >= n)
        throw std::domain_error("the facet count of P(lambda,n) requires k < n");
    long long l1 = lambda.lambda1(), l2 = lambda.part(2);
    long long lnm1 = lambda.part(n - 1);
    std::vector<int> a = frequency_rep(lambda);
    long long a_l1 = a[static_cast<size_t>(l1) - 1];
    long long D = distinct_part_sizes(lambda);
    return 3LL * n * l1 - n - 3 * (l1 - 1) - (n - 2) * (l1 - l2 + lnm1) - (k - a_l1) -
           2 * (l1 - D) - facet_case_term(lambda, n);
}

long long facet_count_two_row(int lambda1, int lambda2, int n) {
    if (lambda2 < 1 || lambda1 <= lambda2)
        throw std::domain_error("two row form needs lambda1 > lambda2 >= 1");
    if (n <= 2) throw std::domain_error("two row form needs n > k = 2");
    if (n > 3) return 3LL * n * lambda1 - n - 5 * (lambda1 - 1) - (n - 2LL) * (lambda1 - lambda2);
    // n = 3: here lambda_{n-1} = lambda2, so the removed column count is
    // (n-2)(lambda1 - lambda2 + lambda2) = (n-2) * lambda1
    return 3LL * n * lambda1 - n - 5 * (lambda1 - 1) - (n - 2LL) * lambda1 - 1;
}

long long facet_count_rectangle(int lambda1, int k, int n) {
    if (lambda1 < 1 || k < 1) throw std::domain_error("rectangle needs positive dimensions");
    if (k > n) throw std::domain_error("rectangle form needs k <= n");
    if (k == n) return 0;
    if (k == n - 1 || k == 1) return 2LL * n * lambda1 - n - 3 * (lambda1 - 1);
    return 3LL * n * lambda1 - n - 5 * (lambda1 - 1);
}

long long facet_count_hook(int lambda1, int k, int n) {
    if (lambda1 < 2 || k < 2) throw std::domain_error("hook form needs lambda1 >= 2, k >= 2");
    if (k > n) throw std::domain_error("hook form needs k <= n");
    if (k == n) return 2LL * n * (lambda1 - 1) - n - 3 * (lambda1 - 2);
    if (k == n - 1) return 2LL * n * lambda1 - 2 * n - 3 * (lambda1 - 1) + 4;
    if (1 < k && k < n - 1) return 2LL * n * lambda1 - 3 * (lambda1 - 1) - k + 2;
    throw std::domain_error("hook form hypothesis violated");
}

// Facet equality lists -------------------------------------------------------

std::string FacetEquality::to_string() const {
    switch (kind) {
        case FacetKind::RowSumZero:
            return "r(" + std::to_string(i) + "," + std::to_string(j) + ") = 0";
        case FacetKind::ColSumZero:
            return "c(" + std::to_string(i) + "," + std::to_string(j) + ") = 0";
        case FacetKind::ColSumOne:
            return "c(" + std::to_string(i) + "," + std::to_string(j) + ") = 1";
        case FacetKind::CornerZero:
            return "X(1,1) = 0";
        case FacetKind::FullColOne:
            return "c(" + std::to_string(i) + ",1) = 1";
    }
    return "?";
}

bool facet_equality_tight(const FacetEquality& eq, const SignMatrix& M) {
    auto c = M.col_partial_sums();
    auto r = M.row_partial_sums();
    switch (eq.kind) {
        case FacetKind::RowSumZero:
            return r[eq.i - 1][eq.j - 1] == 0;
        case FacetKind::ColSumZero:
            return c[eq.i - 1][eq.j - 1] == 0;
        case FacetKind::ColSumOne:
            return c[eq.i - 1][eq.j - 1] == 1;
        case FacetKind::CornerZero:
            return M.at(0, 0) == 0;
        case FacetKind::FullColOne:
            return c[M.rows() - 1][0] == 1;
    }
    return false;
}

namespace {

std::vector<FacetEquality> facet_equalities_mn(int m, int n) {
    std::vector<FacetEquality> out;
    for (int i = 2; i <= m; ++i)
        for (int j = 1; j <= n; ++j) out.push_back({FacetKind::RowSumZero, i, j});
    for (int i = 1; i <= m; ++i)
        for (int j = 2; j <= n; ++j) out.push_back({FacetKind::ColSumZero, i, j});
    for (int i = 1; i <= m; ++i)
        for (int j = 2; j <= n; ++j) out.push_back({FacetKind::ColSumOne, i, j});
    out.push_back({FacetKind::CornerZero, 1, 1});
    out.push_back({FacetKind::FullColOne, m, 1});
    return out;
}

// The minimal facet equality list for the shape families. The ranges
// track which bound inequalities stay essential once the row sums are
// fixed: the c = 0 block stops above the rows whose bound is implied
// when k = n-1, the last-column c = 0 entry at i = lambda1 survives
// for k < n-1 and for k = 1, the corner equality exists unless lambda
// is the (n-1)-row rectangle with k > 1, and the full-column equality
// exists unless k = 1. verify_facets certifies all of this against the
// vertex sets.
std::vector<FacetEquality> facet_equalities_shape(const Partition& lambda, int n) {
    int k = lambda.num_parts();
    int l1 = lambda.lambda1(), l2 = lambda.part(2);
    int lnm1 = lambda.part(n - 1);
    std::vector<int> a = frequency_rep(lambda);
    auto a_at = [&](int idx) { return idx >= 1 && idx <= l1 ? a[idx - 1] : 0; };

    std::vector<FacetEquality> out;
    for (int i = 2; i <= l1; ++i)
        for (int j = 1; j <= n - a_at(l1 - i + 1) - 1; ++j)
            out.push_back({FacetKind::RowSumZero, i, j});
    for (int i = 1; i <= l1 - lnm1; ++i)
        for (int j = 2; j <= n - 1; ++j) out.push_back({FacetKind::ColSumZero, i, j});
    for (int i = 1; i <= l1 - 1; ++i)
        if (a_at(l1 - i) > 0) out.push_back({FacetKind::ColSumZero, i, n});
    if (k < n - 1 || k == 1) out.push_back({FacetKind::ColSumZero, l1, n});
    for (int i = l1 - l2 + 1; i <= l1; ++i)
        for (int j = 2; j <= n - 1; ++j) out.push_back({FacetKind::ColSumOne, i, j});
    for (int i = l1 - l2 + 1; i <= l1; ++i)
        if (a_at(l1 - i + 1) > 0) out.push_back({FacetKind::ColSumOne, i, n});
    bool tall_rectangle = lambda.is_rectangle() && k == n - 1;
    if (!(tall_rectangle && k > 1)) out.push_back({FacetKind::CornerZero, 1, 1});
    if (k != 1) out.push_back({FacetKind::FullColOne, l1, 1});
    return out;
}

}  // namespace

std::vector<FacetEquality> facet_equalities(const FamilyTag& tag) {
    switch (tag.family()) {
        case Family::MN:
            if (tag.rows() < 2)
                throw std::domain_error("facet list of P(m,n) requires m > 1");
            return facet_equalities_mn(tag.rows(), tag.cols());
        case Family::Shape: {
            // reuse the scope rules of the count
            long long count = facet_count_shape(tag.lambda(), tag.cols());
            if (count == 0) return {};
            return facet_equalities_shape(tag.lambda(), tag.cols());
        }
        default:
            throw std::domain_error("facet lists cover the MN and Shape families");
    }
}

// Exact rank -----------------------------------------------------------------

int rational_rank(const std::vector<std::vector<Rational>>& vectors) {
    if (vectors.empty()) return 0;
    size_t cols = vectors[0].size();
    std::vector<std::vector<Integer>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != cols) throw std::invalid_argument("vectors of unequal length");
        Integer lcm = 1;
        for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        std::vector<Integer> row(cols);
        for (size_t t = 0; t < cols; ++t)
            row[t] = v[t].get_num() * (lcm / v[t].get_den());
        rows.push_back(std::move(row));
    }
    // Bareiss fraction-free elimination
    int rank = 0;
    Integer prev = 1;
    size_t nrows = rows.size();
    for (size_t col = 0; col < cols && rank < static_cast<int>(nrows); ++col) {
        size_t pivot = nrows;
        for (size_t t = rank; t < nrows; ++t)
            if (rows[t][col] != 0) {
                pivot = t;
                break;
            }
        if (pivot == nrows) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t t = rank + 1; t < nrows; ++t) {
            for (size_t s = col + 1; s < cols; ++s) {
                Integer num = rows[t][s] * rows[rank][col] - rows[t][col] * rows[rank][s];
                mpz_divexact(rows[t][s].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            rows[t][col] = 0;
        }
        prev = rows[rank][col];
        ++rank;
    }
    return rank;
}

long long affine_dimension(const std::vector<const SignMatrix*>& points) {
    if (points.empty()) return -1;
    const SignMatrix& base = *points[0];
    std::vector<std::vector<Rational>> diffs;
    for (size_t t = 1; t < points.size(); ++t) {
        std::vector<Rational> d;
        d.reserve(static_cast<size_t>(base.rows()) * base.cols());
        for (int i = 0; i < base.rows(); ++i)
            for (int j = 0; j < base.cols(); ++j)
                d.emplace_back(points[t]->at(i, j) - base.at(i, j));
        diffs.push_back(std::move(d));
    }
    return rational_rank(diffs);
}

// Facet verification ---------------------------------------------------------

FacetReport verify_facets(const FamilyTag& tag, int threads) {
    FacetReport report;
    long long dim = 0;
    if (tag.family() == Family::MN) {
        if (tag.rows() < 2) throw std::domain_error("verify_facets on P(m,n) requires m > 1");
        dim = static_cast<long long>(tag.rows()) * tag.cols();
        report.expected_count = facet_count_mn(tag.rows(), tag.cols());
    } else if (tag.family() == Family::Shape) {
        if (tag.lambda().num_parts() >= tag.cols())
            throw std::domain_error("verify_facets on P(lambda,n) requires k < n");
        dim = static_cast<long long>(tag.lambda().lambda1()) * (tag.cols() - 1);
        report.expected_count = facet_count_shape(tag.lambda(), tag.cols());
    } else {
        throw std::domain_error("verify_facets covers the MN and Shape families");
    }
    report.polytope_dim = dim;

    std::vector<SignMatrix> vertices = enumerate_family(tag);
    std::vector<const SignMatrix*> all;
    for (const auto& v : vertices) all.push_back(&v);
    if (affine_dimension(all) != dim) {
        report.pass = false;
        report.failure = "vertex set affine dimension does not match the dimension formula";
        return report;
    }

    std::vector<FacetEquality> listed = facet_equalities(tag);

    // the full inequality-to-equality universe from the defining description
    std::vector<FacetEquality> universe;
    for (int i = 1; i <= tag.rows(); ++i)
        for (int j = 1; j <= tag.cols(); ++j) {
            universe.push_back({FacetKind::RowSumZero, i, j});
            universe.push_back({FacetKind::ColSumZero, i, j});
            universe.push_back({FacetKind::ColSumOne, i, j});
        }

    auto tight_set = [&](const FacetEquality& eq) {
        std::vector<int> set;
        for (size_t t = 0; t < vertices.size(); ++t)
            if (facet_equality_tight(eq, vertices[t])) set.push_back(static_cast<int>(t));
        return set;
    };
    auto affine_dim_of = [&](const std::vector<int>& set) {
        std::vector<const SignMatrix*> pts;
        pts.reserve(set.size());
        for (int t : set) pts.push_back(&vertices[t]);
        return affine_dimension(pts);
    };

    report.listed.resize(listed.size());
    std::vector<std::vector<int>> listed_sets(listed.size());
    {
        auto work = [&](size_t lo, size_t hi) {
            for (size_t t = lo; t < hi; ++t) {
                listed_sets[t] = tight_set(listed[t]);
                report.listed[t].eq = listed[t];
                report.listed[t].tight_count = static_cast<int>(listed_sets[t].size());
                report.listed[t].affine_dim = affine_dim_of(listed_sets[t]);
                report.listed[t].pass = report.listed[t].affine_dim == dim - 1;
            }
        };
        int nt = std::max(1, threads);
        if (nt == 1) {
            work(0, listed.size());
        } else {
            std::vector<std::thread> pool;
            size_t chunk = (listed.size() + nt - 1) / nt;
            for (size_t lo = 0; lo < listed.size(); lo += chunk)
                pool.emplace_back(work, lo, std::min(lo + chunk, listed.size()));
            for (auto& t : pool) t.join();
        }
    }

    bool ok = listed.size() == static_cast<size_t>(report.expected_count);
    if (!ok) report.failure = "listed equality count differs from the closed form";
    for (const auto& check : report.listed)
        if (!check.pass && ok) {
            ok = false;
            report.failure = "equality " + check.eq.to_string() + " is not codimension 1";
        }
    // pairwise distinct facets = pairwise distinct tight vertex sets
    std::set<std::vector<int>> distinct(listed_sets.begin(), listed_sets.end());
    if (ok && distinct.size() != listed_sets.size()) {
        ok = false;
        report.failure = "two listed equalities cut the same facet";
    }

    for (const auto& eq : universe) {
        bool is_listed = false;
        for (const auto& l : listed)
            if (l.kind == eq.kind && l.i == eq.i && l.j == eq.j) {
                is_listed = true;
                break;
            }
        // the corner equality is equivalent to c_11 = 0 and r_11 = 0
        if (!is_listed)
            for (const auto& l : listed)
                if (l.kind == FacetKind::CornerZero && eq.i == 1 && eq.j == 1 &&
                    eq.kind != FacetKind::ColSumOne)
                    is_listed = true;
        if (is_listed) continue;
        DiscardedCheck d;
        d.eq = eq;
        std::vector<int> set = tight_set(eq);
        d.affine_dim = affine_dim_of(set);
        // harmless when it does not cut a codimension 1 face (that
        // includes equalities tight on the whole polytope) or when it
        // cuts a facet that is already listed
        d.implied = d.affine_dim != dim - 1 ||
                    std::find(listed_sets.begin(), listed_sets.end(), set) != listed_sets.end();
        if (!d.implied && ok) {
            ok = false;
            report.failure =
                "discarded inequality " + eq.to_string() + " cuts an unlisted facet";
        }
        report.discarded.push_back(std::move(d));
    }

    report.pass = ok;
    return report;
}

}  // namespace signpoly
