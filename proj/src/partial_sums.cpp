#include "signpoly/partial_sums.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace signpoly {

PartialSumLabeling partial_sums(const RationalMatrix& X) {
    int m = X.rows(), n = X.cols();
    PartialSumLabeling out;
    out.grid = {m, n};
    out.r.assign(m, std::vector<Rational>(n));
    out.c.assign(m, std::vector<Rational>(n));
    for (int i = 0; i < m; ++i) {
        Rational acc = 0;
        for (int j = 0; j < n; ++j) {
            acc += X.at(i, j);
            out.r[i][j] = acc;
        }
    }
    for (int j = 0; j < n; ++j) {
        Rational acc = 0;
        for (int i = 0; i < m; ++i) {
            acc += X.at(i, j);
            out.c[i][j] = acc;
        }
    }
    return out;
}

RationalMatrix matrix_from_column_sums(const std::vector<std::vector<Rational>>& c) {
    int m = static_cast<int>(c.size());
    int n = m == 0 ? 0 : static_cast<int>(c[0].size());
    for (const auto& row : c)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("column sum table is not rectangular");
    RationalMatrix X(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            X.at(i, j) = i == 0 ? c[i][j] : c[i][j] - c[i - 1][j];
    return X;
}

namespace {

using Vertex = std::pair<int, int>;  // 1-indexed grid position

struct WalkStep {
    GridEdge e;
    Vertex to;
};

struct Walker {
    const PartialSumLabeling& ps;
    int m, n;
    bool row_sums_fixed;

    bool frac_v(int i, int j) const { return !is_integer(ps.c[i - 1][j - 1]); }
    bool frac_h(int i, int j) const { return !is_integer(ps.r[i - 1][j - 1]); }

    bool is_terminal(const Vertex& v) const {
        if (v.first == m + 1) return true;
        return !row_sums_fixed && v.second == n + 1;
    }

    // Walk outcome: either a finished circuit or a boundary vertex to
    // restart from (reached from an internal start).
    struct Outcome {
        std::optional<Circuit> circuit;
        std::optional<Vertex> restart;
    };

    Outcome walk(Vertex start, bool start_is_boundary) const {
        std::set<std::tuple<bool, int, int>> used;
        std::map<Vertex, int> pos;
        std::vector<Vertex> verts{start};
        std::vector<WalkStep> steps;
        pos[start] = 0;
        Vertex cur = start;
        std::optional<bool> incoming_vertical;

        while (true) {
            struct Cand {
                GridEdge e;
                Vertex to;
            };
            std::vector<Cand> cands;
            auto [i, j] = cur;
            auto consider = [&](bool vertical, int ei, int ej, Vertex to) {
                if (ei < 1 || ei > m || ej < 1 || ej > n) return;
                if (vertical ? !frac_v(ei, ej) : !frac_h(ei, ej)) return;
                if (used.count({vertical, ei, ej})) return;
                cands.push_back({GridEdge{vertical, ei, ej}, to});
            };
            // candidate order: down, right, up, left
            consider(true, i, j, {i + 1, j});
            consider(false, i, j, {i, j + 1});
            consider(true, i - 1, j, {i - 1, j});
            consider(false, i, j - 1, {i, j - 1});
            if (cands.empty())
                throw std::logic_error(
                    "fractional walk is stuck; the matrix does not satisfy the family "
                    "inequalities");

            const Cand* chosen = nullptr;
            for (const auto& c : cands)
                if (is_terminal(c.to)) {
                    chosen = &c;
                    break;
                }
            if (!chosen && incoming_vertical)
                for (const auto& c : cands)
                    if (c.e.vertical != *incoming_vertical) {
                        chosen = &c;
                        break;
                    }
            if (!chosen) chosen = &cands.front();

            used.insert({chosen->e.vertical, chosen->e.i, chosen->e.j});
            auto it = pos.find(chosen->to);
            if (it != pos.end()) {
                // keep the closed loop, drop the tail
                std::vector<WalkStep> cycle(steps.begin() + it->second, steps.end());
                cycle.push_back({chosen->e, chosen->to});
                return {make_closed(cycle), std::nullopt};
            }
            if (is_terminal(chosen->to)) {
                steps.push_back({chosen->e, chosen->to});
                if (start_is_boundary) return {make_open(steps), std::nullopt};
                return {std::nullopt, chosen->to};
            }
            steps.push_back({chosen->e, chosen->to});
            verts.push_back(chosen->to);
            pos[chosen->to] = static_cast<int>(verts.size()) - 1;
            cur = chosen->to;
            incoming_vertical = chosen->e.vertical;
        }
    }

    static Circuit make_open(const std::vector<WalkStep>& steps) {
        Circuit c;
        c.closed = false;
        for (const auto& s : steps) c.edges.push_back(s.e);
        for (size_t t = 1; t < steps.size(); ++t)
            if (steps[t - 1].e.vertical != steps[t].e.vertical)
                c.corners.push_back(steps[t - 1].to);
        return c;
    }

    static Circuit make_closed(const std::vector<WalkStep>& cycle) {
        size_t L = cycle.size();
        // rotate so the edge list opens a vertical run; the first corner
        // listed is then the one ending that run
        size_t s = 0;
        for (size_t t = 0; t < L; ++t) {
            if (cycle[t].e.vertical && !cycle[(t + L - 1) % L].e.vertical) {
                s = t;
                break;
            }
        }
        Circuit c;
        c.closed = true;
        for (size_t t = 0; t < L; ++t) c.edges.push_back(cycle[(s + t) % L].e);
        for (size_t t = 1; t <= L; ++t) {
            const auto& prev = cycle[(s + t - 1) % L];
            const auto& next = cycle[(s + t) % L];
            if (prev.e.vertical != next.e.vertical) c.corners.push_back(prev.to);
        }
        return c;
    }
};

}  // namespace

Circuit find_fractional_circuit(const RationalMatrix& X, bool row_sums_fixed) {
    PartialSumLabeling ps = partial_sums(X);
    int m = X.rows(), n = X.cols();
    Walker w{ps, m, n, row_sums_fixed};

    std::optional<Vertex> start;
    bool boundary_start = false;
    for (int j = 1; j <= n && !start; ++j)
        if (w.frac_v(m, j)) {
            start = Vertex{m + 1, j};
            boundary_start = true;
        }
    for (int i = 1; i <= m && !start; ++i)
        for (int j = 1; j <= n && !start; ++j)
            if (w.frac_v(i, j)) start = Vertex{i, j};
    if (!start) throw std::invalid_argument("no fractional column partial sum");

    auto outcome = w.walk(*start, boundary_start);
    if (outcome.restart) outcome = w.walk(*outcome.restart, true);
    if (!outcome.circuit) throw std::logic_error("fractional walk failed to close");
    return *outcome.circuit;
}

std::string partial_sum_graph_dot(const RationalMatrix& X) {
    PartialSumLabeling ps = partial_sums(X);
    int m = X.rows(), n = X.cols();
    std::string dot = "graph partial_sums {\n  node [shape=point];\n";
    auto name = [](int i, int j) {
        return "v" + std::to_string(i) + "_" + std::to_string(j);
    };
    for (int i = 1; i <= m + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            if (i == m + 1 && j == n + 1) continue;
            bool internal = i <= m && j <= n;
            dot += "  " + name(i, j) + " [pos=\"" + std::to_string(j) + "," +
                   std::to_string(-i) + "!\"";
            if (internal)
                dot += ", xlabel=\"" + rational_to_string(X.at(i - 1, j - 1)) + "\"";
            dot += "];\n";
        }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            dot += "  " + name(i, j) + " -- " + name(i + 1, j) + " [label=\"" +
                   rational_to_string(ps.c[i - 1][j - 1]) + "\"];\n";
            dot += "  " + name(i, j) + " -- " + name(i, j + 1) + " [label=\"" +
                   rational_to_string(ps.r[i - 1][j - 1]) + "\"];\n";
        }
    dot += "}\n";
    return dot;
}

}  // namespace signpoly
