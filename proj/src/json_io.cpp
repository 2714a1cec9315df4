#include "signpoly/json_io.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace signpoly {

json rational_to_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_float())
        throw std::invalid_argument(
            "floating point values are not accepted; use exact \"p/q\" strings");
    throw std::invalid_argument("expected a rational as an integer or \"p/q\" string");
}

json partition_to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be an integer array");
    return Partition(j.get<std::vector<int>>());
}

json tableau_to_json(const Tableau& t) {
    return json{{"shape", t.shape.parts()}, {"rows", t.rows}, {"n", t.bound_n}};
}

Tableau tableau_from_json(const json& j) {
    Tableau t = make_tableau(j.at("rows").get<std::vector<std::vector<int>>>(),
                             j.at("n").get<int>());
    if (j.contains("shape") && partition_from_json(j.at("shape")) != t.shape)
        throw std::invalid_argument("tableau shape field disagrees with the rows");
    return t;
}

json sign_matrix_to_json(const SignMatrix& M) {
    return json{{"m", M.rows()}, {"n", M.cols()}, {"entries", M.entries()}};
}

SignMatrix sign_matrix_from_json(const json& j) {
    auto entries = j.at("entries").get<std::vector<std::vector<int>>>();
    SignMatrix M = SignMatrix::validate(entries);
    if (j.contains("m") && j.at("m").get<int>() != M.rows())
        throw std::invalid_argument("sign matrix row count disagrees with the entries");
    if (j.contains("n")) {
        int n = j.at("n").get<int>();
        if (M.rows() == 0)
            M = SignMatrix(0, n);
        else if (n != M.cols())
            throw std::invalid_argument("sign matrix column count disagrees with the entries");
    }
    return M;
}

json family_tag_to_json(const FamilyTag& tag) {
    switch (tag.family()) {
        case Family::MN:
            return json{{"variant", "mn"}, {"m", tag.rows()}, {"n", tag.cols()}};
        case Family::Shape:
            return json{{"variant", "shape"},
                        {"shape", tag.lambda().parts()},
                        {"n", tag.cols()}};
        case Family::ShapeFirstCol:
            return json{{"variant", "shape_v"},
                        {"v", tag.first_col()},
                        {"shape", tag.lambda().parts()},
                        {"n", tag.cols()}};
        case Family::Padded:
            return json{{"variant", "padded"},
                        {"m", tag.rows()},
                        {"shape", tag.lambda().parts()},
                        {"n", tag.cols()}};
    }
    throw std::logic_error("unreachable");
}

FamilyTag family_tag_from_json(const json& j) {
    std::string variant = j.at("variant").get<std::string>();
    if (variant == "mn") return FamilyTag::mn(j.at("m").get<int>(), j.at("n").get<int>());
    if (variant == "shape")
        return FamilyTag::shape(partition_from_json(j.at("shape")), j.at("n").get<int>());
    if (variant == "shape_v")
        return FamilyTag::shape_first_col(j.at("v").get<std::vector<int>>(),
                                          partition_from_json(j.at("shape")),
                                          j.at("n").get<int>());
    if (variant == "padded")
        return FamilyTag::padded(j.at("m").get<int>(), partition_from_json(j.at("shape")),
                                 j.at("n").get<int>());
    throw std::invalid_argument("unknown family variant '" + variant + "'");
}

json rational_matrix_to_json(const RationalMatrix& X) {
    json entries = json::array();
    for (int i = 0; i < X.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < X.cols(); ++j) row.push_back(rational_to_json(X.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"m", X.rows()}, {"n", X.cols()}, {"entries", entries}};
}

RationalMatrix rational_matrix_from_json(const json& j) {
    const json& entries = j.at("entries");
    if (!entries.is_array()) throw std::invalid_argument("matrix entries must be an array");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : entries) {
        std::vector<Rational> out;
        for (const auto& x : row) out.push_back(rational_from_json(x));
        rows.push_back(std::move(out));
    }
    RationalMatrix X(rows);
    if (j.contains("m") && j.at("m").get<int>() != X.rows())
        throw std::invalid_argument("matrix row count disagrees with the entries");
    if (j.contains("n")) {
        int n = j.at("n").get<int>();
        if (X.rows() == 0)
            X = RationalMatrix(0, n);
        else if (n != X.cols())
            throw std::invalid_argument("matrix column count disagrees with the entries");
    }
    return X;
}

json circuit_to_json(const Circuit& c) {
    json corners = json::array();
    for (auto [i, j] : c.corners) corners.push_back(json::array({i, j}));
    return json{{"kind", c.closed ? "closed" : "open"}, {"corners", corners}};
}

json hyperplane_to_json(const Hyperplane& h) {
    return json{{"coeffs", h.coeffs}, {"threshold", rational_to_json(h.threshold)}};
}

json combination_to_json(const ConvexCombination& comb) {
    json terms = json::array();
    for (const auto& [w, M] : comb.terms)
        terms.push_back(json{{"weight", rational_to_json(w)}, {"matrix", sign_matrix_to_json(M)}});
    return json{{"terms", terms}};
}

ConvexCombination combination_from_json(const json& j) {
    ConvexCombination comb;
    for (const auto& term : j.at("terms"))
        comb.terms.emplace_back(rational_from_json(term.at("weight")),
                                sign_matrix_from_json(term.at("matrix")));
    return comb;
}

json component_to_json(const Component& c, const FamilyTag& tag) {
    static const char* vnames[] = {"", "0", "1", "01"};
    json v = json::array(), h = json::array();
    for (int i = 0; i < c.rows(); ++i) {
        json vrow = json::array(), hrow = json::array();
        for (int j = 0; j < c.cols(); ++j) {
            vrow.push_back(vnames[c.vlabel(i, j)]);
            hrow.push_back(c.hlabel(i, j) == Component::kHEmpty ? ""
                           : c.hlabel(i, j) == Component::kHZero ? "0"
                                                                 : "*");
        }
        v.push_back(std::move(vrow));
        h.push_back(std::move(hrow));
    }
    json out{{"v", v}, {"h", h}, {"variant", family_tag_to_json(tag)}};
    if (tag.family() == Family::Shape || tag.family() == Family::ShapeFirstCol)
        out["fixed_row_sums"] = tag.row_sum_targets();
    if (tag.family() == Family::ShapeFirstCol) out["fixed_col_sums"] = tag.col_sum_targets();
    return out;
}

json face_lattice_to_json(const FaceLattice& L) {
    json comps = json::array();
    for (int t = 0; t < L.size(); ++t) {
        json c = component_to_json(L.components[t], L.tag);
        c["dim"] = L.region[t];
        c["atoms"] = L.atom_ids[t];
        comps.push_back(std::move(c));
    }
    json covers = json::array();
    for (auto [a, b] : L.cover_edges()) covers.push_back(json::array({a, b}));
    return json{{"family", family_tag_to_json(L.tag)},
                {"vertex_count", L.atoms.size()},
                {"components", comps},
                {"covers", covers}};
}

json facet_equality_to_json(const FacetEquality& eq) {
    static const char* names[] = {"row-sum-zero", "col-sum-zero", "col-sum-one",
                                  "corner-zero", "full-col-one"};
    return json{{"kind", names[static_cast<int>(eq.kind)]},
                {"i", eq.i},
                {"j", eq.j},
                {"text", eq.to_string()}};
}

json facet_report_to_json(const FacetReport& report) {
    json listed = json::array();
    for (const auto& check : report.listed) {
        listed.push_back(json{{"equality", facet_equality_to_json(check.eq)},
                              {"tight_vertices", check.tight_count},
                              {"affine_dim", check.affine_dim},
                              {"pass", check.pass}});
    }
    json discarded = json::array();
    for (const auto& d : report.discarded)
        discarded.push_back(json{{"equality", facet_equality_to_json(d.eq)},
                                 {"affine_dim", d.affine_dim},
                                 {"implied", d.implied}});
    json out{{"pass", report.pass},
             {"dim", report.polytope_dim},
             {"count", report.expected_count},
             {"listed", listed},
             {"discarded", discarded}};
    if (!report.failure.empty()) out["failure"] = report.failure;
    return out;
}

}  // namespace signpoly
