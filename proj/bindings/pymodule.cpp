// Python bindings for the main operations. Matrices travel as nested
// lists, rationals as exact "p/q" strings, families as the same JSON
// shaped dictionaries the CLI uses.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "signpoly/json_io.hpp"
#include "signpoly/verify_suites.hpp"

namespace py = pybind11;
using namespace signpoly;

namespace {

json py_to_json(const py::handle& h) {
    if (h.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
    if (py::isinstance<py::int_>(h)) return h.cast<long long>();
    if (py::isinstance<py::str>(h)) return h.cast<std::string>();
    if (py::isinstance<py::dict>(h)) {
        json out = json::object();
        for (auto item : h.cast<py::dict>())
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
        json out = json::array();
        for (auto item : h.cast<py::sequence>()) out.push_back(py_to_json(item));
        return out;
    }
    throw std::invalid_argument("unsupported value in a family description");
}

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
        case json::value_t::number_unsigned:
            return py::int_(j.get<long long>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& x : j) out.append(json_to_py(x));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            throw std::invalid_argument("unsupported JSON value");
    }
}

FamilyTag tag_of(const py::dict& family) { return family_tag_from_json(py_to_json(family)); }

SignMatrix matrix_of(const std::vector<std::vector<int>>& entries) {
    return SignMatrix::validate(entries);
}

RationalMatrix rational_of(const py::sequence& rows) {
    std::vector<std::vector<Rational>> out;
    for (auto row : rows) {
        std::vector<Rational> r;
        for (auto x : row.cast<py::sequence>()) r.push_back(rational_from_json(py_to_json(x)));
        out.push_back(std::move(r));
    }
    return RationalMatrix(out);
}

py::int_ big_to_py(const Integer& z) {
    return py::cast<py::int_>(py::module_::import("builtins").attr("int")(z.get_str()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic for sign matrix polytopes";

    m.def("conjugate", [](const std::vector<int>& parts) {
        return conjugate(Partition(parts)).parts();
    });
    m.def("frequency_rep",
          [](const std::vector<int>& parts) { return frequency_rep(Partition(parts)); });
    m.def("hook_content_count", [](const std::vector<int>& parts, int n) {
        return big_to_py(hook_content_count(Partition(parts), n));
    });
    m.def("gordon_count", [](int m_, int n) { return big_to_py(gordon_count(m_, n)); });

    m.def("enumerate_ssyt", [](const std::vector<int>& parts, int n) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const Tableau& t : enumerate_ssyt(Partition(parts), n)) out.push_back(t.rows);
        return out;
    });
    m.def("enumerate_ssyt_first_column",
          [](const std::vector<int>& v, const std::vector<int>& parts, int n) {
              std::vector<std::vector<std::vector<int>>> out;
              for (const Tableau& t : enumerate_ssyt_first_column(v, Partition(parts), n))
                  out.push_back(t.rows);
              return out;
          });

    m.def("check_sign_matrix", [](const std::vector<std::vector<int>>& entries) {
        auto err = SignMatrix::check(entries);
        return py::make_tuple(!err.has_value(), err.value_or(""));
    });
    m.def("to_tableau", [](const std::vector<std::vector<int>>& entries) {
        return phi(matrix_of(entries)).rows;
    });
    m.def(
        "to_sign_matrix",
        [](const std::vector<std::vector<int>>& rows, int n, std::optional<int> m_) {
            return phi_inv(make_tableau(rows, n), m_).entries();
        },
        py::arg("rows"), py::arg("n"), py::arg("rows_count") = std::nullopt);
    m.def("pad_embed", [](const std::vector<std::vector<int>>& entries, int m_) {
        return pad_embed(matrix_of(entries), m_).entries();
    });
    m.def("is_asm", [](const std::vector<std::vector<int>>& entries) {
        return is_asm(matrix_of(entries));
    });

    m.def("enumerate_family", [](const py::dict& family) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const SignMatrix& M : enumerate_family(tag_of(family)))
            out.push_back(M.entries());
        return out;
    });
    m.def("in_family", [](const std::vector<std::vector<int>>& entries, const py::dict& fam) {
        return in_family(matrix_of(entries), tag_of(fam));
    });

    m.def("membership", [](const py::sequence& rows, const py::dict& fam) {
        Verdict v = membership(rational_of(rows), tag_of(fam));
        return py::make_tuple(v.ok, v.violation);
    });
    m.def("decompose", [](const py::sequence& rows, const py::dict& fam) {
        ConvexCombination comb = decompose(rational_of(rows), tag_of(fam));
        py::list out;
        for (const auto& [w, M] : comb.terms)
            out.append(py::make_tuple(rational_to_string(w), M.entries()));
        return out;
    });

    m.def("vertex_certificate",
          [](const std::vector<std::vector<int>>& entries, const py::dict& fam) {
              SignMatrix M = matrix_of(entries);
              FamilyTag tag = tag_of(fam);
              Hyperplane h =
                  tag.family() == Family::MN ? hyperplane_mn(M) : hyperplane_shape(M, tag);
              return json_to_py(hyperplane_to_json(h));
          });
    m.def("verify_vertex",
          [](const std::vector<std::vector<int>>& entries, const py::dict& fam) {
              return verify_vertex(matrix_of(entries), tag_of(fam));
          });

    m.def("facet_count", [](const py::dict& fam) {
        FamilyTag tag = tag_of(fam);
        return tag.family() == Family::MN ? facet_count_mn(tag.rows(), tag.cols())
                                          : facet_count_shape(tag.lambda(), tag.cols());
    });
    m.def("facet_equalities", [](const py::dict& fam) {
        py::list out;
        for (const FacetEquality& eq : facet_equalities(tag_of(fam)))
            out.append(json_to_py(facet_equality_to_json(eq)));
        return out;
    });
    m.def("verify_facets", [](const py::dict& fam) {
        return json_to_py(facet_report_to_json(verify_facets(tag_of(fam))));
    });

    m.def("face_lattice_dims", [](const py::dict& fam) {
        FaceLattice L = face_lattice(tag_of(fam));
        return L.region;
    });
    m.def("integer_points", [](const py::dict& fam) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const SignMatrix& M : integer_points(tag_of(fam))) out.push_back(M.entries());
        return out;
    });
    m.def("transportation_spec",
          [](const std::vector<int>& v, const std::vector<int>& parts, int n) {
              TransportationSpec spec = transportation_spec(v, Partition(parts), n);
              return py::make_tuple(spec.y, spec.z);
          });

    m.def(
        "run_suite",
        [](const std::string& name, uint64_t seed, int threads) {
            verify::SuiteResult r = verify::run_suite(name, std::nullopt, seed, threads);
            py::list checks;
            for (const auto& c : r.checks)
                checks.append(py::make_tuple(c.name, c.pass, c.detail));
            return py::make_tuple(r.pass, checks);
        },
        py::arg("name"), py::arg("seed") = 1, py::arg("threads") = 1);
}
