// Command line surface over the sign matrix polytope library. Every
// subcommand is a thin adapter: parse flags, call the library, print one
// JSON document (or DOT when asked).

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "signpoly/json_io.hpp"
#include "signpoly/verify_suites.hpp"

namespace {

using signpoly::json;

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse " + what + " entry '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(what + " must not be empty");
    return out;
}

struct FamilyFlags {
    std::string mn, shape, first_col;
    int n = 0;
    int pad = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--mn", mn, "full family as M,N");
        cmd->add_option("--shape", shape, "partition as comma separated parts");
        cmd->add_option("--n", n, "entry bound for shape families");
        cmd->add_option("--first-col", first_col,
                        "prescribed first tableau column as comma separated entries");
        cmd->add_option("--pad", pad, "embed the shape family into this many rows");
    }

    bool given() const { return !mn.empty() || !shape.empty(); }

    signpoly::FamilyTag tag() const {
        if (!mn.empty()) {
            if (!shape.empty() || !first_col.empty() || pad > 0)
                throw std::invalid_argument("--mn excludes the shape family flags");
            std::vector<int> d = parse_int_list(mn, "--mn");
            if (d.size() != 2) throw std::invalid_argument("--mn expects M,N");
            return signpoly::FamilyTag::mn(d[0], d[1]);
        }
        if (shape.empty())
            throw std::invalid_argument("select a family with --mn or --shape/--n");
        if (n <= 0) throw std::invalid_argument("--shape requires --n");
        signpoly::Partition lambda(parse_int_list(shape, "--shape"));
        if (!first_col.empty()) {
            if (pad > 0) throw std::invalid_argument("--first-col excludes --pad");
            return signpoly::FamilyTag::shape_first_col(
                parse_int_list(first_col, "--first-col"), lambda, n);
        }
        if (pad > 0) return signpoly::FamilyTag::padded(pad, lambda, n);
        return signpoly::FamilyTag::shape(lambda, n);
    }
};

json read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    json j;
    in >> j;
    return j;
}

int emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output);
    if (!out) throw std::invalid_argument("cannot open output file '" + output + "'");
    out << text;
    return 0;
}

int emit_json(const json& doc, const std::string& output) {
    return emit(doc.dump(2) + "\n", output);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for sign matrix polytopes"};
    app.require_subcommand(1);

    std::string input, output, format = "json", to = "auto", suite;
    int rows_opt = 0, threads = 1;
    uint64_t seed = 1;

    auto add_io = [&](CLI::App* cmd, bool needs_input) {
        auto* opt = cmd->add_option("--input", input, "input JSON file");
        if (needs_input) opt->required();
        cmd->add_option("--output", output, "write the result here instead of stdout");
    };

    FamilyFlags fam_enumerate, fam_check, fam_decompose, fam_cert, fam_facets, fam_lattice,
        fam_verify;

    auto* cmd_enumerate = app.add_subcommand("enumerate", "list every family member");
    fam_enumerate.attach(cmd_enumerate);
    add_io(cmd_enumerate, false);

    auto* cmd_map = app.add_subcommand("map", "map between sign matrices and tableaux");
    add_io(cmd_map, true);
    cmd_map->add_option("--to", to, "target object: tableau, matrix or auto");
    cmd_map->add_option("--rows", rows_opt, "embed the matrix image into this many rows");
    cmd_map->add_option("--format", format, "json, or dot for the labeled grid graph");

    auto* cmd_check = app.add_subcommand("check", "membership test for a rational matrix");
    fam_check.attach(cmd_check);
    add_io(cmd_check, true);

    auto* cmd_decompose =
        app.add_subcommand("decompose", "write a member as a mixture of vertices");
    fam_decompose.attach(cmd_decompose);
    add_io(cmd_decompose, true);

    auto* cmd_cert = app.add_subcommand("vertex-cert", "separating hyperplane certificate");
    fam_cert.attach(cmd_cert);
    add_io(cmd_cert, true);

    auto* cmd_facets = app.add_subcommand("facets", "facet count and equality list");
    fam_facets.attach(cmd_facets);
    add_io(cmd_facets, false);

    auto* cmd_lattice = app.add_subcommand("face-lattice", "the graded face lattice");
    fam_lattice.attach(cmd_lattice);
    add_io(cmd_lattice, false);
    cmd_lattice->add_option("--format", format, "json, or dot for the Hasse diagram");

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("suite", suite, "one of: bijection, counts, decomposition, "
                                           "vertices, facets, lattice, transport, "
                                           "lattice-points")
        ->required();
    fam_verify.attach(cmd_verify);
    add_io(cmd_verify, false);
    cmd_verify->add_option("--seed", seed, "seed for the randomized suites");
    cmd_verify->add_option("--threads", threads, "worker threads for exhaustive suites")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        using namespace signpoly;
        if (*cmd_enumerate) {
            FamilyTag tag = fam_enumerate.tag();
            json matrices = json::array();
            for (const SignMatrix& M : enumerate_family(tag))
                matrices.push_back(sign_matrix_to_json(M));
            return emit_json(json{{"family", family_tag_to_json(tag)},
                                  {"count", matrices.size()},
                                  {"matrices", matrices}},
                             output);
        }
        if (*cmd_map) {
            json in = read_input(input);
            bool have_rows = in.contains("rows");
            std::string target = to == "auto" ? (have_rows ? "matrix" : "tableau") : to;
            if (format == "dot") {
                RationalMatrix X = have_rows
                                       ? RationalMatrix(phi_inv(tableau_from_json(in)))
                                       : rational_matrix_from_json(in);
                return emit(partial_sum_graph_dot(X), output);
            }
            if (target == "tableau") {
                SignMatrix M = sign_matrix_from_json(in);
                return emit_json(json{{"tableau", tableau_to_json(phi(M))}}, output);
            }
            if (target == "matrix") {
                Tableau T = tableau_from_json(in);
                SignMatrix M = rows_opt > 0 ? phi_inv(T, rows_opt) : phi_inv(T);
                return emit_json(json{{"matrix", sign_matrix_to_json(M)}}, output);
            }
            throw std::invalid_argument("--to must be tableau, matrix or auto");
        }
        if (*cmd_check) {
            FamilyTag tag = fam_check.tag();
            RationalMatrix X = rational_matrix_from_json(read_input(input));
            Verdict v = membership(X, tag);
            json doc{{"family", family_tag_to_json(tag)}, {"member", v.ok}};
            if (!v.ok) doc["violation"] = v.violation;
            emit_json(doc, output);
            return v.ok ? 0 : 1;
        }
        if (*cmd_decompose) {
            FamilyTag tag = fam_decompose.tag();
            RationalMatrix X = rational_matrix_from_json(read_input(input));
            ConvexCombination comb = decompose(X, tag);
            json doc = combination_to_json(comb);
            doc["family"] = family_tag_to_json(tag);
            doc["term_count"] = comb.terms.size();
            doc["reconstruction_exact"] = combination_value(comb) == X;
            return emit_json(doc, output);
        }
        if (*cmd_cert) {
            FamilyTag tag = fam_cert.tag();
            SignMatrix M = sign_matrix_from_json(read_input(input));
            Hyperplane h = tag.family() == Family::MN ? hyperplane_mn(M)
                                                      : hyperplane_shape(M, tag);
            bool separates = verify_vertex(M, tag);
            return emit_json(json{{"family", family_tag_to_json(tag)},
                                  {"hyperplane", hyperplane_to_json(h)},
                                  {"value_at_matrix", evaluate(h, M)},
                                  {"separates", separates}},
                             output);
        }
        if (*cmd_facets) {
            FamilyTag tag = fam_facets.tag();
            long long count = tag.family() == Family::MN
                                  ? facet_count_mn(tag.rows(), tag.cols())
                                  : facet_count_shape(tag.lambda(), tag.cols());
            json eqs = json::array();
            for (const FacetEquality& eq : facet_equalities(tag))
                eqs.push_back(facet_equality_to_json(eq));
            return emit_json(json{{"family", family_tag_to_json(tag)},
                                  {"count", count},
                                  {"equalities", eqs}},
                             output);
        }
        if (*cmd_lattice) {
            FamilyTag tag = fam_lattice.tag();
            FaceLattice L = face_lattice(tag);
            if (format == "dot") return emit(L.to_dot(), output);
            return emit_json(face_lattice_to_json(L), output);
        }
        if (*cmd_verify) {
            std::optional<FamilyTag> only;
            if (fam_verify.given()) only = fam_verify.tag();
            verify::SuiteResult result = verify::run_suite(suite, only, seed, threads);
            json checks = json::array();
            for (const auto& c : result.checks)
                checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            emit_json(json{{"suite", result.suite}, {"pass", result.pass}, {"checks", checks}},
                      output);
            return result.pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump(2) << std::endl;
        return 1;
    }
    return 2;
}
