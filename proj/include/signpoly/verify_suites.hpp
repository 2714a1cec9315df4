#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "signpoly/sign_matrix.hpp"

namespace signpoly::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::vector<Check> checks;
    void add(std::string name, bool ok, std::string detail = "");
};

// Desk-scale verification suites. Each one exercises a class of claims
// exhaustively on small families; an optional family tag narrows some
// suites to a single family.
SuiteResult suite_bijection();
SuiteResult suite_counts();
SuiteResult suite_vertices(const std::optional<FamilyTag>& only = std::nullopt,
                           int threads = 1);
SuiteResult suite_decomposition(uint64_t seed = 1);
SuiteResult suite_facets(const std::optional<FamilyTag>& only = std::nullopt,
                         int threads = 1);
SuiteResult suite_lattice();
SuiteResult suite_transport(uint64_t seed = 1);
SuiteResult suite_lattice_points(uint64_t seed = 1);

// Runs the named suite; throws std::invalid_argument on unknown names.
// Known names: bijection, counts, decomposition, vertices, facets,
// lattice, transport, lattice-points.
SuiteResult run_suite(const std::string& name,
                      const std::optional<FamilyTag>& only = std::nullopt,
                      uint64_t seed = 1, int threads = 1);

std::vector<std::string> suite_names();

}  // namespace signpoly::verify
