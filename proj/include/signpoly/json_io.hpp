#pragma once

#include <nlohmann/json_fwd.hpp>

#include "signpoly/certificates.hpp"
#include "signpoly/faces.hpp"
#include "signpoly/membership.hpp"
#include "signpoly/partial_sums.hpp"

// Wire formats. Rationals are serialized as exact "p/q" strings ("p"
// when the denominator is 1); parsing accepts those strings and JSON
// integers, and rejects floating point values outright.

namespace signpoly {

using json = nlohmann::json;

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json partition_to_json(const Partition& p);        // plain integer array
Partition partition_from_json(const json& j);

json tableau_to_json(const Tableau& t);            // {"shape":[...],"rows":[[...]],"n":int}
Tableau tableau_from_json(const json& j);

json sign_matrix_to_json(const SignMatrix& M);     // {"m":..,"n":..,"entries":[[...]]}
SignMatrix sign_matrix_from_json(const json& j);

json family_tag_to_json(const FamilyTag& tag);     // {"variant":"mn"|"shape"|"shape_v"|"padded",...}
FamilyTag family_tag_from_json(const json& j);

json rational_matrix_to_json(const RationalMatrix& X);
RationalMatrix rational_matrix_from_json(const json& j);

json circuit_to_json(const Circuit& c);            // {"kind":"open"|"closed","corners":[[i,j],...]}

json hyperplane_to_json(const Hyperplane& h);      // {"coeffs":[[...]],"threshold":"p/q"}

json combination_to_json(const ConvexCombination& comb);
ConvexCombination combination_from_json(const json& j);

json component_to_json(const Component& c, const FamilyTag& tag);
json face_lattice_to_json(const FaceLattice& L);

json facet_equality_to_json(const FacetEquality& eq);
json facet_report_to_json(const FacetReport& report);

}  // namespace signpoly
