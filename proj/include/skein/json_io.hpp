#pragma once

#include <json.hpp>

#include "skein/maps.hpp"

namespace skein {

using Json = nlohmann::json;

// Backends: {"kind":"abelian","free_rank":0,"torsion":[5]} (optional "omega"),
// {"kind":"free","rank":2,"omega":[[0,1],[-1,0]]}, {"kind":"surface","genus":2}.
Json group_to_json(const GroupSpec&);
GroupSpec group_from_json(const Json&);

// Words: exponent vectors for abelian backends, signed letter arrays otherwise.
Json word_to_json(const GroupSpec&, const Word&);
Word word_from_json(const GroupSpec&, const Json&);

// {"unit":"2+0A","terms":[{"class":[1,1],"coeff":"0+1A"}]}
Json elt_to_json(const SkeinElt&);
SkeinElt elt_from_json(const GroupSpec&, const Json&);

// {"surface":{...},"components":[{"twists":0,"items":[{"gen":1},{"cross":0}]}],
//  "crossings":[{"id":0,"over":[0,1],"sign":1}]}
Json diagram_to_json(const SurfaceModel&, const Diagram&);
std::pair<SurfaceModel, Diagram> diagram_from_json(const Json&);

// {"torsion":[5],"lf":[["1/5"]]}
Json rhs_to_json(const RhsData&);
RhsData rhs_from_json(const Json&);

// {"components":[{"class":[1],"word":[1],"frame":"1/5"}],"lk":[["0"],["0"]]}
Json homlink_to_json(const GroupSpec&, const HomLink&);
HomLink homlink_from_json(const GroupSpec&, const Json&, i64 torsion_rank);

Json frac_matrix_to_json(const Mat<Frac>&);
Mat<Frac> frac_matrix_from_json(const Json&, const char* field);

Json phi_result_to_json(const PhiResult&);
Json psi_result_to_json(const SurfaceModel&, const PsiResult&);
Json resolved_to_json(const SurfaceModel&, const std::vector<ResolvedTerm>&);

}  // namespace skein
