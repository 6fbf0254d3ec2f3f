#include "skein/json_io.hpp"

#include <stdexcept>

namespace skein {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw std::invalid_argument(field + ": " + why);
}

IntMat int_matrix_from_json(const Json& j, const char* field) {
  if (!j.is_array()) bad(field, "expected a matrix (array of arrays)");
  IntMat m(j.size(), j.empty() ? 0 : j.at(0).size());
  for (size_t i = 0; i < j.size(); ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != m.cols())
      bad(field, "ragged matrix at row " + std::to_string(i));
    for (size_t k = 0; k < row.size(); ++k) {
      if (!row.at(k).is_number_integer()) bad(field, "entries must be integers");
      m(i, k) = row.at(k).get<i64>();
    }
  }
  return m;
}

Json int_matrix_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<i64> int_vector_from_json(const Json& j, const char* field) {
  if (!j.is_array()) bad(field, "expected an array of integers");
  std::vector<i64> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad(field, "entries must be integers");
    out.push_back(v.get<i64>());
  }
  return out;
}

}  // namespace

Json group_to_json(const GroupSpec& g) {
  Json j;
  switch (g.kind) {
    case GroupKind::Abelian:
      j["kind"] = "abelian";
      j["free_rank"] = g.free_rank;
      j["torsion"] = g.torsion;
      if (!g.omega_zero()) j["omega"] = int_matrix_to_json(g.omega);
      break;
    case GroupKind::Free:
      j["kind"] = "free";
      j["rank"] = g.rank;
      j["omega"] = int_matrix_to_json(g.omega);
      break;
    case GroupKind::ClosedSurface:
      j["kind"] = "surface";
      j["genus"] = g.genus;
      break;
  }
  return j;
}

GroupSpec group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) bad("group.kind", "missing");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "abelian") {
    int free_rank = j.value("free_rank", 0);
    std::vector<i64> torsion;
    if (j.contains("torsion")) torsion = int_vector_from_json(j.at("torsion"), "group.torsion");
    IntMat omega = j.contains("omega") ? int_matrix_from_json(j.at("omega"), "group.omega")
                                       : IntMat::Zero(free_rank, free_rank);
    return GroupSpec::abelian(free_rank, std::move(torsion), std::move(omega));
  }
  if (kind == "free") {
    if (!j.contains("rank")) bad("group.rank", "missing");
    int rank = j.at("rank").get<int>();
    IntMat omega =
        j.contains("omega") ? int_matrix_from_json(j.at("omega"), "group.omega") : IntMat::Zero(rank, rank);
    return GroupSpec::free_group(rank, std::move(omega));
  }
  if (kind == "surface") {
    if (!j.contains("genus")) bad("group.genus", "missing");
    return GroupSpec::closed_surface(j.at("genus").get<int>());
  }
  bad("group.kind", "unknown kind '" + kind + "'");
}

Json word_to_json(const GroupSpec&, const Word& w) { return Json(w.data); }

Word word_from_json(const GroupSpec& g, const Json& j) {
  std::vector<i64> data = int_vector_from_json(j, "word");
  if (g.kind == GroupKind::Abelian) return word_from_exponents(g, data);
  Word w{std::move(data)};
  validate_word(g, w);
  return w;
}

Json elt_to_json(const SkeinElt& e) {
  Json j;
  j["unit"] = to_string(e.unit);
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms) terms.push_back({{"class", word_to_json(e.group, w)}, {"coeff", to_string(c)}});
  j["terms"] = std::move(terms);
  return j;
}

SkeinElt elt_from_json(const GroupSpec& g, const Json& j) {
  SkeinElt e = elt_zero(g);
  if (j.contains("unit")) e.unit = parse_cyc(j.at("unit").get<std::string>());
  if (j.contains("terms")) {
    for (const auto& t : j.at("terms")) {
      if (!t.contains("class") || !t.contains("coeff")) bad("terms", "entries need 'class' and 'coeff'");
      Word w = word_from_json(g, t.at("class"));
      ClassRep c = class_rep(g, w);
      if (!(c.word == w)) bad("terms.class", "word is not a canonical class representative");
      CycCoeff coeff = parse_cyc(t.at("coeff").get<std::string>());
      e = add(e, scale(gen(g, c), coeff));
    }
  }
  return e;
}

Json diagram_to_json(const SurfaceModel& m, const Diagram& d) {
  Json j;
  j["surface"] = group_to_json(m);
  Json comps = Json::array();
  for (const auto& comp : d.components) {
    Json items = Json::array();
    for (const auto& it : comp.items) {
      if (it.is_pass())
        items.push_back({{"cross", it.cross}});
      else
        items.push_back({{"gen", it.gen}});
    }
    comps.push_back({{"twists", comp.twists}, {"items", std::move(items)}});
  }
  j["components"] = std::move(comps);
  Json crossings = Json::array();
  for (const auto& c : d.crossings) {
    auto loc = locate_passes(d, c.id);
    crossings.push_back(
        {{"id", c.id}, {"over", {loc[c.over_end].comp, loc[c.over_end].pos}}, {"sign", c.sign}});
  }
  j["crossings"] = std::move(crossings);
  return j;
}

std::pair<SurfaceModel, Diagram> diagram_from_json(const Json& j) {
  if (!j.contains("surface")) bad("surface", "missing");
  SurfaceModel m = group_from_json(j.at("surface"));
  Diagram d;
  if (!j.contains("components")) bad("components", "missing");
  std::map<int, int> ends_seen;  // crossing id -> passes seen so far
  for (size_t k = 0; k < j.at("components").size(); ++k) {
    const Json& cj = j.at("components").at(k);
    Component comp;
    comp.twists = cj.value("twists", 0);
    if (!cj.contains("items")) bad("components[" + std::to_string(k) + "].items", "missing");
    for (const auto& ij : cj.at("items")) {
      if (ij.contains("gen"))
        comp.items.push_back(Item::letter(ij.at("gen").get<i64>()));
      else if (ij.contains("cross")) {
        int id = ij.at("cross").get<int>();
        if (id < 0) bad("components", "crossing ids must be nonnegative");
        int end = ends_seen[id]++;
        if (end > 1) bad("components", "crossing " + std::to_string(id) + " referenced more than twice");
        comp.items.push_back(Item::pass(id, end));
      } else
        bad("components[" + std::to_string(k) + "].items", "entries need 'gen' or 'cross'");
    }
    d.components.push_back(std::move(comp));
  }
  if (j.contains("crossings")) {
    for (size_t k = 0; k < j.at("crossings").size(); ++k) {
      const Json& cj = j.at("crossings").at(k);
      std::string at = "crossings[" + std::to_string(k) + "]";
      if (!cj.contains("id") || !cj.contains("over") || !cj.contains("sign")) bad(at, "needs id, over, sign");
      Crossing c;
      c.id = cj.at("id").get<int>();
      c.sign = cj.at("sign").get<int>();
      const Json& over = cj.at("over");
      if (!over.is_array() || over.size() != 2) bad(at + ".over", "expected [component, position]");
      int oc = over.at(0).get<int>(), op = over.at(1).get<int>();
      if (oc < 0 || oc >= static_cast<int>(d.components.size()) || op < 0 ||
          op >= static_cast<int>(d.components[oc].items.size()))
        bad(at + ".over", "position out of range");
      const Item& it = d.components[oc].items[op];
      if (!it.is_pass() || it.cross != c.id) bad(at + ".over", "does not point at a pass of this crossing");
      c.over_end = it.end;
      d.crossings.push_back(c);
    }
  }
  return {std::move(m), std::move(d)};
}

Json frac_matrix_to_json(const Mat<Frac>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat<Frac> frac_matrix_from_json(const Json& j, const char* field) {
  if (!j.is_array()) bad(field, "expected a matrix of fraction strings");
  Mat<Frac> m(j.size(), j.empty() ? 0 : j.at(0).size());
  for (size_t i = 0; i < j.size(); ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != m.cols())
      bad(field, "ragged matrix at row " + std::to_string(i));
    for (size_t k = 0; k < row.size(); ++k) m(i, k) = parse_frac(row.at(k).get<std::string>());
  }
  return m;
}

Json rhs_to_json(const RhsData& data) {
  return Json{{"torsion", data.torsion}, {"lf", frac_matrix_to_json(data.lf)}};
}

RhsData rhs_from_json(const Json& j) {
  RhsData data;
  if (!j.contains("torsion")) bad("torsion", "missing");
  data.torsion = int_vector_from_json(j.at("torsion"), "torsion");
  data.lf = j.contains("lf") ? frac_matrix_from_json(j.at("lf"), "lf")
                             : Mat<Frac>(data.torsion.size(), data.torsion.size());
  data.validate();
  return data;
}

Json homlink_to_json(const GroupSpec& g, const HomLink& link) {
  Json comps = Json::array();
  for (const auto& c : link.components) {
    Json cj{{"class", c.hom_class}, {"frame", to_string(c.frame)}};
    if (c.word) cj["word"] = word_to_json(g, *c.word);
    comps.push_back(std::move(cj));
  }
  return Json{{"components", std::move(comps)}, {"lk", frac_matrix_to_json(link.lk)}};
}

HomLink homlink_from_json(const GroupSpec& g, const Json& j, i64 torsion_rank) {
  HomLink link;
  if (!j.contains("components")) bad("components", "missing");
  for (size_t k = 0; k < j.at("components").size(); ++k) {
    const Json& cj = j.at("components").at(k);
    std::string at = "components[" + std::to_string(k) + "]";
    HomLinkComponent comp;
    comp.hom_class = cj.contains("class") ? int_vector_from_json(cj.at("class"), at.c_str())
                                          : std::vector<i64>(torsion_rank, 0);
    if (cj.contains("word")) comp.word = word_from_json(g, cj.at("word"));
    if (cj.contains("frame")) comp.frame = parse_frac(cj.at("frame").get<std::string>());
    link.components.push_back(std::move(comp));
  }
  const size_t n = link.components.size();
  link.lk = j.contains("lk") ? frac_matrix_from_json(j.at("lk"), "lk") : Mat<Frac>(n, n);
  return link;
}

Json phi_result_to_json(const PhiResult& r) {
  return Json{{"element", elt_to_json(r.element)}, {"sum_D", r.sum_D.v}, {"sum_pair_d", r.sum_pair_d.v}};
}

Json psi_result_to_json(const SurfaceModel& m, const PsiResult& r) {
  return Json{{"diagram", diagram_to_json(m, r.diagram)}, {"scale", r.scale.v}};
}

Json resolved_to_json(const SurfaceModel& m, const std::vector<ResolvedTerm>& terms) {
  Json arr = Json::array();
  for (const auto& t : terms)
    arr.push_back({{"coeff", to_string(t.coeff)}, {"diagram", diagram_to_json(m, t.diagram)}});
  return Json{{"terms", std::move(arr)}};
}

}  // namespace skein
