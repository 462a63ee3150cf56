#pragma once

#include <string>

#include "json.hpp"
#include "modcone/cone.hpp"
#include "modcone/determinantal.hpp"
#include "modcone/invariant_rings.hpp"
#include "modcone/polynomial.hpp"
#include "modcone/rational.hpp"
#include "modcone/special_models.hpp"

namespace modcone {

// Insertion-ordered JSON keeps the emitted byte stream deterministic for a
// fixed input and version.
using Json = nlohmann::ordered_json;

inline std::string integer_str(const Integer& n) { return n.get_str(); }

// Rationals serialize as decimal strings to stay lossless for any consumer.
inline Json rational_json(const Rational& r) {
  return Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

// Terms sorted by exponent vector lexicographically (the storage order).
inline Json polynomial_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exp = Json::array();
    for (unsigned x : e) exp.push_back(x);
    terms.push_back(Json{{"exp", exp}, {"coef", rational_json(c)}});
  }
  return Json{{"vars", p.ring()->names()}, {"terms", terms}};
}

inline Json unipoly_json(const UniPoly& p, const std::string& var = "n") {
  Json terms = Json::array();
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k].is_zero()) continue;
    terms.push_back(Json{{"exp", Json::array({k})}, {"coef", rational_json(p.coeffs()[k])}});
  }
  return Json{{"vars", Json::array({var})}, {"terms", terms}};
}

inline Json cone_json(const ConePresentation& c) {
  Json eqs = Json::array();
  for (const auto& e : c.equations) eqs.push_back(polynomial_json(e));
  return Json{{"variables", c.variables()},
              {"equations", eqs},
              {"free_dim", c.free_dim},
              {"declared_multiplicity", integer_str(c.declared_multiplicity)},
              {"tangent_space_dim", c.tangent_space_dim}};
}

inline Json rank2_report_json(const Rank2TrivialReport& r) {
  return Json{{"g", r.g},
              {"tangent_space_dim", r.tangent_space_dim},
              {"corank_dim", r.corank_dim},
              {"segre_factor", integer_str(r.segre_factor)},
              {"multiplicity", integer_str(r.multiplicity)},
              {"cone", cone_json(r.cone)}};
}

inline Json local_model_json(const LocalModel& m) {
  return Json{{"name", m.name}, {"presentation", cone_json(m.presentation)}};
}

inline Json invariant_presentation_json(const InvariantPresentation& p) {
  Json gens = Json::array();
  for (const auto& g : p.generators) {
    Json e = Json::array();
    for (unsigned x : g) e.push_back(x);
    gens.push_back(e);
  }
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back(polynomial_json(r));
  return Json{{"generators", gens},
              {"relations", rels},
              {"degree_bound", p.degree_bound},
              {"decomposition_certified", p.decomposition_certified}};
}

}  // namespace modcone
