#pragma once

#include "latdeg/hilbert.hpp"
#include "latdeg/sandpile.hpp"
#include "latdeg/toric.hpp"

#include <json.hpp>

namespace latdeg {

using Json = nlohmann::ordered_json;

// Integers go out as decimal strings so no consumer truncates them to a
// double.
inline Json to_json(const BigInt& x) { return to_string(x); }

inline Json to_json(const std::vector<BigInt>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(to_string(x));
  return arr;
}

inline Json to_json(const ZMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (const auto& x : a.row(i)) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Small counts (regularity bound) are JSON numbers when they fit.
inline Json count_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(x);
  return to_string(x);
}

// {"ambient_dim", "rank", "invariant_factors", "torsion_order", "degree",
//  "regularity_upper_bound"}; the last two are null unless rank == s-1.
inline Json lattice_summary_json(const HomogeneousLattice& l) {
  Json j;
  j["ambient_dim"] = l.ambient_dim();
  j["rank"] = l.rank();
  j["invariant_factors"] = to_json(l.invariant_factors());
  j["torsion_order"] = to_json(torsion_structure(l).order);
  const bool full = l.ambient_dim() >= 1 && l.rank() + 1 == l.ambient_dim();
  j["degree"] = full ? to_json(degree(l)) : Json(nullptr);
  j["regularity_upper_bound"] = full ? count_json(regularity_upper_bound(l)) : Json(nullptr);
  return j;
}

inline Json to_json(const SmithDecomposition& sd) {
  return Json{{"rank", sd.rank},
              {"invariant_factors", to_json(sd.invariant_factors)},
              {"u", to_json(sd.u)},
              {"d", to_json(sd.d)},
              {"v", to_json(sd.v)}};
}

inline Json to_json(const HermiteForm& hf) {
  return Json{{"rank", hf.rank}, {"h", to_json(hf.h)}, {"transform", to_json(hf.transform)}};
}

inline Json to_json(const TorsionStructure& t) {
  return Json{{"cyclic_factors", to_json(t.cyclic_factors)},
              {"order", to_json(t.order)},
              {"free_rank", t.free_rank}};
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, BigInt>)
    return to_json(*v);
  else
    return *v;
}

inline Json to_json(const HilbertProfile& p) {
  return Json{{"values", p.values},
              {"stabilization_degree", optional_json(p.stabilization_degree)},
              {"degree_estimate", optional_json(p.degree_estimate)},
              {"krull_dim_estimate", optional_json(p.krull_dim_estimate)}};
}

inline Json to_json(const DegreeVerification& r) {
  return Json{{"snf_degree", to_json(r.snf_degree)},
              {"oracle_degree", to_json(r.oracle_degree)},
              {"regularity_bound", count_json(r.regularity_bound)},
              {"observed_stabilization", optional_json(r.observed_stabilization)},
              {"stabilization_within_bound", r.stabilization_within_bound},
              {"agree", r.agree},
              {"profile", to_json(r.profile)}};
}

inline Json to_json(const VanishingDegreeReport& r) {
  return Json{{"lattice_degree", to_json(r.lattice_degree)}, {"point_count", r.point_count}, {"agree", r.agree}};
}

inline Json to_json(const CompleteIntersectionReport& r) {
  return Json{{"q_minus_1_prime", r.q_minus_1_prime},
              {"exponents_distinct_mod", r.exponents_distinct_mod},
              {"torsion_is_power", r.torsion_is_power},
              {"corollary_applies", r.corollary_applies},
              {"cyclic_factors", to_json(r.cyclic_factors)},
              {"predicted_generators", optional_json(r.predicted_generators)}};
}

inline Json to_json(const SandpileReport& r) {
  return Json{{"lattice_degree", to_json(r.lattice_degree)},
              {"spanning_tree_count", r.spanning_trees},
              {"reduced_laplacian_det", to_json(r.reduced_laplacian_det)},
              {"invariant_factors", to_json(r.invariant_factors)},
              {"agree", r.agree}};
}

}  // namespace latdeg
