#pragma once

// JSON encodings. Real values are numbers; complex, quaternion and octonion
// values are component arrays; exact values are strings so nothing is
// rounded.

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "energized/kaehler.hpp"
#include "energized/matrix.hpp"
#include "energized/scalars.hpp"
#include "energized/setsystem.hpp"
#include "energized/spectral.hpp"

namespace energized {

using json = nlohmann::ordered_json;

inline json to_json(double v) { return v; }
inline json to_json(const std::complex<double>& v) { return json::array({v.real(), v.imag()}); }
inline json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }
inline json to_json(const Octonion& o) {
  json a = json::array();
  for (double c : o.c) a.push_back(c);
  return a;
}
inline json to_json(const GaussianRational& g) { return g.str(); }
inline json to_json(const mpq_class& q) { return q.get_str(); }
inline json to_json(const mpz_class& z) { return z.get_str(); }
inline json to_json(long long v) { return v; }
inline json to_json(const std::monostate&) { return nullptr; }

inline json to_json(const Scalar& s) {
  return std::visit([](const auto& v) { return to_json(v); }, s);
}

template <class T>
json to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
json to_json(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline json to_json(const SetSystem& s) {
  json a = json::array();
  for (const auto& x : s) a.push_back(x);
  return a;
}

inline json to_json(const std::vector<PrimePower>& f) {
  json a = json::array();
  for (const auto& p : f) {
    json e = {{"prime", p.prime.get_str()}, {"exponent", p.exponent}};
    if (!p.certified_prime) e["probable_composite"] = true;
    a.push_back(std::move(e));
  }
  return a;
}

inline json to_json(const KaehlerReport& r) {
  return {{"n", r.n}, {"rank", r.rank}, {"det", r.det.get_str()}, {"factorization", to_json(r.factorization)},
          {"factorization_text", factorization_string(r.factorization)}};
}

inline json to_json(const GroupReport& r) {
  json gens = json::array();
  for (const auto& g : r.generators) {
    json w = {{"wheel", g.wheel},
              {"cycles", cycle_notation(g.perm)},
              {"order", g.order},
              {"windings", g.windings},
              {"steps", g.steps_used}};
    if (g.joint_winding) w["joint_winding"] = true;
    gens.push_back(std::move(w));
  }
  json pairs = json::array();
  for (const auto& [i, j] : r.presentations.commuting_pairs) pairs.push_back(json::array({i + 1, j + 1}));
  json dups = json::array();
  for (const auto& [i, j] : r.duplicate_deformations) dups.push_back(json::array({i + 1, j + 1}));
  json out = {{"order", r.group_order},
              {"generators", std::move(gens)},
              {"Pi", r.presentations.pi_big},
              {"pi", r.presentations.pi_small},
              {"cyclic_relations_hold", r.presentations.cyclic_relations_hold},
              {"mixed_relations_hold", r.presentations.mixed_relations_hold},
              {"commuting_pairs", std::move(pairs)},
              {"duplicate_deformations", std::move(dups)}};
  if (r.presentations.pi_abelian) out["pi_abelian"] = *r.presentations.pi_abelian;
  return out;
}

}  // namespace energized
