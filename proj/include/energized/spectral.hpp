#pragma once

// Eigenvalue monodromy of L(G, h) under single-wheel circular deformations
// h_t(x) = e^{it} h(x), and the permutation groups the wheels generate.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <future>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "energized/connection.hpp"
#include "energized/eigen.hpp"
#include "energized/error.hpp"
#include "energized/matrix.hpp"
#include "energized/setsystem.hpp"

namespace energized {

// ---------------------------------------------------------------------------
// Permutations. perm[k] is the image of k; (p * q)[k] = p[q[k]].

using Permutation = std::vector<std::size_t>;

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

inline bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw Error("compose: degree mismatch");
  Permutation r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) r[k] = p[q[k]];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) r[p[k]] = k;
  return r;
}

inline Permutation power(const Permutation& p, long e) {
  Permutation base = e < 0 ? inverse(p) : p;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Permutation r = identity_permutation(p.size());
  while (k) {
    if (k & 1UL) r = compose(base, r);
    base = compose(base, base);
    k >>= 1;
  }
  return r;
}

inline std::vector<std::vector<std::size_t>> cycles(const Permutation& p) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> c;
    for (std::size_t k = s; !seen[k]; k = p[k]) {
      seen[k] = true;
      c.push_back(k);
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// Smallest m >= 1 with p^m = id.
inline std::size_t permutation_order(const Permutation& p) {
  std::size_t m = 1;
  for (const auto& c : cycles(p)) m = std::lcm(m, c.size());
  return m;
}

/// One-line cycle notation with 1-based points, fixed points omitted; "()" for id.
inline std::string cycle_notation(const Permutation& p) {
  std::string out;
  for (const auto& c : cycles(p)) {
    if (c.size() < 2) continue;
    out += "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += " ";
      out += std::to_string(c[k] + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------
// Matching eigenvalues between consecutive samples.

/// Minimum-cost perfect assignment (Hungarian method, O(n^3)).
/// Returns col[k], the column assigned to row k.
inline std::vector<std::size_t> min_cost_assignment(const Matrix<double>& cost) {
  const std::size_t n = cost.rows();
  if (cost.cols() != n) throw Error("assignment: cost matrix must be square");
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based potentials; row 0 / column 0 are sentinels.
  std::vector<double> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<bool> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<std::size_t> col(n);
  for (std::size_t j = 1; j <= n; ++j) col[p[j] - 1] = j - 1;
  return col;
}

struct StepMatch {
  std::vector<std::size_t> target;
  bool used_assignment = false;
  /// max_k |pred_k - next_target(k)| / (distance from next_target(k) to its nearest neighbour)
  double ambiguity = 0;
};

/// Labels `next` by nearest neighbour to `pred`, falling back to the
/// optimal assignment when greedy is not a bijection or a runner-up is
/// within a factor of 2.
inline StepMatch match_step(std::span<const cplx> pred, std::span<const cplx> next) {
  const std::size_t n = pred.size();
  StepMatch m;
  m.target.assign(n, 0);
  bool clear = true;
  std::vector<bool> taken(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    double d1 = std::numeric_limits<double>::infinity(), d2 = d1;
    std::size_t best = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const double d = std::abs(pred[k] - next[j]);
      if (d < d1) {
        d2 = d1;
        d1 = d;
        best = j;
      } else if (d < d2) {
        d2 = d;
      }
    }
    m.target[k] = best;
    if (taken[best] || d2 < 2.0 * d1) clear = false;
    taken[best] = true;
  }
  if (!clear) {
    Matrix<double> cost(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) cost(k, j) = std::abs(pred[k] - next[j]);
    m.target = min_cost_assignment(cost);
    m.used_assignment = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = m.target[k];
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) gap = std::min(gap, std::abs(next[i] - next[j]));
    const double err = std::abs(pred[k] - next[j]);
    const double ratio = gap > 0 ? err / gap : (err > 0 ? std::numeric_limits<double>::infinity() : 0.0);
    m.ambiguity = std::max(m.ambiguity, ratio);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Tracking one wheel.

struct TrackOptions {
  std::size_t steps = 500;
  /// The step count may be doubled up to steps * max_refinement.
  std::size_t max_refinement = 16;
  /// A step is ambiguous when a prediction error exceeds this fraction of
  /// the gap around the matched eigenvalue.
  double ambiguity_ratio = 0.5;
  double winding_tolerance = 1e-3;
  bool keep_samples = true;
  /// Track wheels concurrently in wheel_permutations.
  bool parallel = false;
};

struct SpectralPath {
  std::size_t wheel = 0;
  std::size_t steps = 0;
  /// Eigenvalues at t = 0 in solver order; label k starts at initial[k].
  std::vector<cplx> initial;
  /// samples[s][k]: eigenvalue with label k at t = 2 pi s / steps.
  std::vector<std::vector<cplx>> samples;
  /// Label k ends at initial[perm[k]].
  Permutation perm;
  /// Total argument increment of each label's path divided by 2 pi.
  std::vector<double> raw_windings;
  double worst_ambiguity = 0;
  std::size_t assignment_steps = 0;

  double t(std::size_t s) const { return 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(steps); }
};

namespace detail {

inline std::optional<SpectralPath> try_track(const Matrix<cplx>& L0, const Matrix<cplx>& D, cplx hw,
                                             std::size_t wheel, std::size_t steps, const TrackOptions& opt) {
  const std::size_t n = L0.rows();
  SpectralPath path;
  path.wheel = wheel;
  path.steps = steps;
  path.initial = eigenvalues(L0);
  path.raw_windings.assign(n, 0.0);
  std::vector<cplx> cur = path.initial, prev = cur;
  if (opt.keep_samples) path.samples.push_back(cur);
  std::vector<std::size_t> last_target = identity_permutation(n);

  for (std::size_t s = 1; s <= steps; ++s) {
    Matrix<cplx> Lt = L0;
    if (s < steps) {
      const double t = 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(steps);
      const cplx delta = (std::polar(1.0, t) - 1.0) * hw;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (D(i, j) != 0.0) Lt(i, j) += delta;
    }
    const std::vector<cplx> next = eigenvalues(std::move(Lt));
    std::vector<cplx> pred(n);
    for (std::size_t k = 0; k < n; ++k) pred[k] = s > 1 ? 2.0 * cur[k] - prev[k] : cur[k];
    const StepMatch m = match_step(pred, next);
    path.worst_ambiguity = std::max(path.worst_ambiguity, m.ambiguity);
    if (m.used_assignment) ++path.assignment_steps;
    if (m.ambiguity > opt.ambiguity_ratio) return std::nullopt;
    prev = cur;
    for (std::size_t k = 0; k < n; ++k) {
      cur[k] = next[m.target[k]];
      path.raw_windings[k] += std::arg(cur[k] / prev[k]) / (2.0 * std::numbers::pi);
    }
    if (opt.keep_samples) path.samples.push_back(cur);
    last_target = m.target;
  }
  // The last sample is computed from L0 itself, so its eigenvalues are
  // exactly `initial` and the last matching is the wheel permutation.
  path.perm = last_target;
  return path;
}

}  // namespace detail

/// 0/1 matrix of entries of L that contain h(wheel).
inline Matrix<cplx> wheel_direction(const SetSystem& s, std::size_t wheel) {
  const std::size_t n = s.size();
  Matrix<cplx> d = Matrix<cplx>::zeros(n, n);
  const auto up = star(s, wheel);
  for (std::size_t x : up)
    for (std::size_t y : up) d(x, y) = 1.0;
  return d;
}

inline SpectralPath track_wheel(const SetSystem& s, std::span<const cplx> h, std::size_t wheel,
                                const TrackOptions& opt = {}) {
  require_field_size(s, h);
  if (wheel >= s.size()) throw Error("wheel index out of range");
  if (opt.steps == 0) throw Error("track_wheel: steps must be positive");
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h[k] == 0.0) throw Error("track_wheel: h vanishes at element " + std::to_string(k));
  const Matrix<cplx> L0 = build(s, h).L;
  const Matrix<cplx> D = wheel_direction(s, wheel);
  const std::size_t cap = opt.steps * std::max<std::size_t>(opt.max_refinement, 1);
  for (std::size_t steps = opt.steps; steps <= cap; steps *= 2) {
    if (auto p = detail::try_track(L0, D, h[wheel], wheel, steps, opt)) return std::move(*p);
  }
  throw TrackingAmbiguity("eigenvalue tracking for wheel " + std::to_string(wheel + 1) + " (1-based) stayed ambiguous up to " +
                              std::to_string(cap) + " steps",
                          wheel, cap * 2);
}

inline SpectralPath track_wheel(const SetSystem& s, const EnergyFunction<cplx>& h, std::size_t wheel,
                                const TrackOptions& opt = {}) {
  return track_wheel(s, std::span<const cplx>(h), wheel, opt);
}

struct Windings {
  /// Integer winding per label. A cycle of the wheel permutation closes up
  /// only after all of its labels are traversed, so the cycle's winding is
  /// attributed to its smallest label and the other labels get 0.
  std::vector<long> per_label;
  /// The same quantities before rounding.
  std::vector<double> unrounded;
  /// (cycle, winding) for every cycle of the permutation.
  std::vector<std::pair<std::vector<std::size_t>, long>> per_cycle;
};

inline Windings winding_numbers(const SpectralPath& path, double tol = 1e-3) {
  const std::size_t n = path.raw_windings.size();
  Windings w;
  w.per_label.assign(n, 0);
  w.unrounded.assign(n, 0.0);
  for (const auto& c : cycles(path.perm)) {
    double total = 0;
    for (std::size_t k : c) total += path.raw_windings[k];
    const double r = std::round(total);
    if (std::fabs(total - r) > tol)
      throw Error("wheel " + std::to_string(path.wheel) + ": winding " + std::to_string(total) +
                  " is not an integer; eigenvalue tracking failed");
    const std::size_t leader = *std::min_element(c.begin(), c.end());
    w.per_label[leader] = static_cast<long>(r);
    w.unrounded[leader] = total;
    w.per_cycle.emplace_back(c, static_cast<long>(r));
  }
  return w;
}

struct WheelPermutation {
  std::size_t wheel = 0;
  Permutation perm;
  std::size_t order = 1;
  std::vector<long> windings;
  std::vector<double> unrounded_windings;
  std::size_t steps_used = 0;
  double worst_ambiguity = 0;
  /// Number of cycles along which the spectrum winds around 0.
  std::size_t winding_cycles = 0;
  /// Some cycle of length > 1 winds (several eigenvalues turn around 0 together).
  bool joint_winding = false;
  SpectralPath path;
};

inline WheelPermutation make_wheel_permutation(SpectralPath path, double tol) {
  WheelPermutation w;
  w.wheel = path.wheel;
  w.perm = path.perm;
  w.order = permutation_order(path.perm);
  const Windings wn = winding_numbers(path, tol);
  w.windings = wn.per_label;
  w.unrounded_windings = wn.unrounded;
  for (const auto& [c, wind] : wn.per_cycle)
    if (wind != 0) {
      ++w.winding_cycles;
      if (c.size() > 1) w.joint_winding = true;
    }
  w.steps_used = path.steps;
  w.worst_ambiguity = path.worst_ambiguity;
  w.path = std::move(path);
  return w;
}

/// One wheel permutation per element of G.
inline std::vector<WheelPermutation> wheel_permutations(const SetSystem& s, std::span<const cplx> h,
                                                        const TrackOptions& opt = {}) {
  const std::size_t n = s.size();
  std::vector<WheelPermutation> out(n);
  if (opt.parallel && n > 1) {
    std::vector<std::future<WheelPermutation>> jobs;
    jobs.reserve(n);
    for (std::size_t w = 0; w < n; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        return make_wheel_permutation(track_wheel(s, h, w, opt), opt.winding_tolerance);
      }));
    for (std::size_t w = 0; w < n; ++w) out[w] = jobs[w].get();
  } else {
    for (std::size_t w = 0; w < n; ++w) out[w] = make_wheel_permutation(track_wheel(s, h, w, opt), opt.winding_tolerance);
  }
  return out;
}

inline std::vector<WheelPermutation> wheel_permutations(const SetSystem& s, const EnergyFunction<cplx>& h,
                                                        const TrackOptions& opt = {}) {
  return wheel_permutations(s, std::span<const cplx>(h), opt);
}

// ---------------------------------------------------------------------------
// Group closure.

struct GroupClosure {
  std::size_t order = 0;
  std::vector<Permutation> elements;
};

namespace detail {
struct PermHash {
  std::size_t operator()(const std::vector<std::uint16_t>& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};
}  // namespace detail

/// All products of the generators, by breadth-first multiplication.
inline GroupClosure group_closure(std::span<const Permutation> gens, std::size_t cap = 1'000'000) {
  std::size_t degree = gens.empty() ? 0 : gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != degree) throw Error("group_closure: generators of different degree");
    if (!is_permutation(g)) throw Error("group_closure: generator is not a permutation");
  }
  if (degree > 65535) throw Error("group_closure: degree too large");
  using Key = std::vector<std::uint16_t>;
  auto key = [](const Permutation& p) { return Key(p.begin(), p.end()); };

  GroupClosure out;
  std::unordered_set<Key, detail::PermHash> seen;
  const Permutation id = identity_permutation(degree);
  seen.insert(key(id));
  out.elements.push_back(id);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = compose(g, out.elements[head]);
      if (seen.insert(key(next)).second) {
        if (out.elements.size() >= cap)
          throw Error("group_closure: group exceeds the cap of " + std::to_string(cap) + " elements");
        out.elements.push_back(std::move(next));
      }
    }
  }
  out.order = out.elements.size();
  return out;
}

// ---------------------------------------------------------------------------
// Presentations.

struct Presentations {
  /// Finite presentation: cyclic relations g_k^{n_k} and all mixed relations.
  std::string pi_big;
  /// Only the mixed relations g_i^{n_i} g_j^{n_j} g_i^{-n_i} g_j^{-n_j}.
  std::string pi_small;
  /// "Z^n" when the permutation group is trivial.
  std::optional<std::string> pi_abelian;
  bool cyclic_relations_hold = true;
  bool mixed_relations_hold = true;
  /// Pairs (i, j), i < j, whose generators commute in the permutation group.
  std::vector<std::pair<std::size_t, std::size_t>> commuting_pairs;
};

namespace detail {
inline std::string gen_pow(std::size_t k, long e) {
  std::string s = "g" + std::to_string(k + 1);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}
}  // namespace detail

inline Presentations presentations(std::span<const WheelPermutation> gens, std::size_t group_order) {
  const std::size_t n = gens.size();
  Presentations out;
  std::string generators;
  for (std::size_t k = 0; k < n; ++k) generators += (k ? ", " : "") + detail::gen_pow(k, 1);

  std::vector<std::string> cyclic, mixed;
  for (std::size_t k = 0; k < n; ++k) {
    const long nk = static_cast<long>(gens[k].order);
    cyclic.push_back("g" + std::to_string(k + 1) + "^" + std::to_string(nk) + " = 1");
    const auto& p = gens[k].perm;
    if (power(p, nk) != identity_permutation(p.size())) out.cyclic_relations_hold = false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const long ni = static_cast<long>(gens[i].order), nj = static_cast<long>(gens[j].order);
      mixed.push_back(detail::gen_pow(i, ni) + " " + detail::gen_pow(j, nj) + " " + detail::gen_pow(i, -ni) + " " +
                      detail::gen_pow(j, -nj) + " = 1");
      const auto& pi = gens[i].perm;
      const auto& pj = gens[j].perm;
      const Permutation rel =
          compose(power(pi, ni), compose(power(pj, nj), compose(power(pi, -ni), power(pj, -nj))));
      if (rel != identity_permutation(pi.size())) out.mixed_relations_hold = false;
      if (compose(pi, pj) == compose(pj, pi)) out.commuting_pairs.emplace_back(i, j);
    }

  auto join = [](const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? ", " : "") + parts[k];
    return s;
  };
  std::vector<std::string> all = cyclic;
  all.insert(all.end(), mixed.begin(), mixed.end());
  out.pi_big = "< " + generators + " | " + join(all) + " >";
  out.pi_small = "< " + generators + " | " + join(mixed) + " >";
  if (group_order == 1) out.pi_abelian = n == 1 ? std::string("Z") : "Z^" + std::to_string(n);
  return out;
}

// ---------------------------------------------------------------------------

struct GroupReport {
  std::vector<WheelPermutation> generators;
  std::size_t group_order = 0;
  Presentations presentations;
  /// Wheel pairs whose spectral deformations coincide sample by sample.
  std::vector<std::pair<std::size_t, std::size_t>> duplicate_deformations;
};

/// True iff the two paths have the same step count and the same eigenvalue
/// multiset (within tol) at every sample.
inline bool same_deformation(const SpectralPath& a, const SpectralPath& b, double tol = 1e-9) {
  if (a.steps != b.steps || a.samples.size() != b.samples.size() || a.samples.empty()) return false;
  for (std::size_t s = 0; s < a.samples.size(); ++s) {
    const auto& x = a.samples[s];
    const auto& y = b.samples[s];
    const std::size_t n = x.size();
    Matrix<double> cost(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cost(i, j) = std::abs(x[i] - y[j]);
    const auto m = min_cost_assignment(cost);
    for (std::size_t i = 0; i < n; ++i)
      if (cost(i, m[i]) > tol * (1.0 + std::abs(x[i]))) return false;
  }
  return true;
}

inline GroupReport analyze_group(const SetSystem& s, std::span<const cplx> h, const TrackOptions& opt = {},
                                 std::size_t closure_cap = 1'000'000) {
  GroupReport r;
  r.generators = wheel_permutations(s, h, opt);
  std::vector<Permutation> perms;
  for (const auto& g : r.generators) perms.push_back(g.perm);
  r.group_order = group_closure(perms, closure_cap).order;
  r.presentations = presentations(r.generators, r.group_order);
  for (std::size_t i = 0; i < r.generators.size(); ++i)
    for (std::size_t j = i + 1; j < r.generators.size(); ++j)
      if (same_deformation(r.generators[i].path, r.generators[j].path)) r.duplicate_deformations.emplace_back(i, j);
  return r;
}

inline GroupReport analyze_group(const SetSystem& s, const EnergyFunction<cplx>& h, const TrackOptions& opt = {},
                                 std::size_t closure_cap = 1'000'000) {
  return analyze_group(s, std::span<const cplx>(h), opt, closure_cap);
}

}  // namespace energized
