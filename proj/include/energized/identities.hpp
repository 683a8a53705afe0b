#pragma once

// Structural identities of energized complexes, returned as reports rather
// than thrown: a check that is expected to fail (non-complex input, non-unit
// field) still yields its deviation and witnesses.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "energized/connection.hpp"
#include "energized/determinants.hpp"
#include "energized/eigen.hpp"
#include "energized/matrix.hpp"
#include "energized/scalars.hpp"
#include "energized/setsystem.hpp"

namespace energized {

struct IdentityReport {
  std::string name;
  /// False when a hypothesis is not met (then `applicability` says which).
  bool applicable = true;
  std::string applicability;
  bool holds = false;
  double max_abs_deviation = 0;
  double tolerance = 0;
  std::vector<std::pair<std::size_t, std::size_t>> witnesses;
  std::vector<std::string> notes;

  /// What a caller should treat as a failure.
  bool failed() const { return applicable && !holds; }
};

struct IdentityOptions {
  /// Absolute tolerance for float kinds, scaled by max(1, max |h|^2).
  double tolerance = 1e-9;
  std::size_t max_witnesses = 32;
};

namespace detail {

template <class T>
T from_norm(const norm_t<T>& v) {
  if constexpr (std::is_same_v<T, GaussianRational>) {
    return GaussianRational(v);
  } else {
    return T(v);
  }
}

template <class T>
double deviation(const T& a, const T& b) {
  if constexpr (scalar_traits<T>::exact) {
    return a == b ? 0.0 : magnitude(T(a - b));
  } else {
    return magnitude(T(a - b));
  }
}

template <class T>
double scaled_tolerance(std::span<const T> h, double tol) {
  if constexpr (scalar_traits<T>::exact) {
    return 0.0;
  } else {
    double m = 1.0;
    for (const T& v : h) m = std::max(m, to_double(norm_sq(v)));
    return tol * m;
  }
}

inline void finish(IdentityReport& r) { r.holds = r.max_abs_deviation <= r.tolerance; }

inline void require_complex(IdentityReport& r, const SetSystem& s) {
  if (!is_simplicial_complex(s)) {
    r.applicable = false;
    r.applicability = "not a simplicial complex";
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------

template <class T>
struct GreenStarReport {
  /// Does g* L = L g* = 1 hold? Applicable for complexes with unit fields.
  IdentityReport identity;
  Matrix<T> gbar_L;
  Matrix<T> L_gbar;
  /// max_x |(g* L)(x,x) - |h(x)|^2|.
  double diagonal_deviation = 0;
  bool diagonal_matches_norms = false;
  bool upper_triangular = false;
  bool lower_triangular = false;
};

template <class T>
GreenStarReport<T> green_star_check(const SetSystem& s, std::span<const T> h, const IdentityOptions& opt = {}) {
  const auto cm = build(s, h);
  const std::size_t n = s.size();
  GreenStarReport<T> out;
  IdentityReport& r = out.identity;
  r.name = "greenstar";
  r.tolerance = detail::scaled_tolerance(h, opt.tolerance);
  detail::require_complex(r, s);
  bool units = true;
  for (const T& v : h) units = units && is_unit(v, opt.tolerance);
  if (!units && r.applicable) {
    r.applicable = false;
    r.applicability = "field is not unit valued";
  }

  const Matrix<T> gbar = cm.g.conjugated();
  out.gbar_L = gbar * cm.L;
  out.L_gbar = cm.L * gbar;
  const Matrix<T> id = Matrix<T>::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double d = std::max(detail::deviation(out.gbar_L(i, j), id(i, j)),
                                detail::deviation(out.L_gbar(i, j), id(i, j)));
      r.max_abs_deviation = std::max(r.max_abs_deviation, d);
      if (d > r.tolerance && r.witnesses.size() < opt.max_witnesses) r.witnesses.emplace_back(i, j);
    }
  detail::finish(r);

  for (std::size_t x = 0; x < n; ++x)
    out.diagonal_deviation =
        std::max(out.diagonal_deviation, detail::deviation(out.gbar_L(x, x), detail::from_norm<T>(norm_sq(h[x]))));
  out.diagonal_matches_norms = out.diagonal_deviation <= r.tolerance;

  out.upper_triangular = out.lower_triangular = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double m = detail::deviation(out.gbar_L(i, j), zero<T>());
      if (i > j && m > r.tolerance) out.upper_triangular = false;
      if (i < j && m > r.tolerance) out.lower_triangular = false;
    }
  if (is_simplicial_complex(s)) {
    r.notes.push_back(out.diagonal_matches_norms ? "diagonal of g*L equals |h|^2" : "diagonal of g*L differs from |h|^2");
    if (s.is_canonically_ordered())
      r.notes.push_back(out.upper_triangular ? "g*L upper triangular" : "g*L not upper triangular");
  }
  return out;
}

template <class T>
GreenStarReport<T> green_star_check(const SetSystem& s, const EnergyFunction<T>& h, const IdentityOptions& opt = {}) {
  return green_star_check(s, std::span<const T>(h), opt);
}

/// sum_{x,y} g(x,y) = H(G).
template <class T>
IdentityReport energy_theorem_check(const SetSystem& s, std::span<const T> h, const IdentityOptions& opt = {}) {
  IdentityReport r;
  r.name = "energy";
  r.tolerance = detail::scaled_tolerance(h, opt.tolerance);
  detail::require_complex(r, s);
  const auto cm = build(s, h);
  T sum = zero<T>();
  for (const T& v : cm.g.data()) sum += v;
  r.max_abs_deviation = detail::deviation(sum, total_energy(h));
  detail::finish(r);
  r.notes.push_back("sum g = " + to_string(sum) + ", H(G) = " + to_string(total_energy(h)));
  return r;
}

/// str(g) = H(G) and V(x) = omega(x) g(x,x) for every x.
template <class T>
IdentityReport gauss_bonnet_check(const SetSystem& s, std::span<const T> h, const IdentityOptions& opt = {}) {
  IdentityReport r;
  r.name = "gaussbonnet";
  r.tolerance = detail::scaled_tolerance(h, opt.tolerance);
  detail::require_complex(r, s);
  const auto cm = build(s, h);
  const T st = super_trace(cm.g, cm.signs);
  r.max_abs_deviation = detail::deviation(st, total_energy(h));
  const auto pc = potential_and_curvature(cm);
  for (std::size_t x = 0; x < s.size(); ++x) {
    const double d = detail::deviation(pc.potential[x], pc.curvature[x]);
    r.max_abs_deviation = std::max(r.max_abs_deviation, d);
    if (d > r.tolerance && r.witnesses.size() < opt.max_witnesses) r.witnesses.emplace_back(x, x);
  }
  detail::finish(r);
  r.notes.push_back("str(g) = " + to_string(st));
  return r;
}

template <class T>
IdentityReport energy_theorem_check(const SetSystem& s, const EnergyFunction<T>& h, const IdentityOptions& opt = {}) {
  return energy_theorem_check(s, std::span<const T>(h), opt);
}

template <class T>
IdentityReport gauss_bonnet_check(const SetSystem& s, const EnergyFunction<T>& h, const IdentityOptions& opt = {}) {
  return gauss_bonnet_check(s, std::span<const T>(h), opt);
}

/// With h = omega: L and g are integer matrices, g L = 1 and
/// det(L) = prod omega(x), all in exact arithmetic.
inline IdentityReport unimodularity_check(const SetSystem& s) {
  IdentityReport r;
  r.name = "unimodular";
  r.tolerance = 0;
  detail::require_complex(r, s);
  const auto h = omega_field<GaussianRational>(s);
  const auto cm = build(s, std::span<const GaussianRational>(h));
  const std::size_t n = s.size();

  auto integral = [](const GaussianRational& v) { return v.im == 0 && v.re.get_den() == 1; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!integral(cm.L(i, j)) || !integral(cm.g(i, j))) {
        r.max_abs_deviation = std::max(r.max_abs_deviation, 1.0);
        if (r.witnesses.size() < 32) r.witnesses.emplace_back(i, j);
      }

  const auto gl = cm.g * cm.L;
  const auto id = Matrix<GaussianRational>::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double d = detail::deviation(gl(i, j), id(i, j));
      r.max_abs_deviation = std::max(r.max_abs_deviation, d);
      if (d > 0 && r.witnesses.size() < 32) r.witnesses.emplace_back(i, j);
    }

  long expected = 1;
  for (const auto& x : s) expected *= omega(x);
  const GaussianRational det = dieudonne_det(cm.L);
  r.max_abs_deviation = std::max(r.max_abs_deviation, detail::deviation(det, GaussianRational(expected)));
  r.notes.push_back("det(L) = " + det.str() + ", prod omega = " + std::to_string(expected));
  if (n <= 8) {
    // Integer-valued doubles below 2^53 are exact.
    const double leib = leibniz_det(cm.L.map([](const GaussianRational& v) { return v.re.get_d(); }));
    r.max_abs_deviation = std::max(r.max_abs_deviation, std::fabs(leib - static_cast<double>(expected)));
    r.notes.push_back("Leibniz det(L) = " + detail::format_double(leib));
  }
  detail::finish(r);
  return r;
}

struct SignatureReport {
  IdentityReport identity;
  std::size_t negative_eigenvalues = 0;
  std::size_t negative_values = 0;
  /// min_k |lambda_k|; callers may reject draws too close to 0.
  double min_abs_eigenvalue = 0;
  std::vector<double> spectrum;
};

/// For real h on a simplicial complex: #{lambda < 0} = #{x : h(x) < 0}.
inline SignatureReport spectral_signature_check(const SetSystem& s, std::span<const double> h) {
  SignatureReport out;
  IdentityReport& r = out.identity;
  r.name = "signature";
  r.tolerance = 0;
  detail::require_complex(r, s);
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h[k] == 0.0) throw Error("spectral signature: h vanishes at element " + std::to_string(k));
  const auto cm = build(s, h);
  const auto ev = eigenvalues(to_complex(cm.L));
  out.min_abs_eigenvalue = std::numeric_limits<double>::infinity();
  for (const cplx& l : ev) {
    out.spectrum.push_back(l.real());
    out.min_abs_eigenvalue = std::min(out.min_abs_eigenvalue, std::abs(l));
    if (l.real() < 0) ++out.negative_eigenvalues;
  }
  std::sort(out.spectrum.begin(), out.spectrum.end());
  for (double v : h)
    if (v < 0) ++out.negative_values;
  r.max_abs_deviation = out.negative_eigenvalues == out.negative_values ? 0.0 : 1.0;
  r.notes.push_back(std::to_string(out.negative_eigenvalues) + " negative eigenvalues, " +
                    std::to_string(out.negative_values) + " negative field values");
  detail::finish(r);
  return out;
}

// ---------------------------------------------------------------------------
// Euler characteristics of the spheres around x in the Barycentric
// refinement (vertices = elements of G, edges = strict inclusions).

enum class Sphere { Stable, Unstable, Unit };

/// chi of the order complex of {y : y related to x}, related meaning a
/// strict subset (Stable), strict superset (Unstable) or either (Unit).
inline long sphere_euler(const SetSystem& s, std::size_t x, Sphere which) {
  std::vector<std::size_t> pts;
  for (std::size_t y = 0; y < s.size(); ++y) {
    if (y == x) continue;
    const bool below = is_subset(s[y], s[x]);
    const bool above = is_subset(s[x], s[y]);
    if ((which != Sphere::Unstable && below) || (which != Sphere::Stable && above)) pts.push_back(y);
  }
  // Sort by cardinality so every strict subset comes first; f(y) is the
  // signed count of chains whose top element is y.
  std::sort(pts.begin(), pts.end(), [&](std::size_t a, std::size_t b) { return s[a].size() < s[b].size(); });
  std::vector<long> f(pts.size(), 0);
  long chi = 0;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    long v = 1;
    for (std::size_t b = 0; b < a; ++b)
      if (s[pts[b]].size() < s[pts[a]].size() && is_subset(s[pts[b]], s[pts[a]])) v -= f[b];
    f[a] = v;
    chi += v;
  }
  return chi;
}

/// With h = omega: 1 - chi(S(x)) = (1 - chi(S^-(x))) (1 - chi(S^+(x))) for all x.
inline IdentityReport join_genus_check(const SetSystem& s) {
  IdentityReport r;
  r.name = "joingenus";
  r.tolerance = 0;
  detail::require_complex(r, s);
  for (std::size_t x = 0; x < s.size(); ++x) {
    const long lhs = 1 - sphere_euler(s, x, Sphere::Unit);
    const long rhs = (1 - sphere_euler(s, x, Sphere::Stable)) * (1 - sphere_euler(s, x, Sphere::Unstable));
    if (lhs != rhs) {
      r.max_abs_deviation = std::max(r.max_abs_deviation, static_cast<double>(std::labs(lhs - rhs)));
      r.witnesses.emplace_back(x, x);
    }
  }
  detail::finish(r);
  return r;
}

}  // namespace energized
