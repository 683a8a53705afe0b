#pragma once

// Leibniz, Study and Dieudonne determinants over the scalar tower.
//
// The Study and Dieudonne determinants share one row reduction: rows are
// only ever swapped or changed by adding a left multiple of another row, so
// the reduced matrix is upper triangular with the same determinant (up to
// the abelianized sign of the swaps).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "energized/connection.hpp"
#include "energized/error.hpp"
#include "energized/matrix.hpp"
#include "energized/scalars.hpp"
#include "energized/setsystem.hpp"

namespace energized {

struct DetOptions {
  /// Largest n accepted by leibniz_det (cost is n!).
  std::size_t leibniz_cap = 10;
  /// Float kinds: a pivot with |p| < singular_rel * max|M(i,j)| counts as zero.
  double singular_rel = 1e-12;
};

template <class T>
struct RowOp {
  enum class Kind { Swap, AddMultiple };
  Kind kind;
  std::size_t target;
  std::size_t source;
  /// AddMultiple: row[target] <- row[target] - multiplier * row[source].
  T multiplier;
};

template <class T>
struct Elimination {
  Matrix<T> reduced;
  std::vector<T> pivots;
  std::size_t swaps = 0;
  bool singular = false;
  std::vector<RowOp<T>> log;
};

namespace detail {

template <class T>
std::size_t parity_of(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t k = start; !seen[k]; k = perm[k]) {
      seen[k] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2;
}

}  // namespace detail

/// Gaussian elimination by left row operations. Float kinds use partial
/// pivoting on the largest norm; exact kinds take the first nonzero pivot.
template <class T>
Elimination<T> row_reduce(Matrix<T> a, const DetOptions& opt = {}) {
  if (!a.square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Elimination<T> out;
  const double threshold = scalar_traits<T>::exact ? 0.0 : opt.singular_rel * max_abs(a);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    if constexpr (scalar_traits<T>::exact) {
      for (std::size_t r = k; r < n; ++r)
        if (!is_zero(a(r, k))) {
          piv = r;
          break;
        }
    } else {
      double best = -1;
      for (std::size_t r = k; r < n; ++r) {
        const double m = magnitude(a(r, k));
        if (m > best) {
          best = m;
          piv = r;
        }
      }
      if (best <= threshold || best == 0.0) piv = n;
    }
    if (piv == n) {
      out.singular = true;
      break;
    }
    if (piv != k) {
      a.swap_rows(piv, k);
      ++out.swaps;
      out.log.push_back({RowOp<T>::Kind::Swap, k, piv, zero<T>()});
    }
    const T inv = invert(a(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (is_zero(a(r, k))) continue;
      const T m = a(r, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) a(r, j) -= m * a(k, j);
      a(r, k) = zero<T>();
      out.log.push_back({RowOp<T>::Kind::AddMultiple, r, k, m});
    }
  }
  if (!out.singular)
    for (std::size_t k = 0; k < n; ++k) out.pivots.push_back(a(k, k));
  out.reduced = std::move(a);
  return out;
}

/// sum_sigma sign(sigma) M(1,s1) (M(2,s2) (... M(n,sn))), bracketed from the right.
template <class T>
T leibniz_det(const Matrix<T>& m, const DetOptions& opt = {}) {
  if (!m.square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > opt.leibniz_cap)
    throw Error("Leibniz determinant of size " + std::to_string(n) + " exceeds cap " +
                std::to_string(opt.leibniz_cap));
  if (n == 0) return one<T>();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  T sum = zero<T>();
  do {
    bool vanishes = false;
    for (std::size_t i = 0; i < n && !vanishes; ++i) vanishes = is_zero(m(i, sigma[i]));
    if (vanishes) continue;
    T acc = m(n - 1, sigma[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) acc = m(i, sigma[i]) * acc;
    if (detail::parity_of<T>(sigma)) sum -= acc;
    else sum += acc;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum;
}

/// Product of the pivot norms after row reduction; 0 for singular input.
template <class T>
double study_det(const Matrix<T>& m, const DetOptions& opt = {}) {
  const auto e = row_reduce(m, opt);
  if (e.singular) return 0.0;
  double p = 1.0;
  for (const T& v : e.pivots) p *= magnitude(v);
  return p;
}

/// Square of the Study determinant, exact for Q[i].
template <class T>
norm_t<T> study_det_sq(const Matrix<T>& m, const DetOptions& opt = {}) {
  const auto e = row_reduce(m, opt);
  norm_t<T> p = 1;
  if (e.singular) return norm_t<T>(0);
  for (const T& v : e.pivots) p *= norm_sq(v);
  return p;
}

template <class T>
abelian_t<T> dieudonne_from(const Elimination<T>& e) {
  if constexpr (!scalar_traits<T>::has_abelianization) {
    throw Unsupported("the Dieudonne determinant is not defined over the octonions; use study_det");
  } else {
    using A = abelian_t<T>;
    if (e.singular) return A(0);
    A d = abelianize(one<T>());
    for (const T& v : e.pivots) d = d * abelianize(v);
    if (e.swaps % 2 == 1) d = d * abelianize(T(-one<T>()));
    return d;
  }
}

/// Dieudonne determinant with values in the abelianization of the kind.
template <class T>
abelian_t<T> dieudonne_det(const Matrix<T>& m, const DetOptions& opt = {}) {
  if constexpr (!scalar_traits<T>::has_abelianization) {
    throw Unsupported("the Dieudonne determinant is not defined over the octonions; use study_det");
  } else {
    return dieudonne_from(row_reduce(m, opt));
  }
}

enum class DetMethod { Leibniz = 1, Study = 2, Dieudonne = 4, All = 7 };

template <class T>
struct DetResult {
  std::optional<T> leibniz;
  double study = 0;
  norm_t<T> study_sq{};
  std::optional<abelian_t<T>> dieudonne;
  std::vector<RowOp<T>> pivot_log;
};

/// Evaluates the requested determinants. The Leibniz value is skipped (left
/// empty) above the size cap and the Dieudonne value over the octonions.
template <class T>
DetResult<T> determinants(const Matrix<T>& m, DetMethod method = DetMethod::All, const DetOptions& opt = {}) {
  const int bits = static_cast<int>(method);
  DetResult<T> r;
  if ((bits & static_cast<int>(DetMethod::Leibniz)) && m.rows() <= opt.leibniz_cap) r.leibniz = leibniz_det(m, opt);
  const auto e = row_reduce(m, opt);
  r.study = 1.0;
  r.study_sq = 1;
  if (e.singular) {
    r.study = 0.0;
    r.study_sq = 0;
  } else {
    for (const T& v : e.pivots) {
      r.study *= magnitude(v);
      r.study_sq *= norm_sq(v);
    }
  }
  if constexpr (scalar_traits<T>::has_abelianization) {
    if (bits & static_cast<int>(DetMethod::Dieudonne)) r.dieudonne = dieudonne_from(e);
  }
  r.pivot_log = e.log;
  return r;
}

// ---------------------------------------------------------------------------
// det(L) = det(g) = prod_x abelianize(h(x)).

template <class T>
struct ProductFormulaReport {
  DetResult<T> det_L;
  DetResult<T> det_g;
  double expected_study = 1;
  norm_t<T> expected_study_sq{};
  std::optional<abelian_t<T>> expected_dieudonne;
  /// Relative deviations (absolute when the expected value is 0; 0/1 for exact kinds).
  double study_dev_L = 0;
  double study_dev_g = 0;
  std::optional<double> dieudonne_dev_L;
  std::optional<double> dieudonne_dev_g;
  double tolerance = 0;
  bool holds = false;
};

namespace detail {

inline double rel_dev(double got, double want) {
  const double d = std::fabs(got - want);
  return want != 0.0 ? d / std::fabs(want) : d;
}

template <class A>
double abelian_dev(const A& got, const A& want) {
  if constexpr (std::is_same_v<A, GaussianRational>) {
    return got == want ? 0.0 : magnitude(GaussianRational(got - want));
  } else {
    const double w = magnitude(want);
    const double d = magnitude(A(got - want));
    return w != 0.0 ? d / w : d;
  }
}

}  // namespace detail

template <class T>
ProductFormulaReport<T> verify_product_formula(const SetSystem& s, std::span<const T> h, double tol = 1e-9,
                                  const DetOptions& opt = {}) {
  const auto cm = build(s, h);
  ProductFormulaReport<T> r;
  r.tolerance = scalar_traits<T>::exact ? 0.0 : tol;
  // The Leibniz value plays no part in the identity and costs n!.
  const auto method = static_cast<DetMethod>(static_cast<int>(DetMethod::Study) | static_cast<int>(DetMethod::Dieudonne));
  r.det_L = determinants(cm.L, method, opt);
  r.det_g = determinants(cm.g, method, opt);

  r.expected_study_sq = 1;
  for (const T& v : h) {
    r.expected_study *= magnitude(v);
    r.expected_study_sq *= norm_sq(v);
  }
  if constexpr (scalar_traits<T>::exact) {
    r.study_dev_L = r.det_L.study_sq == r.expected_study_sq ? 0.0 : 1.0;
    r.study_dev_g = r.det_g.study_sq == r.expected_study_sq ? 0.0 : 1.0;
  } else {
    r.study_dev_L = detail::rel_dev(r.det_L.study, r.expected_study);
    r.study_dev_g = detail::rel_dev(r.det_g.study, r.expected_study);
  }
  bool ok = r.study_dev_L <= r.tolerance && r.study_dev_g <= r.tolerance;

  if constexpr (scalar_traits<T>::has_abelianization) {
    abelian_t<T> prod = abelianize(one<T>());
    for (const T& v : h) prod = prod * abelianize(v);
    r.expected_dieudonne = prod;
    r.dieudonne_dev_L = detail::abelian_dev(*r.det_L.dieudonne, prod);
    r.dieudonne_dev_g = detail::abelian_dev(*r.det_g.dieudonne, prod);
    ok = ok && *r.dieudonne_dev_L <= r.tolerance && *r.dieudonne_dev_g <= r.tolerance;
  }
  r.holds = ok;
  return r;
}

template <class T>
ProductFormulaReport<T> verify_product_formula(const SetSystem& s, const EnergyFunction<T>& h, double tol = 1e-9,
                                  const DetOptions& opt = {}) {
  return verify_product_formula(s, std::span<const T>(h), tol, opt);
}

}  // namespace energized
