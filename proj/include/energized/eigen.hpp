#pragma once

// Eigenvalues of dense complex matrices: Householder reduction to upper
// Hessenberg form followed by implicit single-shift QR with Wilkinson shifts.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "energized/error.hpp"
#include "energized/matrix.hpp"

namespace energized {

using cplx = std::complex<double>;

namespace detail {

inline void reduce_to_hessenberg(Matrix<cplx>& a) {
  const std::size_t n = a.rows();
  if (n < 3) return;
  std::vector<cplx> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm_x = 0;
    for (std::size_t i = k + 1; i < n; ++i) norm_x += std::norm(a(i, k));
    norm_x = std::sqrt(norm_x);
    if (norm_x == 0.0) continue;
    const cplx x0 = a(k + 1, k);
    const cplx phase = std::abs(x0) == 0.0 ? cplx(1.0) : x0 / std::abs(x0);
    const cplx alpha = -phase * norm_x;

    std::fill(v.begin(), v.end(), cplx(0));
    for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
    v[k + 1] -= alpha;
    double vn = 0;
    for (std::size_t i = k + 1; i < n; ++i) vn += std::norm(v[i]);
    vn = std::sqrt(vn);
    if (vn == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= vn;

    // A <- (I - 2 v v*) A
    for (std::size_t j = k; j < n; ++j) {
      cplx s = 0;
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * a(i, j);
      s *= 2.0;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= v[i] * s;
    }
    // A <- A (I - 2 v v*)
    for (std::size_t i = 0; i < n; ++i) {
      cplx s = 0;
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      s *= 2.0;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= s * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0;
  }
}

// G = [[c, s], [-conj(s), c]] with c real and G [a; b] = [r; 0].
struct Givens {
  double c;
  cplx s;
};

inline Givens make_givens(cplx a, cplx b) {
  const double ab = std::abs(b);
  if (ab == 0.0) return {1.0, 0.0};
  const double aa = std::abs(a);
  if (aa == 0.0) return {0.0, 1.0};
  const double r = std::hypot(aa, ab);
  return {aa / r, (a / aa) * std::conj(b) / r};
}

inline cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
  // Eigenvalue of [[a, b], [c, d]] closer to d.
  const cplx half = 0.5 * (a - d);
  const cplx disc = std::sqrt(half * half + b * c);
  const cplx mu1 = 0.5 * (a + d) + disc;
  const cplx mu2 = 0.5 * (a + d) - disc;
  return std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
}

}  // namespace detail

/// All n eigenvalues of a square complex matrix (as a multiset; no ordering
/// contract beyond determinism for identical input).
inline std::vector<cplx> eigenvalues(Matrix<cplx> a) {
  if (!a.square()) throw Error("eigenvalues of a non-square matrix");
  const std::size_t n = a.rows();
  for (const cplx& v : a.data())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw Error("eigenvalues: non-finite matrix entry");
  if (n == 0) return {};

  detail::reduce_to_hessenberg(a);
  const double eps = std::numeric_limits<double>::epsilon();
  const double scale = std::max(max_abs(a), std::numeric_limits<double>::min());

  std::size_t hi = n - 1;
  std::size_t iter = 0;
  std::size_t total = 0;
  const std::size_t max_total = 60 * n;
  while (hi > 0) {
    // Find the start of the unreduced block ending at hi.
    std::size_t lo = hi;
    while (lo > 0) {
      const double sub = std::abs(a(lo, lo - 1));
      const double diag = std::abs(a(lo, lo)) + std::abs(a(lo - 1, lo - 1));
      if (sub <= eps * diag || sub <= eps * eps * scale) {
        a(lo, lo - 1) = 0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      --hi;
      iter = 0;
      continue;
    }
    if (++total > max_total) throw Error("eigenvalues: QR iteration did not converge");
    ++iter;

    cplx mu;
    if (iter % 11 == 0) {
      // Exceptional shift to break cycles.
      mu = a(hi, hi) + cplx(std::abs(a(hi, hi - 1)), 0.75 * std::abs(a(hi, hi - 1)));
    } else {
      mu = detail::wilkinson_shift(a(hi - 1, hi - 1), a(hi - 1, hi), a(hi, hi - 1), a(hi, hi));
    }

    // Implicit single-shift QR sweep over rows/columns lo..hi.
    cplx x = a(lo, lo) - mu;
    cplx y = a(lo + 1, lo);
    for (std::size_t k = lo; k < hi; ++k) {
      const auto g = detail::make_givens(x, y);
      const std::size_t col0 = k > lo ? k - 1 : lo;
      for (std::size_t j = col0; j <= hi; ++j) {
        const cplx t1 = a(k, j), t2 = a(k + 1, j);
        a(k, j) = g.c * t1 + g.s * t2;
        a(k + 1, j) = -std::conj(g.s) * t1 + g.c * t2;
      }
      const std::size_t row1 = std::min(k + 2, hi);
      for (std::size_t i = lo; i <= row1; ++i) {
        const cplx t1 = a(i, k), t2 = a(i, k + 1);
        a(i, k) = t1 * g.c + t2 * std::conj(g.s);
        a(i, k + 1) = -t1 * g.s + t2 * g.c;
      }
      if (k + 1 < hi) {
        x = a(k + 1, k);
        y = a(k + 2, k);
      }
    }
  }

  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a(k, k);
  return out;
}

template <class T>
Matrix<cplx> to_complex(const Matrix<T>& m) {
  return m.map([](const T& v) { return cplx(v); });
}

}  // namespace energized
