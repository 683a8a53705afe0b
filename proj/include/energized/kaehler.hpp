#pragma once

// The linear map r: h -> L(G, h), its 0/1 Jacobian dr and the integer
// Kaehler form dr^T dr, with exact determinant, rank and factorization.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "energized/error.hpp"
#include "energized/matrix.hpp"
#include "energized/setsystem.hpp"

namespace energized {

using IntMatrix = Matrix<long long>;
using BigMatrix = Matrix<mpz_class>;

/// Row x*n + y, column k: 1 iff x_k lies in W^-(x) ∩ W^-(y).
inline IntMatrix jacobian_dr(const SetSystem& s) {
  const std::size_t n = s.size();
  IntMatrix a(n * n, n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto up = star(s, k);
    for (std::size_t x : up)
      for (std::size_t y : up) a(x * n + y, k) = 1;
  }
  return a;
}

/// dr^T dr. Entry (k, l) counts the pairs (x, y) with x_k, x_l in
/// W^-(x) ∩ W^-(y), which is |W^+(x_k) ∩ W^+(x_l)|^2.
inline IntMatrix kaehler_form(const SetSystem& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<bool>> in_star(n, std::vector<bool>(n, false));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x : star(s, k)) in_star[k][x] = true;
  IntMatrix f(n, n, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k; l < n; ++l) {
      long long c = 0;
      for (std::size_t x = 0; x < n; ++x) c += in_star[k][x] && in_star[l][x];
      f(k, l) = f(l, k) = c * c;
    }
  return f;
}

inline BigMatrix to_big(const IntMatrix& m) {
  BigMatrix b(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = static_cast<long>(m(i, j));
  return b;
}

/// Fraction-free (Bareiss) determinant; every intermediate is an exact minor.
inline mpz_class exact_det(BigMatrix a) {
  if (!a.square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline mpz_class exact_det(const IntMatrix& m) { return exact_det(to_big(m)); }

/// Rank over the rationals, by fraction-free elimination.
inline std::size_t rank(BigMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a(i, j) = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

inline std::size_t rank(const IntMatrix& m) { return rank(to_big(m)); }

struct PrimePower {
  mpz_class prime;
  unsigned exponent = 0;
  /// False only for a cofactor above the trial bound that fails the
  /// probabilistic primality test.
  bool certified_prime = true;
};

/// Factorization of |v| by trial division up to `bound`, then a probabilistic
/// primality test on the remaining cofactor. 0 and 1 have no factors.
inline std::vector<PrimePower> factorize(mpz_class v, unsigned long bound = 1'000'000) {
  std::vector<PrimePower> out;
  if (v < 0) v = -v;
  if (v <= 1) return out;
  auto take = [&](unsigned long p) {
    if (!mpz_divisible_ui_p(v.get_mpz_t(), p)) return;
    PrimePower pp{mpz_class(p), 0, true};
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
      ++pp.exponent;
    }
    out.push_back(pp);
  };
  take(2);
  for (unsigned long p = 3; p <= bound && v > 1; p += 2) {
    if (mpz_class(p) * p > v) break;
    take(p);
  }
  if (v > 1) {
    const bool prime = mpz_probab_prime_p(v.get_mpz_t(), 30) > 0;
    out.push_back({v, 1, prime});
  }
  return out;
}

inline std::string factorization_string(const std::vector<PrimePower>& f) {
  if (f.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k) s += " * ";
    s += f[k].prime.get_str();
    if (f[k].exponent != 1) s += "^" + std::to_string(f[k].exponent);
  }
  return s;
}

struct KaehlerReport {
  std::size_t n = 0;
  IntMatrix jacobian;
  IntMatrix form;
  mpz_class det;
  std::vector<PrimePower> factorization;
  std::size_t rank = 0;
};

inline KaehlerReport kaehler_report(const SetSystem& s, bool with_jacobian = true) {
  KaehlerReport r;
  r.n = s.size();
  if (with_jacobian) r.jacobian = jacobian_dr(s);
  r.form = kaehler_form(s);
  const BigMatrix big = to_big(r.form);
  r.det = exact_det(big);
  r.rank = rank(big);
  r.factorization = factorize(r.det);
  return r;
}

struct DivisibilityEntry {
  std::size_t n = 0;
  /// max |x| - 1.
  int dimension = 0;
  mpz_class det;
  bool divisible_by_3 = false;
  /// No element contains another, so L is diagonal and the form is the identity.
  bool exempt = false;
};

inline DivisibilityEntry divisibility_entry(const SetSystem& s) {
  DivisibilityEntry e;
  e.n = s.size();
  e.dimension = s.dimension();
  e.det = exact_det(kaehler_form(s));
  e.divisible_by_3 = mpz_divisible_ui_p(e.det.get_mpz_t(), 3) != 0;
  e.exempt = is_antichain(s);
  return e;
}

inline std::vector<DivisibilityEntry> divisibility_scan(const std::vector<SetSystem>& family) {
  std::vector<DivisibilityEntry> out;
  out.reserve(family.size());
  for (const auto& s : family) out.push_back(divisibility_entry(s));
  return out;
}

}  // namespace energized
