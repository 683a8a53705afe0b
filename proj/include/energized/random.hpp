#pragma once

// Seeded random complexes and fields. The generator is std::mt19937_64,
// whose output sequence is fixed by the standard; every draw below is
// derived from raw 64-bit outputs by integer arithmetic, so results are
// identical across platforms and standard libraries.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "energized/connection.hpp"
#include "energized/error.hpp"
#include "energized/scalars.hpp"
#include "energized/setsystem.hpp"

namespace energized {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] (modulo reduction; the bias is below 2^-50).
  long integer(long lo, long hi) {
    if (hi < lo) throw Error("Rng::integer: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

struct ComplexShape {
  int max_generators = 5;
  int max_vertices = 8;
  int max_generator_size = 4;
  int min_generator_size = 1;
};

/// Downward closure of 1..max_generators random nonempty vertex sets.
inline SetSystem random_complex(Rng& rng, const ComplexShape& shape = {}) {
  const int vertices = static_cast<int>(rng.integer(1, shape.max_vertices));
  const int gens = static_cast<int>(rng.integer(1, shape.max_generators));
  std::vector<Simplex> out;
  for (int g = 0; g < gens; ++g) {
    const int hi = std::min(shape.max_generator_size, vertices);
    const int lo = std::min(shape.min_generator_size, hi);
    const int size = static_cast<int>(rng.integer(lo, hi));
    std::vector<int> pool(static_cast<std::size_t>(vertices));
    for (int v = 0; v < vertices; ++v) pool[static_cast<std::size_t>(v)] = v + 1;
    Simplex x;
    for (int k = 0; k < size; ++k) {
      const auto pick = static_cast<std::size_t>(rng.integer(k, vertices - 1));
      std::swap(pool[static_cast<std::size_t>(k)], pool[pick]);
      x.push_back(pool[static_cast<std::size_t>(k)]);
    }
    out.push_back(std::move(x));
  }
  return generate(out);
}

/// A complex with at least one edge.
inline SetSystem random_positive_dimensional_complex(Rng& rng, ComplexShape shape = {}) {
  shape.max_vertices = std::max(shape.max_vertices, 2);
  for (;;) {
    SetSystem s = random_complex(rng, shape);
    if (s.dimension() >= 1) return s;
  }
}

/// Distinct random nonempty subsets of {1..max_vertices}, not closed under subsets.
inline SetSystem random_set_system(Rng& rng, int max_sets = 6, int max_vertices = 5) {
  const int count = static_cast<int>(rng.integer(1, max_sets));
  std::set<Simplex> seen;
  std::vector<Simplex> out;
  for (int attempt = 0; static_cast<int>(out.size()) < count && attempt < 100 * count; ++attempt) {
    Simplex x;
    for (int v = 1; v <= max_vertices; ++v)
      if (rng.coin()) x.push_back(v);
    if (x.empty() || !seen.insert(x).second) continue;
    out.push_back(std::move(x));
  }
  return SetSystem(std::move(out));
}

// ---------------------------------------------------------------------------
// Random scalars.

namespace detail {
inline mpq_class small_rational(Rng& rng) {
  return mpq_class(rng.integer(-4, 4), static_cast<unsigned long>(rng.integer(1, 4)));
}
}  // namespace detail

/// Components uniform in [-1, 1] (small rationals for Q[i]).
template <FieldScalar T>
T random_scalar(Rng& rng) {
  if constexpr (std::is_same_v<T, double>) {
    return rng.uniform(-1, 1);
  } else if constexpr (std::is_same_v<T, std::complex<double>>) {
    const double re = rng.uniform(-1, 1);
    return {re, rng.uniform(-1, 1)};
  } else if constexpr (std::is_same_v<T, Quaternion>) {
    Quaternion q;
    q.w = rng.uniform(-1, 1);
    q.x = rng.uniform(-1, 1);
    q.y = rng.uniform(-1, 1);
    q.z = rng.uniform(-1, 1);
    return q;
  } else if constexpr (std::is_same_v<T, Octonion>) {
    Octonion o;
    for (auto& c : o.c) c = rng.uniform(-1, 1);
    return o;
  } else {
    mpq_class re = detail::small_rational(rng);
    return {re, detail::small_rational(rng)};
  }
}

/// Random scalar with |a| >= min_norm.
template <FieldScalar T>
T random_nonzero(Rng& rng, double min_norm = 0.1) {
  for (;;) {
    T a = random_scalar<T>(rng);
    if (magnitude(a) >= min_norm) return a;
  }
}

/// Random scalar with |a| = 1 (exactly for Q[i], using Pythagorean triples).
template <FieldScalar T>
T random_unit(Rng& rng) {
  if constexpr (std::is_same_v<T, double>) {
    return rng.coin() ? 1.0 : -1.0;
  } else if constexpr (std::is_same_v<T, std::complex<double>>) {
    return std::polar(1.0, rng.uniform(0, 2 * std::numbers::pi));
  } else if constexpr (std::is_same_v<T, GaussianRational>) {
    static constexpr long triples[][3] = {{1, 0, 1}, {3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}};
    const auto& t = triples[rng.integer(0, 4)];
    const long sa = rng.coin() ? 1 : -1, sb = rng.coin() ? 1 : -1;
    mpq_class a(sa * t[0], static_cast<unsigned long>(t[2])), b(sb * t[1], static_cast<unsigned long>(t[2]));
    if (rng.coin()) std::swap(a, b);
    return {a, b};
  } else {
    const T a = random_nonzero<T>(rng, 0.1);
    return (1.0 / magnitude(a)) * a;
  }
}

template <FieldScalar T>
EnergyFunction<T> random_field(Rng& rng, std::size_t n, double min_norm = 0.1) {
  EnergyFunction<T> h;
  h.reserve(n);
  for (std::size_t k = 0; k < n; ++k) h.push_back(random_nonzero<T>(rng, min_norm));
  return h;
}

template <FieldScalar T>
EnergyFunction<T> random_unit_field(Rng& rng, std::size_t n) {
  EnergyFunction<T> h;
  h.reserve(n);
  for (std::size_t k = 0; k < n; ++k) h.push_back(random_unit<T>(rng));
  return h;
}

}  // namespace energized
