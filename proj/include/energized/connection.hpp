#pragma once

// Connection matrix L and Green matrix g of an energized set system (G, h).
//
//   L(x,y) = H(W^-(x) ∩ W^-(y))
//   g(x,y) = w(x) w(y) H(W^+(x) ∩ W^+(y))
//
// with H(A) = sum of h over A and w(x) = (-1)^dim(x).

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "energized/error.hpp"
#include "energized/matrix.hpp"
#include "energized/scalars.hpp"
#include "energized/setsystem.hpp"

namespace energized {

/// One value per element of the associated SetSystem, in its order.
template <class T>
using EnergyFunction = std::vector<T>;

template <class T>
struct ConnectionMatrices {
  Matrix<T> L;
  Matrix<T> g;
  /// H(W^+(x) ∩ W^+(y)) before the sign conjugation g = S L+ S.
  Matrix<T> L_plus;
  /// Diagonal of S; signs[k] = omega(x_k).
  std::vector<int> signs;
  std::vector<Simplex> order;

  std::size_t size() const noexcept { return signs.size(); }
};

template <class T>
void require_field_size(const SetSystem& s, std::span<const T> h) {
  if (h.size() != s.size())
    throw Error("energy function has " + std::to_string(h.size()) + " values but the set system has " +
                std::to_string(s.size()) + " elements");
}

/// H(A) = sum_{x in A} h(x); zero for empty A.
template <class T>
T energy_H(const SetSystem& s, std::span<const T> h, std::span<const std::size_t> refs) {
  require_field_size(s, h);
  T sum = zero<T>();
  for (std::size_t r : refs) {
    if (r >= s.size()) throw Error("element reference out of range");
    sum += h[r];
  }
  return sum;
}

/// H(G).
template <class T>
T total_energy(std::span<const T> h) {
  T sum = zero<T>();
  for (const T& v : h) sum += v;
  return sum;
}

inline std::vector<int> sign_vector(const SetSystem& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (const auto& x : s) out.push_back(omega(x));
  return out;
}

template <class T>
ConnectionMatrices<T> build(const SetSystem& s, std::span<const T> h) {
  require_field_size(s, h);
  const std::size_t n = s.size();
  ConnectionMatrices<T> cm{Matrix<T>::zeros(n, n), Matrix<T>::zeros(n, n), Matrix<T>::zeros(n, n),
                           sign_vector(s), s.elements()};
  // z lies in W^-(x) ∩ W^-(y) iff x and y both lie in the star of z, and in
  // W^+(x) ∩ W^+(y) iff x and y both lie in the core of z.
  for (std::size_t z = 0; z < n; ++z) {
    const auto up = star(s, z);
    for (std::size_t x : up)
      for (std::size_t y : up) cm.L(x, y) += h[z];
    const auto down = core(s, z);
    for (std::size_t x : down)
      for (std::size_t y : down) cm.L_plus(x, y) += h[z];
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      cm.g(x, y) = (cm.signs[x] * cm.signs[y] > 0) ? cm.L_plus(x, y) : T(-cm.L_plus(x, y));
  return cm;
}

template <class T>
ConnectionMatrices<T> build(const SetSystem& s, const EnergyFunction<T>& h) {
  return build(s, std::span<const T>(h));
}

/// sum_x omega(x) M(x,x).
template <class T>
T super_trace(const Matrix<T>& m, std::span<const int> signs) {
  if (!m.square() || m.rows() != signs.size()) throw Error("super_trace: size mismatch");
  T sum = zero<T>();
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] > 0) sum += m(k, k);
    else sum -= m(k, k);
  }
  return sum;
}

template <class T>
struct PotentialCurvature {
  /// V(x) = sum_y g(x,y)
  std::vector<T> potential;
  /// K(x) = omega(x) g(x,x)
  std::vector<T> curvature;
};

template <class T>
PotentialCurvature<T> potential_and_curvature(const ConnectionMatrices<T>& cm) {
  const std::size_t n = cm.size();
  PotentialCurvature<T> pc;
  pc.potential.reserve(n);
  pc.curvature.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    T row = zero<T>();
    for (std::size_t y = 0; y < n; ++y) row += cm.g(x, y);
    pc.potential.push_back(row);
    pc.curvature.push_back(cm.signs[x] > 0 ? cm.g(x, x) : T(-cm.g(x, x)));
  }
  return pc;
}

template <class T>
PotentialCurvature<T> potential_and_curvature(const SetSystem& s, std::span<const T> h) {
  return potential_and_curvature(build(s, h));
}

/// The map h -> (g(x_1,x_1), ..., g(x_n,x_n)).
template <class T>
std::vector<T> green_diagonal(const SetSystem& s, std::span<const T> h) {
  const auto cm = build(s, h);
  std::vector<T> out;
  out.reserve(cm.size());
  for (std::size_t k = 0; k < cm.size(); ++k) out.push_back(cm.g(k, k));
  return out;
}

// ---------------------------------------------------------------------------
// Standard fields.

template <FieldScalar T>
EnergyFunction<T> omega_field(const SetSystem& s) {
  EnergyFunction<T> h;
  h.reserve(s.size());
  for (const auto& x : s) h.push_back(scalar_traits<T>::from_int(omega(x)));
  return h;
}

template <FieldScalar T>
EnergyFunction<T> constant_field(const SetSystem& s, const T& value) {
  return EnergyFunction<T>(s.size(), value);
}

/// h(x_k) = exp(2 pi i k / n) for k = 1..n.
inline EnergyFunction<std::complex<double>> roots_of_unity(std::size_t n) {
  EnergyFunction<std::complex<double>> h;
  h.reserve(n);
  for (std::size_t k = 1; k <= n; ++k)
    h.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)));
  return h;
}

}  // namespace energized
