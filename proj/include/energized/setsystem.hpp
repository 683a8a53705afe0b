#pragma once

// Finite sets of nonempty finite sets of positive integers.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "energized/error.hpp"

namespace energized {

/// A set of vertices, kept sorted and duplicate free.
using Simplex = std::vector<int>;

inline bool is_subset(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// (cardinality, lexicographic) order.
inline bool canonical_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline std::string to_string(const Simplex& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(s[k]);
  }
  return out + "}";
}

/// (-1)^{dim x} with dim x = |x| - 1.
inline int omega(const Simplex& x) {
  if (x.empty()) throw Error("omega of the empty set");
  return (x.size() % 2 == 1) ? 1 : -1;
}

class SetSystem {
 public:
  SetSystem() = default;

  /// Keeps the given order. Each set is normalised (sorted, deduplicated);
  /// empty sets, non-positive vertices and repeated sets are rejected.
  explicit SetSystem(std::vector<Simplex> elements) : elements_(std::move(elements)) {
    std::set<Simplex> seen;
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      Simplex& x = elements_[k];
      if (x.empty()) throw Error("set system element " + std::to_string(k) + " is empty");
      std::sort(x.begin(), x.end());
      x.erase(std::unique(x.begin(), x.end()), x.end());
      if (x.front() <= 0) throw Error("vertices must be positive integers (element " + std::to_string(k) + ")");
      if (!seen.insert(x).second) throw Error("duplicate element " + energized::to_string(x));
      vertex_union_.insert(x.begin(), x.end());
    }
  }

  static SetSystem canonical(std::vector<Simplex> elements) {
    return SetSystem(std::move(elements)).canonically_ordered();
  }

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const Simplex& operator[](std::size_t k) const { return elements_.at(k); }
  const std::vector<Simplex>& elements() const noexcept { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  Simplex vertex_union() const { return {vertex_union_.begin(), vertex_union_.end()}; }

  std::optional<std::size_t> index_of(Simplex x) const {
    std::sort(x.begin(), x.end());
    auto it = std::find(elements_.begin(), elements_.end(), x);
    if (it == elements_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }

  /// Element k of the result is element order[k] of this system.
  SetSystem reordered(std::span<const std::size_t> order) const {
    if (order.size() != size()) throw Error("reorder: permutation has wrong length");
    std::vector<bool> used(size(), false);
    std::vector<Simplex> out;
    out.reserve(size());
    for (std::size_t k : order) {
      if (k >= size() || used[k]) throw Error("reorder: not a permutation");
      used[k] = true;
      out.push_back(elements_[k]);
    }
    return SetSystem(std::move(out));
  }

  /// Permutation that sorts the elements ascending (or descending) by
  /// (cardinality, lex).
  std::vector<std::size_t> canonical_permutation(bool descending = false) const {
    std::vector<std::size_t> p(size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = k;
    std::stable_sort(p.begin(), p.end(), [&](std::size_t a, std::size_t b) {
      return descending ? canonical_less(elements_[b], elements_[a]) : canonical_less(elements_[a], elements_[b]);
    });
    return p;
  }

  SetSystem canonically_ordered() const { return reordered(canonical_permutation(false)); }
  SetSystem descending_ordered() const { return reordered(canonical_permutation(true)); }

  bool is_canonically_ordered() const {
    return std::is_sorted(elements_.begin(), elements_.end(), canonical_less);
  }

  /// max |x| - 1 (or -1 when empty).
  int dimension() const {
    int d = -1;
    for (const auto& x : elements_) d = std::max(d, static_cast<int>(x.size()) - 1);
    return d;
  }

  friend bool operator==(const SetSystem& a, const SetSystem& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<Simplex> elements_;
  std::set<int> vertex_union_;
};

/// Downward closure of the generators, canonically ordered.
inline SetSystem generate(const std::vector<Simplex>& generators) {
  std::set<Simplex> all;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    Simplex x = generators[g];
    if (x.empty()) throw Error("generator " + std::to_string(g) + " is empty");
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    if (x.size() > 30) throw Error("generator " + std::to_string(g) + " is too large to close");
    const std::size_t m = x.size();
    for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
      Simplex sub;
      for (std::size_t b = 0; b < m; ++b)
        if (mask & (1UL << b)) sub.push_back(x[b]);
      all.insert(std::move(sub));
    }
  }
  return SetSystem::canonical({all.begin(), all.end()});
}

/// True iff every nonempty subset of every element is an element.
inline bool is_simplicial_complex(const SetSystem& s) {
  std::set<Simplex> members(s.begin(), s.end());
  // Closure under removing single vertices implies closure under all subsets.
  for (const auto& x : s) {
    if (x.size() == 1) continue;
    for (std::size_t drop = 0; drop < x.size(); ++drop) {
      Simplex face;
      face.reserve(x.size() - 1);
      for (std::size_t b = 0; b < x.size(); ++b)
        if (b != drop) face.push_back(x[b]);
      if (!members.count(face)) return false;
    }
  }
  return true;
}

/// W^-(x): all y in G with y a subset of x (x included).
inline std::vector<std::size_t> core(const SetSystem& s, std::size_t x) {
  std::vector<std::size_t> out;
  const Simplex& sx = s[x];
  for (std::size_t y = 0; y < s.size(); ++y)
    if (is_subset(s[y], sx)) out.push_back(y);
  return out;
}

/// W^+(x): all y in G with x a subset of y (x included).
inline std::vector<std::size_t> star(const SetSystem& s, std::size_t x) {
  std::vector<std::size_t> out;
  const Simplex& sx = s[x];
  for (std::size_t y = 0; y < s.size(); ++y)
    if (is_subset(sx, s[y])) out.push_back(y);
  return out;
}

/// Replaces each x by (union of G) \ x, keeping the order. Under this map
/// stars and cores trade places.
inline SetSystem complement_dual(const SetSystem& s) {
  const Simplex u = s.vertex_union();
  std::vector<Simplex> out;
  out.reserve(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    Simplex c;
    std::set_difference(u.begin(), u.end(), s[k].begin(), s[k].end(), std::back_inserter(c));
    if (c.empty())
      throw Error("complement of element " + std::to_string(k) + " " + to_string(s[k]) + " is empty");
    out.push_back(std::move(c));
  }
  return SetSystem(std::move(out));
}

/// True iff no element strictly contains another (L is then diagonal).
inline bool is_antichain(const SetSystem& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (a != b && is_subset(s[a], s[b])) return false;
  return true;
}

}  // namespace energized
