#pragma once

// Text formats: scalar literals, complexes in brace or JSON notation, and
// energy-function presets.
//
// Scalar literals:   1.5   2+3i   1+2i+3j+4k   o(c0,...,c7)   q(3/4+1/4i)
// Complexes:         {{1,2},{2,3}}   [[1,2],[2,3]]   {{a,b},{b,c}}
// Field presets:     omega | ones | roots[:n] | random:seed[:kind] | list:v1,v2,...

#include <gmpxx.h>

#include <array>
#include <cctype>
#include <charconv>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "energized/connection.hpp"
#include "energized/error.hpp"
#include "energized/scalars.hpp"
#include "energized/setsystem.hpp"

namespace energized {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

/// Splits on `sep` at bracket depth 0.
inline std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.emplace_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.emplace_back(trim(cur));
  return out;
}

/// Coefficients of 1, i, j, k in a sum of signed terms.
inline std::array<double, 4> parse_real_terms(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty scalar literal");
  std::array<double, 4> out{};
  std::array<bool, 4> seen{};
  std::size_t pos = 0;
  while (pos < s.size()) {
    double sign = 1.0;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("malformed scalar literal '" + s + "'");
    }
    double coef = 1.0;
    bool has_number = false;
    if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
      auto [end, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), coef);
      if (ec != std::errc{}) throw ParseError("malformed number in '" + s + "'");
      pos = static_cast<std::size_t>(end - s.data());
      has_number = true;
    }
    std::size_t unit = 0;
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) {
      unit = s[pos] == 'i' ? 1 : s[pos] == 'j' ? 2 : 3;
      ++pos;
    } else if (!has_number) {
      throw ParseError("malformed scalar literal '" + s + "'");
    }
    if (seen[unit]) throw ParseError("repeated component in '" + s + "'");
    seen[unit] = true;
    out[unit] = sign * coef;
  }
  return out;
}

inline mpq_class parse_rational(std::string_view tok) {
  if (tok.empty()) return 1;
  for (char c : tok)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/')
      throw ParseError("malformed rational '" + std::string(tok) + "'");
  mpq_class q;
  if (q.set_str(std::string(tok), 10) != 0) throw ParseError("malformed rational '" + std::string(tok) + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(tok) + "'");
  q.canonicalize();
  return q;
}

inline GaussianRational parse_gaussian_terms(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty scalar literal");
  mpq_class re = 0, im = 0;
  bool seen_re = false, seen_im = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("malformed Gaussian rational '" + s + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/')) ++end;
    const std::string_view tok(s.data() + pos, end - pos);
    pos = end;
    const bool imag = pos < s.size() && s[pos] == 'i';
    if (imag) ++pos;
    if (tok.empty() && !imag) throw ParseError("malformed Gaussian rational '" + s + "'");
    mpq_class v = parse_rational(tok);
    if (sign < 0) v = -v;
    bool& seen = imag ? seen_im : seen_re;
    if (seen) throw ParseError("repeated component in '" + s + "'");
    seen = true;
    (imag ? im : re) = v;
  }
  return {re, im};
}

inline std::string_view unwrap(std::string_view s, std::string_view head) {
  if (s.size() < head.size() + 2 || s.substr(0, head.size()) != head || s[head.size()] != '(' || s.back() != ')')
    return {};
  return s.substr(head.size() + 1, s.size() - head.size() - 2);
}

}  // namespace detail

/// Parses a literal as a value of kind T. Lower kinds embed into higher
/// ones (a complex literal is a valid quaternion), never the reverse.
template <FieldScalar T>
T parse_scalar(std::string_view text) {
  const std::string_view s = detail::trim(text);
  if constexpr (std::is_same_v<T, GaussianRational>) {
    std::string_view inner = detail::unwrap(s, "q");
    return detail::parse_gaussian_terms(inner.empty() ? s : inner);
  } else if constexpr (std::is_same_v<T, Octonion>) {
    const std::string_view inner = detail::unwrap(s, "o");
    if (inner.empty()) {
      const auto q = detail::parse_real_terms(s);
      return Octonion(Quaternion(q[0], q[1], q[2], q[3]), Quaternion());
    }
    const auto parts = detail::split_top(inner, ',');
    if (parts.size() != 8) throw ParseError("octonion literal needs 8 components: '" + std::string(s) + "'");
    std::array<double, 8> c{};
    for (std::size_t k = 0; k < 8; ++k) {
      const auto t = detail::parse_real_terms(parts[k]);
      if (t[1] != 0 || t[2] != 0 || t[3] != 0) throw ParseError("octonion components must be real");
      c[k] = t[0];
    }
    return Octonion(c);
  } else {
    const auto t = detail::parse_real_terms(s);
    if constexpr (std::is_same_v<T, double>) {
      if (t[1] != 0 || t[2] != 0 || t[3] != 0) throw ParseError("'" + std::string(s) + "' is not a real number");
      return t[0];
    } else if constexpr (std::is_same_v<T, std::complex<double>>) {
      if (t[2] != 0 || t[3] != 0) throw ParseError("'" + std::string(s) + "' is not a complex number");
      return {t[0], t[1]};
    } else {
      return Quaternion(t[0], t[1], t[2], t[3]);
    }
  }
}

inline Scalar parse_scalar(std::string_view text, ScalarKind kind) {
  switch (kind) {
    case ScalarKind::Real: return parse_scalar<double>(text);
    case ScalarKind::Complex: return parse_scalar<std::complex<double>>(text);
    case ScalarKind::Quaternion: return parse_scalar<Quaternion>(text);
    case ScalarKind::Octonion: return parse_scalar<Octonion>(text);
    case ScalarKind::GaussianRational: return parse_scalar<GaussianRational>(text);
  }
  throw ParseError("unknown scalar kind");
}

// ---------------------------------------------------------------------------
// Set systems.

struct ParsedSystem {
  std::vector<Simplex> sets;
  /// Original vertex labels; labels[v - 1] names vertex v. Empty when the
  /// input already used positive integers.
  std::vector<std::string> labels;
};

/// Accepts `{{1,2},{2,3}}` or `[[1,2],[2,3]]`. Non-numeric labels are
/// numbered 1, 2, ... in order of first appearance.
inline ParsedSystem parse_sets(std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  if (s.size() < 2 || !((s.front() == '{' && s.back() == '}') || (s.front() == '[' && s.back() == ']')))
    throw ParseError("a set system must be written as {{...},...} or [[...],...]");
  const std::string_view body(s.data() + 1, s.size() - 2);
  std::vector<std::vector<std::string>> raw;
  if (!body.empty()) {
    for (const auto& part : detail::split_top(body, ',')) {
      if (part.size() < 2 || !((part.front() == '{' && part.back() == '}') || (part.front() == '[' && part.back() == ']')))
        throw ParseError("malformed set '" + part + "'");
      const std::string_view inner(part.data() + 1, part.size() - 2);
      if (inner.empty()) throw ParseError("empty set in input");
      std::vector<std::string> items;
      for (auto& tok : detail::split_top(inner, ',')) {
        if (tok.size() >= 2 && tok.front() == '"' && tok.back() == '"') tok = tok.substr(1, tok.size() - 2);
        if (tok.empty()) throw ParseError("empty vertex label in '" + part + "'");
        if (tok.find_first_of("{}[]()") != std::string::npos) throw ParseError("nested set in '" + part + "'");
        items.push_back(tok);
      }
      raw.push_back(std::move(items));
    }
  }
  bool numeric = true;
  for (const auto& set : raw)
    for (const auto& tok : set) {
      long v = 0;
      auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || end != tok.data() + tok.size() || v <= 0 || v > 1'000'000'000) numeric = false;
    }
  ParsedSystem out;
  std::map<std::string, int> ids;
  for (const auto& set : raw) {
    Simplex x;
    for (const auto& tok : set) {
      if (numeric) {
        x.push_back(std::stoi(tok));
      } else {
        auto [it, fresh] = ids.emplace(tok, static_cast<int>(ids.size()) + 1);
        if (fresh) out.labels.push_back(tok);
        x.push_back(it->second);
      }
    }
    out.sets.push_back(std::move(x));
  }
  return out;
}

/// As-given set system, or its downward closure when `close` is set.
inline SetSystem parse_set_system(std::string_view text, bool close = false) {
  auto parsed = parse_sets(text);
  if (parsed.sets.empty()) throw ParseError("empty set system");
  return close ? generate(parsed.sets) : SetSystem(std::move(parsed.sets));
}

// ---------------------------------------------------------------------------
// Energy-function presets.

struct FieldPreset {
  enum class Kind { Omega, Ones, Roots, Random, List };
  Kind kind = Kind::Omega;
  /// Roots: n (0 means |G|). Random: seed.
  std::uint64_t param = 0;
  std::vector<std::string> values;
  /// Scalar kind named by `random:seed:kind`, if any.
  std::optional<ScalarKind> scalar_kind;
};

inline FieldPreset parse_preset(std::string_view text) {
  const std::string_view s = detail::trim(text);
  FieldPreset p;
  auto number = [&](std::string_view tok) {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || end != tok.data() + tok.size()) throw ParseError("bad number in preset '" + std::string(s) + "'");
    return v;
  };
  if (s == "omega") {
    p.kind = FieldPreset::Kind::Omega;
  } else if (s == "ones") {
    p.kind = FieldPreset::Kind::Ones;
  } else if (s == "roots" || s.starts_with("roots:")) {
    p.kind = FieldPreset::Kind::Roots;
    if (s.size() > 6) p.param = number(s.substr(6));
    if (s.size() > 5 && p.param == 0) throw ParseError("roots:n needs n >= 1");
  } else if (s.starts_with("random:")) {
    p.kind = FieldPreset::Kind::Random;
    const std::string_view rest = s.substr(7);
    const auto colon = rest.find(':');
    p.param = number(rest.substr(0, colon));
    if (colon != std::string_view::npos) p.scalar_kind = parse_kind(rest.substr(colon + 1));
  } else if (s.starts_with("list:")) {
    p.kind = FieldPreset::Kind::List;
    p.values = detail::split_top(s.substr(5), ',');
  } else {
    throw ParseError("unknown field preset '" + std::string(s) + "' (omega | ones | roots:n | random:seed | list:...)");
  }
  return p;
}

}  // namespace energized
