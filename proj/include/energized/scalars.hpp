#pragma once

// The scalar tower used for field values: R, C, H, O and exact Q[i].
//
// All algorithms in the library are templates over one of
//   double                  (Real)
//   std::complex<double>    (Complex)
//   Quaternion              (Quaternion)
//   Octonion                (Octonion)
//   GaussianRational        (GaussianRational, exact)
// and reach kind-specific behaviour through scalar_traits<T>.

#include <gmpxx.h>

#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "energized/error.hpp"

namespace energized {

enum class ScalarKind { Real, Complex, Quaternion, Octonion, GaussianRational };

inline std::string_view kind_name(ScalarKind k) {
  switch (k) {
    case ScalarKind::Real: return "real";
    case ScalarKind::Complex: return "complex";
    case ScalarKind::Quaternion: return "quaternion";
    case ScalarKind::Octonion: return "octonion";
    case ScalarKind::GaussianRational: return "gaussian";
  }
  return "?";
}

inline ScalarKind parse_kind(std::string_view s) {
  if (s == "real" || s == "R") return ScalarKind::Real;
  if (s == "complex" || s == "C") return ScalarKind::Complex;
  if (s == "quaternion" || s == "H") return ScalarKind::Quaternion;
  if (s == "octonion" || s == "O") return ScalarKind::Octonion;
  if (s == "gaussian" || s == "Q[i]" || s == "gaussian-rational") return ScalarKind::GaussianRational;
  throw ParseError("unknown scalar kind '" + std::string(s) + "'");
}

namespace detail {
inline std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) return std::to_string(v);
  return std::string(buf, end);
}

// Appends "+3i" / "-2.5j" style terms.
inline void append_term(std::string& out, double v, std::string_view unit) {
  if (v == 0.0) return;
  if (!out.empty()) out += (v < 0 || std::signbit(v)) ? "-" : "+";
  else if (v < 0) out += "-";
  out += format_double(std::fabs(v));
  out += unit;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Quaternions, basis 1, i, j, k with i^2 = j^2 = k^2 = ijk = -1.

class Quaternion {
 public:
  double w = 0, x = 0, y = 0, z = 0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0, double y_ = 0, double z_ = 0)  // NOLINT
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr std::array<double, 4> components() const { return {w, x, y, z}; }

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend constexpr Quaternion operator*(double s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
  }
  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

// ---------------------------------------------------------------------------
// Octonions by Cayley-Dickson doubling of the quaternions:
//   (a, b)(c, d) = (a c - d* b,  d a + b c*)
// with e0..e3 = (1,0), (i,0), (j,0), (k,0) and e4..e7 = (0,1), (0,i), (0,j), (0,k).
// Under this table e1 e2 = e3, e1 e4 = e5, e2 e4 = e6, e3 e4 = e7.

class Octonion {
 public:
  std::array<double, 8> c{};

  constexpr Octonion() = default;
  constexpr Octonion(double re) { c[0] = re; }  // NOLINT
  constexpr explicit Octonion(const std::array<double, 8>& comps) : c(comps) {}
  constexpr Octonion(const Quaternion& a, const Quaternion& b)
      : c{a.w, a.x, a.y, a.z, b.w, b.x, b.y, b.z} {}

  static constexpr Octonion unit(int idx) {
    Octonion o;
    o.c[static_cast<std::size_t>(idx)] = 1.0;
    return o;
  }

  constexpr Quaternion first() const { return {c[0], c[1], c[2], c[3]}; }
  constexpr Quaternion second() const { return {c[4], c[5], c[6], c[7]}; }

  constexpr Octonion conj() const {
    Octonion o;
    o.c[0] = c[0];
    for (std::size_t k = 1; k < 8; ++k) o.c[k] = -c[k];
    return o;
  }
  constexpr double norm_sq() const {
    double s = 0;
    for (double v : c) s += v * v;
    return s;
  }

  constexpr Octonion operator-() const {
    Octonion o;
    for (std::size_t k = 0; k < 8; ++k) o.c[k] = -c[k];
    return o;
  }
  constexpr Octonion& operator+=(const Octonion& o) {
    for (std::size_t k = 0; k < 8; ++k) c[k] += o.c[k];
    return *this;
  }
  constexpr Octonion& operator-=(const Octonion& o) {
    for (std::size_t k = 0; k < 8; ++k) c[k] -= o.c[k];
    return *this;
  }
  friend constexpr Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend constexpr Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend constexpr Octonion operator*(const Octonion& l, const Octonion& r) {
    const Quaternion a = l.first(), b = l.second(), cc = r.first(), d = r.second();
    return {a * cc - d.conj() * b, d * a + b * cc.conj()};
  }
  friend constexpr Octonion operator*(double s, Octonion o) {
    for (double& v : o.c) v *= s;
    return o;
  }
  friend constexpr bool operator==(const Octonion&, const Octonion&) = default;
};

// ---------------------------------------------------------------------------
// Exact Gaussian rationals a + b i with a, b in Q (always in lowest terms).

class GaussianRational {
 public:
  mpq_class re{0}, im{0};

  GaussianRational() = default;
  GaussianRational(long v) : re(v) {}  // NOLINT
  GaussianRational(int v) : re(v) {}   // NOLINT
  GaussianRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {  // NOLINT
    re.canonicalize();
    im.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  GaussianRational conj() const { return {re, -im}; }
  mpq_class norm_sq() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {mpq_class(a.re * b.re - a.im * b.im), mpq_class(a.re * b.im + a.im * b.re)};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::string str() const {
    if (im == 0) return re.get_str();
    std::string out;
    if (re != 0) out = re.get_str();
    if (im < 0) out += "-";
    else if (!out.empty()) out += "+";
    out += mpq_class(abs(im)).get_str();
    out += "i";
    return out;
  }
};

// ---------------------------------------------------------------------------
// Traits.

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr ScalarKind kind = ScalarKind::Real;
  static constexpr bool exact = false;
  static constexpr bool associative = true;
  static constexpr bool has_abelianization = true;
  using norm_type = double;
  using abelian_type = double;

  static double from_int(long v) { return static_cast<double>(v); }
  static double conj(double a) { return a; }
  static double norm_sq(double a) { return a * a; }
  static abelian_type abelianize(double a) { return a; }
  static std::string str(double a) { return detail::format_double(a); }
};

template <>
struct scalar_traits<std::complex<double>> {
  using C = std::complex<double>;
  static constexpr ScalarKind kind = ScalarKind::Complex;
  static constexpr bool exact = false;
  static constexpr bool associative = true;
  static constexpr bool has_abelianization = true;
  using norm_type = double;
  using abelian_type = C;

  static C from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static C conj(const C& a) { return std::conj(a); }
  static double norm_sq(const C& a) { return std::norm(a); }
  static abelian_type abelianize(const C& a) { return a; }
  static std::string str(const C& a) {
    std::string out;
    detail::append_term(out, a.real(), "");
    detail::append_term(out, a.imag(), "i");
    return out.empty() ? "0" : out;
  }
};

/// H* modulo its commutator subgroup is the positive reals: every unit
/// quaternion is a commutator, so the coset of a is represented by |a|.
template <>
struct scalar_traits<Quaternion> {
  static constexpr ScalarKind kind = ScalarKind::Quaternion;
  static constexpr bool exact = false;
  static constexpr bool associative = true;
  static constexpr bool has_abelianization = true;
  using norm_type = double;
  using abelian_type = double;

  static Quaternion from_int(long v) { return {static_cast<double>(v)}; }
  static Quaternion conj(const Quaternion& a) { return a.conj(); }
  static double norm_sq(const Quaternion& a) { return a.norm_sq(); }
  static abelian_type abelianize(const Quaternion& a) { return std::sqrt(a.norm_sq()); }
  static std::string str(const Quaternion& a) {
    std::string out;
    detail::append_term(out, a.w, "");
    detail::append_term(out, a.x, "i");
    detail::append_term(out, a.y, "j");
    detail::append_term(out, a.z, "k");
    return out.empty() ? "0" : out;
  }
};

template <>
struct scalar_traits<Octonion> {
  static constexpr ScalarKind kind = ScalarKind::Octonion;
  static constexpr bool exact = false;
  static constexpr bool associative = false;
  static constexpr bool has_abelianization = false;
  using norm_type = double;
  using abelian_type = std::monostate;

  static Octonion from_int(long v) { return {static_cast<double>(v)}; }
  static Octonion conj(const Octonion& a) { return a.conj(); }
  static double norm_sq(const Octonion& a) { return a.norm_sq(); }
  [[noreturn]] static abelian_type abelianize(const Octonion&) {
    throw Unsupported("abelianization is not defined for octonions; use the Study determinant");
  }
  static std::string str(const Octonion& a) {
    std::string out = "o(";
    for (std::size_t k = 0; k < 8; ++k) {
      if (k) out += ",";
      out += detail::format_double(a.c[k]);
    }
    return out + ")";
  }
};

template <>
struct scalar_traits<GaussianRational> {
  static constexpr ScalarKind kind = ScalarKind::GaussianRational;
  static constexpr bool exact = true;
  static constexpr bool associative = true;
  static constexpr bool has_abelianization = true;
  using norm_type = mpq_class;
  using abelian_type = GaussianRational;

  static GaussianRational from_int(long v) { return {v}; }
  static GaussianRational conj(const GaussianRational& a) { return a.conj(); }
  static mpq_class norm_sq(const GaussianRational& a) { return a.norm_sq(); }
  static abelian_type abelianize(const GaussianRational& a) { return a; }
  static std::string str(const GaussianRational& a) { return a.str(); }
};

template <class T>
using norm_t = typename scalar_traits<T>::norm_type;
template <class T>
using abelian_t = typename scalar_traits<T>::abelian_type;

template <class T>
concept FieldScalar = requires { scalar_traits<T>::kind; };

// ---------------------------------------------------------------------------
// Free functions.

template <FieldScalar T>
T zero() {
  return scalar_traits<T>::from_int(0);
}
template <FieldScalar T>
T one() {
  return scalar_traits<T>::from_int(1);
}

template <FieldScalar T>
T conjugate(const T& a) {
  return scalar_traits<T>::conj(a);
}

template <FieldScalar T>
norm_t<T> norm_sq(const T& a) {
  return scalar_traits<T>::norm_sq(a);
}

inline double to_double(double v) { return v; }
inline double to_double(const mpq_class& v) { return v.get_d(); }

/// |a| as a double (approximate for exact kinds).
template <FieldScalar T>
double magnitude(const T& a) {
  return std::sqrt(to_double(norm_sq(a)));
}

template <FieldScalar T>
bool is_zero(const T& a) {
  return norm_sq(a) == 0;
}

/// a^{-1} = a* / |a|^2.
template <FieldScalar T>
T invert(const T& a) {
  const auto n = norm_sq(a);
  if (n == 0) throw Error("cannot invert zero");
  if constexpr (std::is_same_v<T, double>) {
    return 1.0 / a;
  } else if constexpr (std::is_same_v<T, std::complex<double>>) {
    return 1.0 / a;
  } else if constexpr (std::is_same_v<T, GaussianRational>) {
    const GaussianRational c = a.conj();
    return {mpq_class(c.re / n), mpq_class(c.im / n)};
  } else {
    return (1.0 / n) * conjugate(a);
  }
}

template <FieldScalar T>
abelian_t<T> abelianize(const T& a) {
  return scalar_traits<T>::abelianize(a);
}

/// |a|^2 == 1 within tol (exactly for Q[i]).
template <FieldScalar T>
bool is_unit(const T& a, double tol = 1e-9) {
  if constexpr (scalar_traits<T>::exact) {
    return norm_sq(a) == 1;
  } else {
    return std::fabs(norm_sq(a) - 1.0) <= tol;
  }
}

/// a(b(c(...))) for non-associative kinds; ordinary product otherwise.
template <FieldScalar T, class... Rest>
T multiply_right(const T& a, const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return a;
  } else {
    return a * multiply_right(rest...);
  }
}

template <FieldScalar T>
std::string to_string(const T& a) {
  return scalar_traits<T>::str(a);
}

inline std::string to_string(const mpq_class& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// A type-erased scalar for CLI and configuration values.

using Scalar = std::variant<double, std::complex<double>, Quaternion, Octonion, GaussianRational>;

inline ScalarKind kind_of(const Scalar& s) {
  return std::visit([](const auto& v) { return scalar_traits<std::decay_t<decltype(v)>>::kind; }, s);
}

inline std::string to_string(const Scalar& s) {
  return std::visit([](const auto& v) { return to_string(v); }, s);
}

inline Scalar conjugate(const Scalar& s) {
  return std::visit([](const auto& v) -> Scalar { return conjugate(v); }, s);
}

inline Scalar invert(const Scalar& s) {
  return std::visit([](const auto& v) -> Scalar { return invert(v); }, s);
}

inline Scalar multiply(const Scalar& a, const Scalar& b) {
  if (a.index() != b.index()) {
    throw Error("scalar kind mismatch: " + std::string(kind_name(kind_of(a))) + " * " +
                std::string(kind_name(kind_of(b))));
  }
  return std::visit(
      [&b](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        return x * std::get<T>(b);
      },
      a);
}

}  // namespace energized
