#pragma once

#include <complex>
#include <string>

#include "energized/connection.hpp"
#include "energized/error.hpp"
#include "energized/parse.hpp"
#include "energized/random.hpp"
#include "energized/setsystem.hpp"

namespace energized {

/// Energy function of kind T on s described by a preset.
template <FieldScalar T>
EnergyFunction<T> make_field(const FieldPreset& p, const SetSystem& s) {
  const std::size_t n = s.size();
  switch (p.kind) {
    case FieldPreset::Kind::Omega: return omega_field<T>(s);
    case FieldPreset::Kind::Ones: return constant_field<T>(s, one<T>());
    case FieldPreset::Kind::Roots:
      if constexpr (std::is_same_v<T, std::complex<double>>) {
        const std::size_t m = p.param ? static_cast<std::size_t>(p.param) : n;
        if (m != n)
          throw Error("roots:" + std::to_string(m) + " gives " + std::to_string(m) + " values but the set system has " +
                      std::to_string(n) + " elements");
        return roots_of_unity(m);
      } else {
        throw Error("the roots preset requires --kind complex");
      }
    case FieldPreset::Kind::Random: {
      if (p.scalar_kind && *p.scalar_kind != scalar_traits<T>::kind)
        throw Error("random preset names kind " + std::string(kind_name(*p.scalar_kind)) + " but the run uses " +
                    std::string(kind_name(scalar_traits<T>::kind)));
      Rng rng(p.param);
      return random_field<T>(rng, n);
    }
    case FieldPreset::Kind::List: {
      if (p.values.size() != n)
        throw Error("field list has " + std::to_string(p.values.size()) + " values but the set system has " +
                    std::to_string(n) + " elements");
      EnergyFunction<T> h;
      h.reserve(n);
      for (const auto& v : p.values) h.push_back(parse_scalar<T>(v));
      return h;
    }
  }
  throw Error("unknown field preset");
}

template <FieldScalar T>
EnergyFunction<T> make_field(std::string_view preset, const SetSystem& s) {
  return make_field<T>(parse_preset(preset), s);
}

}  // namespace energized
