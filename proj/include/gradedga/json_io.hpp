#pragma once

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <string>

#include "gradedga/multivector.hpp"

namespace gradedga {

using Json = nlohmann::ordered_json;

inline Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

inline Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw Error(ErrorCode::InvalidArgument, "complex value must be [re, im]");
}

/// {"algebra": [p,q,r], "coeffs": {"1": [re,im], "e12": [re,im], ...}},
/// nonzero coefficients only, in blade-mask order.
inline Json to_json(const Multivector& x) {
  const Algebra& alg = x.algebra();
  Json coeffs = Json::object();
  for (std::size_t m = 0; m < x.size(); ++m) {
    const Complex c = x[static_cast<BladeMask>(m)];
    if (c != Complex{}) coeffs[alg.blade_name(static_cast<BladeMask>(m))] = complex_to_json(c);
  }
  return Json{{"algebra", Json::array({alg.p(), alg.q(), alg.r()})}, {"coeffs", std::move(coeffs)}};
}

inline AlgebraPtr algebra_from_json(const Json& j) {
  if (!j.is_array() || j.size() < 2 || j.size() > 3) {
    throw Error(ErrorCode::InvalidArgument, "algebra must be [p, q, r]");
  }
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorCode::InvalidArgument, "algebra must be [p, q, r]");
  }
  return make_algebra(j[0].get<int>(), j[1].get<int>(), j.size() == 3 ? j[2].get<int>() : 0);
}

/// Reads the multivector format. When `expected` is given it is used if the
/// document carries no algebra, and must match it otherwise.
inline Multivector multivector_from_json(const Json& j, const AlgebraPtr& expected = nullptr) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object()) {
    throw Error(ErrorCode::InvalidArgument, "multivector needs a \"coeffs\" object");
  }
  AlgebraPtr alg = expected;
  if (j.contains("algebra")) {
    AlgebraPtr declared = algebra_from_json(j["algebra"]);
    if (expected && !(*expected == *declared)) {
      throw Error(ErrorCode::AlgebraMismatch, "input algebra differs from --algebra");
    }
    alg = std::move(declared);
  }
  if (!alg) throw Error(ErrorCode::InvalidArgument, "no algebra given");
  Multivector x(alg);
  std::vector<bool> seen(alg->blade_count(), false);
  for (const auto& [key, value] : j["coeffs"].items()) {
    const auto parsed = alg->parse_blade(key);
    if (!parsed) throw Error(ErrorCode::InvalidArgument, "unknown blade '" + key + "'");
    if (seen[parsed->first]) throw Error(ErrorCode::InvalidArgument, "blade '" + key + "' given twice");
    seen[parsed->first] = true;
    x[parsed->first] = complex_from_json(value) * static_cast<double>(parsed->second);
  }
  return x;
}

inline std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Compact serialization with every float printed to 17 significant digits,
/// so equal values always produce identical bytes.
inline void dump_to(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(k).dump();
        out += ':';
        dump_to(v, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_to(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

inline std::string dump(const Json& j) {
  std::string s;
  dump_to(j, s);
  return s;
}

}  // namespace gradedga
