#include "entatlas/state_io.hpp"

#include <json.hpp>

#include "entatlas/errors.hpp"

namespace entatlas {
namespace {

using nlohmann::json;

mpz_class integer_of(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()), 10);
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()), 10);
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
    }
  }
  throw InputError("expected an integer, got " + j.dump());
}

Rational fraction_of(const json& j) {
  if (j.is_number_integer() || j.is_string()) return Rational(integer_of(j));
  if (!j.is_array() || j.size() != 2) throw InputError("expected [num, den], got " + j.dump());
  mpz_class n = integer_of(j[0]), d = integer_of(j[1]);
  if (d == 0) throw InputError("zero denominator in " + j.dump());
  return Rational(mpq_class(n, d));
}

Rational double_of(const json& j) {
  if (!j.is_number()) throw InputError("expected a number, got " + j.dump());
  return Rational::from_double(j.get<double>());
}

json fraction_json(const Rational& r) {
  auto to_json = [](const mpz_class& z) -> json {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
  };
  return json::array({to_json(r.numerator()), to_json(r.denominator())});
}

const json& amplitude_list(const json& doc, const char* key) {
  const json& a = doc.at(key);
  if (!a.is_array() || a.size() != State::kSize)
    throw InputError(std::string(key) + " must be an array of 16 entries");
  return a;
}

}  // namespace

State parse_state_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("state document must be a JSON object");
  State s;
  if (doc.contains("form")) {
    const json& f = doc["form"];
    if (!f.is_number_integer()) throw InputError("form must be an integer");
    return decode_form(f.get<long long>());
  }
  if (doc.contains("amplitudes")) {
    const json& a = amplitude_list(doc, "amplitudes");
    for (int b = 0; b < State::kSize; ++b) s[b] = Scalar(fraction_of(a[static_cast<std::size_t>(b)]));
    return s;
  }
  if (doc.contains("amplitudes_c")) {
    const json& a = amplitude_list(doc, "amplitudes_c");
    for (int b = 0; b < State::kSize; ++b) {
      const json& e = a[static_cast<std::size_t>(b)];
      if (!e.is_array() || e.size() != 2) throw InputError("expected [re, im], got " + e.dump());
      s[b] = Scalar(fraction_of(e[0]), fraction_of(e[1]));
    }
    return s;
  }
  if (doc.contains("amplitudes_f")) {
    const json& a = amplitude_list(doc, "amplitudes_f");
    for (int b = 0; b < State::kSize; ++b) {
      const json& e = a[static_cast<std::size_t>(b)];
      if (e.is_array()) {
        if (e.size() != 2) throw InputError("expected [re, im], got " + e.dump());
        s[b] = Scalar(double_of(e[0]), double_of(e[1]));
      } else {
        s[b] = Scalar(double_of(e));
      }
    }
    return s;
  }
  throw InputError("state document needs one of: form, amplitudes, amplitudes_c, amplitudes_f");
}

std::string state_to_json(const State& s) {
  json doc;
  json list = json::array();
  if (s.is_real()) {
    for (const auto& a : s.amplitudes()) list.push_back(fraction_json(a.re()));
    doc["amplitudes"] = list;
  } else {
    for (const auto& a : s.amplitudes()) list.push_back(json::array({fraction_json(a.re()), fraction_json(a.im())}));
    doc["amplitudes_c"] = list;
  }
  return doc.dump();
}

}  // namespace entatlas
