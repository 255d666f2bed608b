#include <json.hpp>

#include "overpart/error.hpp"
#include "overpart/series.hpp"

namespace overpart {

std::string to_json(const TruncatedSeries& s) {
  nlohmann::ordered_json j;
  j["ring"] = s.ring().is_exact() ? "exact" : "modular";
  if (!s.ring().is_exact()) j["modulus"] = s.ring().modulus();
  j["order"] = s.order();
  auto coeffs = nlohmann::ordered_json::array();
  for (std::int64_t k = 0; k <= s.order(); ++k) coeffs.push_back(s.coeff_string(k));
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

TruncatedSeries series_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::InvalidArgument, std::string("series JSON: ") + e.what());
  }
  try {
    const std::string ring = j.at("ring").get<std::string>();
    const auto order = j.at("order").get<std::int64_t>();
    const auto& coeffs = j.at("coeffs");
    if (order < 0 || !coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(order) + 1)
      fail(ErrorKind::InvalidArgument, "series JSON: coeffs must hold order+1 entries");

    std::vector<mpz_class> values;
    values.reserve(coeffs.size());
    for (const auto& c : coeffs) {
      mpz_class v;
      if (!c.is_string() || v.set_str(c.get<std::string>(), 10) != 0)
        fail(ErrorKind::InvalidArgument, "series JSON: coefficient is not a decimal string");
      values.push_back(std::move(v));
    }

    if (ring == "exact") {
      if (j.contains("modulus")) fail(ErrorKind::InvalidArgument, "series JSON: exact ring carries no modulus");
      return TruncatedSeries::from_exact(RingSpec::exact(), std::move(values));
    }
    if (ring == "modular") {
      const RingSpec spec = RingSpec::modular(j.at("modulus").get<std::uint64_t>());
      const mpz_class m(static_cast<unsigned long>(spec.modulus()));
      for (const auto& v : values)
        if (v < 0 || v >= m) fail(ErrorKind::InvalidArgument, "series JSON: residue outside [0, modulus)");
      return TruncatedSeries::from_exact(spec, std::move(values));
    }
    fail(ErrorKind::InvalidArgument, "series JSON: unknown ring '" + ring + "'");
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidArgument, std::string("series JSON: ") + e.what());
  }
}

}  // namespace overpart
