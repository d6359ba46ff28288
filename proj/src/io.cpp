#include "szeta/io.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace szeta::io {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw InvalidInput("malformed number '" + std::string(whole) + "'");
  bool neg = false;
  if (s.front() == '-' || s.front() == '+') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw InvalidInput("malformed number '" + std::string(whole) + "'");
  BigInt v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidInput("malformed number '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return neg ? BigInt(-v) : v;
}

template <class T>
T require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("JSON: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("JSON: field '") + key + "': " + e.what());
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    const auto frac = text.substr(dot + 1);
    if (frac.empty()) throw InvalidInput("malformed number '" + std::string(text) + "'");
    digits += frac;
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    return Rational(parse_integer(digits, text), den);
  }
  return Rational(parse_integer(text, text));
}

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Json to_json(const Rational& r) {
  // Plain numbers while they fit, decimal strings beyond 64 bits.
  auto put = [](const BigInt& v) -> Json {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(v);
    }
    return v.str();
  };
  Json j;
  j["num"] = put(numerator(r));
  j["den"] = put(denominator(r));
  return j;
}

Rational rational_from_json(const Json& j) {
  auto get = [&](const char* key) -> BigInt {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("JSON: missing field '") + key + "'");
    const Json& v = j.at(key);
    if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
    if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
    if (v.is_string()) return parse_integer(v.get<std::string>(), v.get<std::string>());
    throw InvalidInput(std::string("JSON: field '") + key + "' must be an integer");
  };
  const BigInt num = get("num");
  const BigInt den = get("den");
  if (den == 0) throw InvalidInput("JSON: zero denominator");
  return Rational(num, den);
}

Json to_json(const Poly& f) {
  Json j = Json::array();
  for (auto c : f.coeffs()) j.push_back(c);
  return j;
}

Poly poly_from_json(PrimeField field, const Json& j) {
  if (!j.is_array()) throw InvalidInput("JSON: polynomial must be an array of coefficients");
  std::vector<std::int64_t> c;
  for (auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput("JSON: polynomial coefficients must be integers");
    c.push_back(x.get<std::int64_t>());
  }
  return Poly(field, std::span<const std::int64_t>(c));
}

Json to_json(const Place& place) {
  Json j;
  if (place.is_infinite()) {
    j["kind"] = "infinite";
  } else {
    j["kind"] = "finite";
    j["poly"] = to_json(place.poly());
  }
  return j;
}

Json to_json(const IndexedPlace& place) {
  Json j;
  j["index"] = place.index;
  const Json body = to_json(place.place);
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

Place place_from_json(PrimeField field, const Json& j) {
  const auto kind = require<std::string>(j, "kind");
  if (kind == "infinite") return Place::infinite(field);
  if (kind == "finite") return Place::finite(poly_from_json(field, j.at("poly")));
  throw InvalidInput("JSON: unknown place kind '" + kind + "'");
}

Json to_json(const CycloFactorization& fac) {
  Json parts = Json::array();
  for (auto& part : fac.parts) {
    Json factors = Json::array();
    for (auto& f : part.factors) factors.push_back(to_json(f));
    Json pj;
    pj["d"] = part.d;
    pj["multiplicity"] = part.multiplicity;
    pj["factors"] = std::move(factors);
    parts.push_back(std::move(pj));
  }
  Json j;
  j["n"] = fac.n;
  j["parts"] = std::move(parts);
  return j;
}

CycloFactorization cyclo_from_json(PrimeField field, const Json& j) {
  CycloFactorization fac{require<std::uint64_t>(j, "n"), {}};
  for (auto& pj : j.at("parts")) {
    CycloPart part{require<std::uint64_t>(pj, "d"), {}, require<std::uint64_t>(pj, "multiplicity")};
    for (auto& f : pj.at("factors")) part.factors.push_back(poly_from_json(field, f));
    fac.parts.push_back(std::move(part));
  }
  return fac;
}

Json to_json(const SystemSpec& spec) {
  Json omega;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, AllZeroMarks>) {
          omega["mode"] = "all_zero";
        } else if constexpr (std::is_same_v<T, AllOneMarks>) {
          omega["mode"] = "all_one";
        } else if constexpr (std::is_same_v<T, ExplicitMarks>) {
          omega["mode"] = "explicit";
          Json places = Json::array();
          for (auto& v : m.places) places.push_back(to_json(v));
          omega["places"] = std::move(places);
        } else {
          omega["mode"] = "random";
          omega["rho"] = rational_to_string(m.rho);
          omega["seed"] = m.seed;
        }
      },
      spec.omega);
  Json j;
  j["p"] = spec.field.p();
  j["omega"] = std::move(omega);
  j["label"] = spec.label;
  return j;
}

SystemSpec spec_from_json(const Json& j) {
  const PrimeField field(require<std::uint64_t>(j, "p"));
  const Json& omega = j.contains("omega") ? j.at("omega") : throw InvalidInput("JSON: missing field 'omega'");
  const auto mode = require<std::string>(omega, "mode");
  const std::string label = j.contains("label") ? require<std::string>(j, "label") : mode;
  if (mode == "all_zero") return {field, AllZeroMarks{}, label};
  if (mode == "all_one") return {field, AllOneMarks{}, label};
  if (mode == "explicit") {
    std::vector<Poly> places;
    for (auto& pj : omega.at("places")) places.push_back(poly_from_json(field, pj));
    return {field, explicit_marks(field, std::move(places)), label};
  }
  if (mode == "random") {
    const Json& rho = omega.contains("rho") ? omega.at("rho") : throw InvalidInput("JSON: missing field 'rho'");
    const Rational r = rho.is_string() ? parse_rational(rho.get<std::string>()) : rational_from_json(rho);
    return {field, random_marks(r, require<std::uint64_t>(omega, "seed")), label};
  }
  throw InvalidInput("JSON: unknown omega mode '" + mode + "'");
}

Json to_json(const ZetaSeries& series) {
  Json coeffs = Json::array();
  for (auto& a : series.terms) coeffs.push_back(a.str());
  Json j;
  j["p"] = series.p;
  j["label"] = series.label;
  j["N"] = series.order();
  j["coefficients"] = std::move(coeffs);
  return j;
}

ZetaSeries series_from_json(const Json& j) {
  ZetaSeries s;
  s.p = require<std::uint32_t>(j, "p");
  s.label = require<std::string>(j, "label");
  for (auto& c : j.at("coefficients")) s.terms.push_back(parse_integer(c.get<std::string>(), c.get<std::string>()));
  if (s.order() != require<std::size_t>(j, "N")) throw InvalidInput("JSON: N does not match the coefficient count");
  return s;
}

Json to_json(const GrowthPoint& g) {
  Json j;
  j["n"] = g.n;
  j["e"] = g.e;
  j["rate"] = to_json(g.rate);
  return j;
}

Json to_json(const ConstructionReport& r) {
  Json checks = Json::object();
  for (auto& c : r.checks) checks[c.id] = c.passed;
  Json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["n_j"] = r.nj;
  j["pi_irreducible"] = r.pi_irreducible;
  j["multiplicity_in_qnj"] = r.multiplicity_in_qnj;
  j["multiplicity_brute"] = r.multiplicity_brute;
  j["qnj_split_count"] = r.qnj_split_count;
  j["qnj_min_factor_degree"] = r.qnj_min_factor_degree;
  j["fixed_marked_degree"] = r.fixed_marked_degree;
  j["e_qnj"] = r.e_qnj;
  j["B_exponent"] = r.b_exponent;
  j["rate_gap"] = to_json(r.rate_gap);
  j["checks"] = std::move(checks);
  j["passed"] = r.passed();
  return j;
}

std::string growth_to_csv(const std::vector<GrowthPoint>& points) {
  std::ostringstream os;
  os << "n,e,rate_num,rate_den\n";
  for (auto& g : points) os << g.n << ',' << g.e << ',' << numerator(g.rate) << ',' << denominator(g.rate) << '\n';
  return os.str();
}

}  // namespace szeta::io
