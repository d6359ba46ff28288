// szeta: command-line front end.
//
//   szeta count --p 2 --system full --n 10
//   szeta growth --p 3 --system example85 --max-n 200 --format csv
//   szeta zeta --p 2 --system random --rho 1/2 --seed 7 --terms 60
//   szeta verify --p 2 --q 3 --nj 5
//
// Exit status: 0 success, 2 invalid input, 1 internal invariant failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "szeta/common.hpp"
#include "szeta/cyclofactor.hpp"
#include "szeta/io.hpp"
#include "szeta/limitset.hpp"
#include "szeta/places.hpp"
#include "szeta/system.hpp"
#include "szeta/zeta.hpp"

namespace {

using namespace szeta;
using io::Json;

struct Config {
  std::optional<std::uint64_t> p;
  std::string system = "full";
  std::vector<std::string> places;
  std::string rho = "1/2";
  std::uint64_t seed = 0;
  std::string spec_file;

  std::uint64_t n = 1;
  std::uint64_t max_n = 100;
  std::size_t terms = kDefaultZetaTerms;
  std::size_t max_order = 5;
  std::string epsilon = "1/100";
  std::string tail = "1/2";
  std::uint64_t q = 3;
  std::uint64_t nj = 5;
  bool mark_pi1 = false;
  bool mark_piq = false;
  std::uint64_t bound = 100;
  std::size_t max_degree = 2;
  std::uint64_t q_bound = 20;

  std::string format = "json";
  std::string output;
};

// Rethrows an InvalidInput with the flag that caused it in front.
template <class F>
auto for_flag(const char* flag, F&& f) {
  try {
    return f();
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string(flag) + ": " + e.what());
  }
}

PrimeField field_of(const Config& c) {
  if (!c.p) throw InvalidInput("--p is required");
  return for_flag("--p", [&] { return PrimeField(*c.p); });
}

SystemSpec system_of(const Config& c) {
  if (!c.spec_file.empty()) {
    std::ifstream in(c.spec_file);
    if (!in) throw InvalidInput("--spec: cannot open '" + c.spec_file + "'");
    SystemSpec spec = for_flag("--spec", [&] {
      try {
        return io::spec_from_json(Json::parse(in));
      } catch (const Json::exception& e) {
        throw InvalidInput(e.what());
      }
    });
    if (c.p && *c.p != spec.field.p()) throw InvalidInput("--p: disagrees with the p in --spec");
    return spec;
  }
  const PrimeField f = field_of(c);
  if (c.system == "random") {
    const Rational rho = for_flag("--rho", [&] { return io::parse_rational(c.rho); });
    return {f, for_flag("--rho", [&] { return random_marks(rho, c.seed); }), "random"};
  }
  if (c.system == "explicit") {
    if (c.places.empty()) throw InvalidInput("--places: required with --system explicit");
    std::vector<Poly> polys;
    for (auto& s : c.places) polys.push_back(for_flag("--places", [&] { return parse_poly(f, s); }));
    return {f, for_flag("--places", [&] { return explicit_marks(f, std::move(polys)); }), "explicit"};
  }
  return for_flag("--system", [&] { return preset_system(f, c.system); });
}

Rational rational_flag(const char* flag, const std::string& text) {
  return for_flag(flag, [&] { return io::parse_rational(text); });
}

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (auto a : allowed) {
    if (c.format == a) return;
  }
  throw InvalidInput("--format: '" + c.format + "' is not available for this command");
}

std::string text_rational(const Rational& r) { return io::rational_to_string(r); }

std::string cmd_places(const Config& c) {
  require_format(c, {"json", "text"});
  const auto f = field_of(c);
  const auto places = for_flag("--max-degree", [&] { return enumerate_places(f, c.max_degree); });
  if (c.format == "text") {
    std::ostringstream os;
    for (auto& ip : places) {
      os << ip.index << ' ' << ip.place.degree() << ' ' << (ip.place.is_infinite() ? "inf" : to_string(ip.place.poly()))
         << '\n';
    }
    return os.str();
  }
  Json arr = Json::array();
  for (auto& ip : places) arr.push_back(io::to_json(ip));
  Json j;
  j["p"] = f.p();
  j["max_degree"] = c.max_degree;
  j["places"] = std::move(arr);
  return j.dump() + "\n";
}

std::string cmd_factor(const Config& c) {
  require_format(c, {"json", "text"});
  const auto f = field_of(c);
  const auto fac = for_flag("--n", [&] { return factor_tn_minus_1(f, c.n); });
  if (c.format == "text") {
    std::ostringstream os;
    for (auto& part : fac.parts) {
      os << "d=" << part.d << " multiplicity=" << part.multiplicity << ':';
      for (auto& g : part.factors) os << ' ' << to_string(g);
      os << '\n';
    }
    return os.str();
  }
  Json j = io::to_json(fac);
  j["p"] = f.p();
  return j.dump() + "\n";
}

std::string cmd_count(const Config& c) {
  require_format(c, {"json", "text"});
  const auto spec = system_of(c);
  const auto pe = for_flag("--n", [&] { return periodic_exponent(spec, c.n); });
  const BigInt count = boost::multiprecision::pow(BigInt(spec.field.p()), static_cast<unsigned>(pe.e));
  if (c.format == "text") return std::to_string(pe.n) + ' ' + std::to_string(pe.e) + ' ' + count.str() + "\n";
  Json j;
  j["n"] = pe.n;
  j["e"] = pe.e;
  j["count"] = count.str();
  return j.dump() + "\n";
}

std::string cmd_growth(const Config& c) {
  require_format(c, {"json", "csv", "text"});
  const auto spec = system_of(c);
  const auto pts = for_flag("--max-n", [&] { return growth_sequence(spec, c.max_n); });
  if (c.format == "csv") return io::growth_to_csv(pts);
  if (c.format == "text") {
    std::ostringstream os;
    for (auto& g : pts) os << g.n << ' ' << g.e << ' ' << text_rational(g.rate) << '\n';
    return os.str();
  }
  Json arr = Json::array();
  for (auto& g : pts) arr.push_back(io::to_json(g));
  Json j;
  j["system"] = io::to_json(spec);
  j["points"] = std::move(arr);
  return j.dump() + "\n";
}

std::string cmd_zeta(const Config& c) {
  require_format(c, {"json", "text"});
  const auto spec = system_of(c);
  if (c.terms == 0) throw InvalidInput("--terms: must be at least 1");
  std::vector<BigInt> counts;
  for (std::uint64_t n = 1; n <= c.terms; ++n) {
    counts.push_back(for_flag("--terms", [&] { return periodic_count(spec, n); }));
  }
  ZetaSeries series = zeta_coefficients(counts);
  series.p = spec.field.p();
  series.label = spec.label;
  const auto orbits = orbit_counts(counts);
  std::optional<std::vector<Rational>> rec;
  const bool searched = series.terms.size() >= 2 * c.max_order + 2;
  if (searched) rec = for_flag("--max-order", [&] { return find_linear_recurrence(series, c.max_order); });

  if (c.format == "text") {
    std::ostringstream os;
    for (std::size_t m = 0; m < series.terms.size(); ++m) os << m << ' ' << series.terms[m] << '\n';
    if (!searched) {
      os << "recurrence: not searched (too few terms)\n";
    } else if (!rec) {
      os << "recurrence: none up to order " << c.max_order << '\n';
    } else {
      os << "recurrence: order " << rec->size() << ':';
      for (auto& r : *rec) os << ' ' << text_rational(r);
      os << '\n';
    }
    return os.str();
  }
  Json orb = Json::array();
  for (auto& o : orbits) orb.push_back(o.str());
  Json recj;
  recj["max_order"] = c.max_order;
  recj["searched"] = searched;
  recj["found"] = rec.has_value();
  Json coeffs = Json::array();
  if (rec) {
    for (auto& r : *rec) coeffs.push_back(io::to_json(r));
  }
  recj["coefficients"] = std::move(coeffs);
  Json j;
  j["system"] = io::to_json(spec);
  j["series"] = io::to_json(series);
  j["orbit_counts"] = std::move(orb);
  j["recurrence"] = std::move(recj);
  return j.dump() + "\n";
}

std::string cmd_limits(const Config& c) {
  require_format(c, {"json", "text"});
  const auto spec = system_of(c);
  const Rational eps = rational_flag("--epsilon", c.epsilon);
  const Rational tail = rational_flag("--tail", c.tail);
  const auto pts = for_flag("--max-n", [&] { return growth_sequence(spec, c.max_n); });
  const auto clusters = for_flag("--epsilon/--tail", [&] { return cluster_limits(pts, eps, tail); });
  if (c.format == "text") {
    std::ostringstream os;
    os << "# empirical clusters (rates in units of log p)\n";
    for (auto& cl : clusters) {
      os << text_rational(cl.representative) << " support=" << cl.support << " range=[" << text_rational(cl.low)
         << ", " << text_rational(cl.high) << "]\n";
    }
    return os.str();
  }
  Json arr = Json::array();
  for (auto& cl : clusters) {
    Json x;
    x["representative"] = io::to_json(cl.representative);
    x["approx"] = static_cast<double>(cl.representative);
    x["support"] = cl.support;
    x["low"] = io::to_json(cl.low);
    x["high"] = io::to_json(cl.high);
    arr.push_back(std::move(x));
  }
  Json j;
  j["system"] = io::to_json(spec);
  j["max_n"] = c.max_n;
  j["epsilon"] = io::to_json(eps);
  j["tail_fraction"] = io::to_json(tail);
  j["empirical"] = true;
  j["clusters"] = std::move(arr);
  return j.dump() + "\n";
}

std::string cmd_artin(const Config& c) {
  require_format(c, {"json", "csv", "text"});
  const auto f = field_of(c);
  const auto primes = for_flag("--bound", [&] { return artin_primes(f, c.bound); });
  if (c.format != "json") {
    std::ostringstream os;
    if (c.format == "csv") os << "q\n";
    for (auto q : primes) os << q << '\n';
    return os.str();
  }
  Json j;
  j["p"] = f.p();
  j["bound"] = c.bound;
  j["count"] = primes.size();
  j["primes"] = primes;
  return j.dump() + "\n";
}

std::string cmd_verify(const Config& c) {
  require_format(c, {"json", "text"});
  if (!c.p) throw InvalidInput("--p is required");
  const auto report = for_flag("--p/--q/--nj", [&] {
    return verify_construction(*c.p, c.q, c.nj, {.mark_pi1 = c.mark_pi1, .mark_piq = c.mark_piq});
  });
  if (c.format == "text") {
    std::ostringstream os;
    os << "p=" << report.p << " q=" << report.q << " n_j=" << report.nj << " e=" << report.e_qnj
       << " B_exponent=" << report.b_exponent << " rate_gap=" << text_rational(report.rate_gap) << '\n';
    for (auto& ch : report.checks) os << (ch.passed ? "ok   " : "FAIL ") << ch.id << "  " << ch.description << '\n';
    return os.str();
  }
  return io::to_json(report).dump() + "\n";
}

std::string cmd_example85(const Config& c) {
  require_format(c, {"json", "csv", "text"});
  const auto f = field_of(c);
  const auto ref = for_flag("--q-bound", [&] { return example85_reference(f, c.q_bound); });
  if (c.format != "json") {
    std::ostringstream os;
    if (c.format == "csv") os << "rate_num,rate_den\n";
    for (auto& r : ref) {
      if (c.format == "csv") {
        os << numerator(r) << ',' << denominator(r) << '\n';
      } else {
        os << text_rational(r) << '\n';
      }
    }
    return os.str();
  }
  Json arr = Json::array();
  for (auto& r : ref) arr.push_back(io::to_json(r));
  Json j;
  j["p"] = f.p();
  j["q_bound"] = c.q_bound;
  j["reference"] = std::move(arr);
  return j.dump() + "\n";
}

void emit(const Config& c, const std::string& doc) {
  if (c.output.empty()) {
    std::cout << doc;
    std::cout.flush();
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw InvalidInput("--output: cannot open '" + c.output + "'");
  out << doc;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"S-integer dynamical systems over F_p(t)", "szeta"};
  app.set_version_flag("--version", std::string("szeta ") + kLibraryVersion + " (schema " + kSchemaVersion + ")");
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "field characteristic (prime)");
    sub->add_option("--format", cfg.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", cfg.output, "write to this file instead of stdout");
  };
  auto system_flags = [&](CLI::App* sub) {
    sub->add_option("--system", cfg.system, "full | trivial | example85 | random | explicit")
        ->check(CLI::IsMember({"full", "trivial", "example85", "random", "explicit"}));
    sub->add_option("--places", cfg.places, "marked place for --system explicit, e.g. t^2+t+1 or 1,1,1 (repeatable)");
    sub->add_option("--rho", cfg.rho, "P(mark = 0) for --system random");
    sub->add_option("--seed", cfg.seed, "seed for --system random");
    sub->add_option("--spec", cfg.spec_file, "system spec JSON file (overrides --system)");
  };

  auto* places = app.add_subcommand("places", "enumerate places up to a degree");
  common(places);
  places->add_option("--max-degree", cfg.max_degree);

  auto* factor = app.add_subcommand("factor", "factor t^n - 1 into cyclotomic blocks");
  common(factor);
  factor->add_option("--n", cfg.n)->required();

  auto* count = app.add_subcommand("count", "number of period-n points");
  common(count);
  system_flags(count);
  count->add_option("--n", cfg.n)->required();

  auto* growth = app.add_subcommand("growth", "growth rates e_n / n for n <= max-n");
  common(growth);
  system_flags(growth);
  growth->add_option("--max-n", cfg.max_n);

  auto* zeta = app.add_subcommand("zeta", "zeta coefficients, orbit counts, recurrence search");
  common(zeta);
  system_flags(zeta);
  zeta->add_option("--terms", cfg.terms);
  zeta->add_option("--max-order", cfg.max_order);

  auto* limits = app.add_subcommand("limits", "empirical limit points of the growth rates");
  common(limits);
  system_flags(limits);
  limits->add_option("--max-n", cfg.max_n);
  limits->add_option("--epsilon", cfg.epsilon);
  limits->add_option("--tail", cfg.tail, "fraction of the sequence kept, from the end");

  auto* artin = app.add_subcommand("artin", "primes q <= bound with p a primitive root mod q");
  common(artin);
  artin->add_option("--bound", cfg.bound);

  auto* verify = app.add_subcommand("verify", "check the limit-point construction for (p, q, n_j)");
  common(verify);
  verify->add_option("--q", cfg.q);
  verify->add_option("--nj", cfg.nj);
  verify->add_flag("--mark-pi1", cfg.mark_pi1, "also mark t - 1");
  verify->add_flag("--mark-piq", cfg.mark_piq, "also mark the factors of the q-th cyclotomic polynomial");

  auto* ex85 = app.add_subcommand("example85", "reference rate set {1 - 1/q : p does not divide q} and 1");
  common(ex85);
  ex85->add_option("--q-bound", cfg.q_bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::string doc;
    if (*places) doc = cmd_places(cfg);
    else if (*factor) doc = cmd_factor(cfg);
    else if (*count) doc = cmd_count(cfg);
    else if (*growth) doc = cmd_growth(cfg);
    else if (*zeta) doc = cmd_zeta(cfg);
    else if (*limits) doc = cmd_limits(cfg);
    else if (*artin) doc = cmd_artin(cfg);
    else if (*verify) doc = cmd_verify(cfg);
    else doc = cmd_example85(cfg);
    emit(cfg, doc);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
