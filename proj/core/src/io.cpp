#include "hirota/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hirota/cube_ring.hpp"
#include "hirota/errors.hpp"

namespace hirota {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

json rat(const Rational& r) { return r.to_string(); }

Rational rat_from(const json& j, const char* field) {
  if (!j.is_string()) {
    throw InputError(std::string("field '") + field +
                     "' must hold rationals as strings (\"num/den\")");
  }
  return Rational::from_string(j.get<std::string>());
}

json rat_array(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const Rational& x : xs) out.push_back(rat(x));
  return out;
}

std::vector<Rational> rat_array_from(const json& j, const char* field) {
  if (!j.is_array()) {
    throw InputError(std::string("field '") + field + "' must be an array");
  }
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& el : j) out.push_back(rat_from(el, field));
  return out;
}

void check_schema(const json& j) {
  if (j.contains("schema") && j.at("schema") != kSchemaVersion) {
    throw InputError("unsupported schema version");
  }
}

json parse(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON");
  if (!j.is_object()) throw InputError("expected a JSON object");
  check_schema(j);
  return j;
}

// Type mismatches surface as library exceptions; readers report them all as
// input errors.
template <class F>
auto guarded(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed input: ") + e.what());
  }
}

template <class T>
T integer_field(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_integer()) {
    throw InputError(std::string("missing integer field '") + field + "'");
  }
  return j.at(field).get<T>();
}

std::string subset_key(const std::vector<int>& subset) {
  std::string key;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i > 0) key += ",";
    key += std::to_string(subset[i] + 1);
  }
  return key;
}

std::vector<int> subset_from_key(const std::string& key) {
  std::vector<int> out;
  std::istringstream is(key);
  std::string token;
  while (std::getline(is, token, ',')) {
    try {
      out.push_back(std::stoi(token) - 1);
    } catch (const std::exception&) {
      throw InputError("malformed pluecker subset key '" + key + "'");
    }
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string point_to_json(const HirotaPoint& p) {
  p.validate();
  json j;
  j["schema"] = kSchemaVersion;
  j["genus"] = p.genus;
  j["a"] = rat_array(p.a);
  j["u"] = rat_array(p.u);
  j["v"] = rat_array(p.v);
  j["w"] = rat_array(p.w);
  return dump(j);
}

HirotaPoint point_from_json(std::string_view text) {
  return guarded([&] {
    const json j = parse(text);
    HirotaPoint p;
    p.genus = integer_field<int>(j, "genus");
    p.a = rat_array_from(j.value("a", json::array()), "a");
    p.u = rat_array_from(j.value("u", json::array()), "u");
    p.v = rat_array_from(j.value("v", json::array()), "v");
    p.w = rat_array_from(j.value("w", json::array()), "w");
    p.validate();
    return p;
  });
}

std::string params_to_json(const MainParams& params) {
  params.validate();
  json j;
  j["schema"] = kSchemaVersion;
  j["genus"] = params.genus();
  j["lambda"] = rat_array(params.lambda);
  j["kappa"] = rat_array(params.kappa);
  return dump(j);
}

MainParams params_from_json(std::string_view text) {
  return guarded([&] {
    const json j = parse(text);
    MainParams params;
    params.lambda = rat_array_from(j.value("lambda", json::array()), "lambda");
    params.kappa = rat_array_from(j.value("kappa", json::array()), "kappa");
    if (j.contains("genus") &&
        integer_field<int>(j, "genus") != params.genus()) {
      throw InputError("genus field disagrees with lambda length");
    }
    params.validate();
    return params;
  });
}

std::string soliton_to_json(const SolitonData& data) {
  data.validate();
  json j;
  j["schema"] = kSchemaVersion;
  j["k"] = data.k;
  j["n"] = data.n;
  j["kappa"] = rat_array(data.kappa);
  json table = json::object();
  for (const auto& [subset, value] : data.pluecker) {
    table[subset_key(subset)] = rat(value);
  }
  j["pluecker"] = table;
  return dump(j);
}

SolitonData soliton_from_json(std::string_view text) {
  return guarded([&] {
    const json j = parse(text);
    SolitonData data;
    data.k = integer_field<int>(j, "k");
    data.n = integer_field<int>(j, "n");
    data.kappa = rat_array_from(j.value("kappa", json::array()), "kappa");
    if (j.contains("pluecker")) {
      const json& table = j.at("pluecker");
      if (!table.is_object()) throw InputError("pluecker must be an object");
      for (const auto& [key, value] : table.items()) {
        data.pluecker.emplace_back(subset_from_key(key),
                                   rat_from(value, "pluecker"));
      }
      // Normalize to colexicographic order (ascending subset bitmasks).
      std::sort(data.pluecker.begin(), data.pluecker.end(),
                [](const auto& a, const auto& b) {
                  std::uint64_t ma = 0, mb = 0;
                  for (int c : a.first) ma |= std::uint64_t{1} << c;
                  for (int c : b.first) mb |= std::uint64_t{1} << c;
                  return ma < mb;
                });
    } else if (j.contains("matrix")) {
      const json& rows = j.at("matrix");
      if (!rows.is_array() || rows.size() != static_cast<std::size_t>(data.k)) {
        throw InputError("matrix must have k rows");
      }
      SolitonMatrix m;
      m.k = data.k;
      m.n = data.n;
      for (const auto& row : rows) {
        const auto values = rat_array_from(row, "matrix");
        if (values.size() != static_cast<std::size_t>(data.n)) {
          throw InputError("matrix rows must have n entries");
        }
        m.entries.insert(m.entries.end(), values.begin(), values.end());
      }
      data.pluecker = pluecker_minors(m);
    } else {
      throw InputError("soliton data needs either 'pluecker' or 'matrix'");
    }
    data.validate();
    return data;
  });
}

std::string generators_to_json(const GeneratorSet& set) {
  const CubeRing ring(set.genus());
  json j;
  j["schema"] = kSchemaVersion;
  j["genus"] = set.genus();
  j["mode"] = std::string(to_string(set.mode()));
  json gens = json::array();
  for (const Generator& gen : set.generators()) {
    json g;
    g["point"] = gen.label().coords();
    if (set.mode() == GenMode::Reduced) {
      json dir = json::array();
      for (int i : face_of(gen.label()).direction) dir.push_back(i + 1);
      g["direction"] = dir;
    }
    json terms = json::array();
    const Polynomial poly = gen.expand(ring);
    for (const auto& [mono, coeff] : poly.terms()) {
      json term;
      json exps = json::object();
      for (auto [var, exp] : mono.factors()) {
        exps[ring.ring()->variable_name(var)] = exp;
      }
      term["monomial"] = exps;
      term["coeff_num"] = coeff.numerator().get_str();
      term["coeff_den"] = coeff.denominator().get_str();
      terms.push_back(term);
    }
    g["terms"] = terms;
    gens.push_back(g);
  }
  j["generators"] = gens;
  return dump(j);
}

GeneratorSet generators_from_json(std::string_view text) {
  return guarded([&] {
    const json j = parse(text);
    const int genus = integer_field<int>(j, "genus");
    if (!j.contains("mode") || !j.at("mode").is_string()) {
      throw InputError("missing generator mode");
    }
    const GenMode mode = gen_mode_from_string(j.at("mode").get<std::string>());
    if (!j.contains("generators") || !j.at("generators").is_array()) {
      throw InputError("missing generators array");
    }
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators")) {
      if (!g.contains("point") || !g.at("point").is_array()) {
        throw InputError("generator entry needs a 'point' label");
      }
      std::vector<int> coords;
      for (const auto& c : g.at("point")) {
        if (!c.is_number_integer()) {
          throw InputError("label coordinates must be integers");
        }
        coords.push_back(c.get<int>());
      }
      if (static_cast<int>(coords.size()) != genus) {
        throw InputError("label length disagrees with genus");
      }
      gens.push_back(generator_for(DoublePoint(std::move(coords))));
    }
    return GeneratorSet(genus, mode, std::move(gens));
  });
}

std::string report_to_json(const CertReport& report, bool include_timings) {
  json j;
  j["schema"] = kSchemaVersion;
  j["genus"] = report.genus;
  j["seed"] = report.seed;
  j["mode"] = std::string(to_string(report.mode));
  if (report.mode == CertMode::Modular) {
    j["primes"] = report.primes;
  }
  j["generators_vanish"] = report.generators_vanish;
  j["jacobian_rank"] = report.jacobian_rank;
  j["expected_rank"] = report.expected_rank;
  j["tangent_dim_affine"] = report.tangent_dim_affine;
  j["main_component_dim_projective"] = report.main_component_dim_projective;
  j["verdict"] = report.verdict;
  j["attempts"] = report.attempts;
  if (include_timings) {
    j["timings_ms"] = report.timings_ms;
  }
  return dump(j);
}

CertReport report_from_json(std::string_view text) {
  return guarded([&] {
    const json j = parse(text);
    CertReport report;
    report.genus = integer_field<int>(j, "genus");
    report.seed = integer_field<std::uint64_t>(j, "seed");
    if (!j.contains("mode") || !j.at("mode").is_string()) {
      throw InputError("missing certificate mode");
    }
    report.mode = cert_mode_from_string(j.at("mode").get<std::string>());
    if (j.contains("primes")) {
      for (const auto& p : j.at("primes")) {
        if (!p.is_number_integer()) throw InputError("primes must be integers");
        report.primes.push_back(p.get<std::uint64_t>());
      }
    }
    report.generators_vanish = j.value("generators_vanish", false);
    report.jacobian_rank = j.value("jacobian_rank", std::size_t{0});
    report.expected_rank = j.value("expected_rank", std::size_t{0});
    report.tangent_dim_affine = j.value("tangent_dim_affine", std::size_t{0});
    report.main_component_dim_projective =
        j.value("main_component_dim_projective", std::size_t{0});
    report.verdict = j.value("verdict", false);
    report.attempts = j.value("attempts", 0);
    if (j.contains("timings_ms") && !j.at("timings_ms").is_object()) {
      throw InputError("timings_ms must be an object");
    }
    if (j.contains("timings_ms")) {
      for (const auto& [key, value] : j.at("timings_ms").items()) {
        if (!value.is_number()) throw InputError("timings must be numbers");
        report.timings_ms[key] = value.get<double>();
      }
    }
    return report;
  });
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path,
                     std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file '" + path.string() + "'");
  out << content;
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

HirotaPoint read_point(const std::filesystem::path& path) {
  return point_from_json(read_text_file(path));
}

MainParams read_params(const std::filesystem::path& path) {
  return params_from_json(read_text_file(path));
}

SolitonData read_soliton(const std::filesystem::path& path) {
  return soliton_from_json(read_text_file(path));
}

GeneratorSet read_generators(const std::filesystem::path& path) {
  return generators_from_json(read_text_file(path));
}

CertReport read_report(const std::filesystem::path& path) {
  return report_from_json(read_text_file(path));
}

void write_report(const CertReport& report,
                  const std::filesystem::path& path) {
  write_text_file(path, report_to_json(report));
}

}  // namespace hirota
