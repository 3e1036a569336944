#include "hardy/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "hardy/errors.hpp"

namespace hardy::io {

namespace {

using json = nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json point(Complex z) { return json::array({z.real(), z.imag()}); }

json points(const std::vector<Complex>& zs) {
  json a = json::array();
  for (Complex z : zs) a.push_back(point(z));
  return a;
}

json coeffs(const Series& f) { return points(f.vec()); }

Complex to_point(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ParseError("expected a number or an [re, im] pair, got " + j.dump());
}

std::vector<Complex> to_points(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of complex numbers");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(to_point(e));
  return out;
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing member \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T number(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number()) throw ParseError(std::string("member \"") + key + "\" must be a number");
  return v.get<T>();
}

}  // namespace

std::string series_to_json(const Series& f) { return json{{"coeffs", coeffs(f)}}.dump(); }

Series series_from_json(std::string_view text) {
  const json j = parse(text);
  return Series(to_points(member(j, "coeffs")));
}

std::string weight_to_json(const WeightSequence& w) {
  json params = json::object();
  std::string family;
  switch (w.family()) {
    case WeightFamily::dirichlet:
      family = "dirichlet";
      break;
    case WeightFamily::sobolev_square:
      family = "sobolev_square";
      break;
    case WeightFamily::constant_step:
      family = "constant_step";
      params["c"] = w.constant();
      break;
    case WeightFamily::indicator:
      family = "indicator";
      params["k"] = w.index();
      break;
    case WeightFamily::concave_power_sum:
      family = "concave_power_sum";
      params["beta"] = w.beta();
      break;
    case WeightFamily::table:
      family = "table";
      params["values"] = w.table_values();
      params["extension"] = w.extension() == Extension::hold_last ? "hold_last" : "error";
      break;
  }
  return json{{"family", family}, {"params", params}}.dump();
}

WeightSequence weight_from_json(std::string_view text) {
  const json j = parse(text);
  const json& fam = member(j, "family");
  if (!fam.is_string()) throw ParseError("weight family must be a string");
  const std::string family = fam.get<std::string>();
  const json params = j.contains("params") ? j.at("params") : json::object();
  if (family == "dirichlet") return WeightSequence::dirichlet();
  if (family == "sobolev_square") return WeightSequence::sobolev_square();
  if (family == "constant_step") {
    return WeightSequence::constant_step(params.contains("c") ? number<double>(params, "c") : 1.0);
  }
  if (family == "indicator") {
    const long long k = number<long long>(params, "k");
    if (k < 1) throw InvalidWeight("indicator index must be at least 1");
    return WeightSequence::indicator(static_cast<std::size_t>(k));
  }
  if (family == "concave_power_sum") return WeightSequence::concave_power_sum(number<int>(params, "beta"));
  if (family == "table") {
    const json& values = member(params, "values");
    if (!values.is_array()) throw ParseError("table values must be an array");
    std::vector<double> v;
    for (const json& e : values) {
      if (!e.is_number()) throw ParseError("table values must be numbers");
      v.push_back(e.get<double>());
    }
    Extension rule = Extension::error;
    if (params.contains("extension")) {
      const std::string ext = params.at("extension").get<std::string>();
      if (ext == "hold_last") {
        rule = Extension::hold_last;
      } else if (ext != "error") {
        throw ParseError("unknown table extension '" + ext + "'");
      }
    }
    return WeightSequence::table(std::move(v), rule);
  }
  throw ParseError("unknown weight family '" + family + "'");
}

std::string roots_to_json(const RootSet& roots, const std::vector<Complex>& near_boundary, double phase) {
  std::vector<Complex> nonzero;
  for (Complex a : roots) {
    if (a != Complex{}) nonzero.push_back(a);
  }
  json j{{"roots", points(nonzero)}, {"origin_multiplicity", roots.origin_multiplicity()}, {"phase", phase}};
  if (!near_boundary.empty()) j["near_boundary"] = points(near_boundary);
  return j.dump();
}

RootSet roots_from_json(std::string_view text) {
  const json j = parse(text);
  std::vector<Complex> rs = to_points(member(j, "roots"));
  if (j.contains("origin_multiplicity")) {
    const long long m = number<long long>(j, "origin_multiplicity");
    if (m < 0) throw ParseError("origin_multiplicity must be nonnegative");
    rs.insert(rs.end(), static_cast<std::size_t>(m), Complex{});
  }
  return RootSet(std::move(rs));
}

std::string chain_to_json(const DecompositionChain& chain) {
  json stages = json::array();
  for (const Series& s : chain.stages) stages.push_back(coeffs(s));
  json hs = json::array();
  for (const Series& s : chain.h_list) hs.push_back(coeffs(s));
  return json{{"coeffs", coeffs(chain.g())},
              {"roots", points(chain.alphas)},
              {"origin_multiplicity", chain.roots.origin_multiplicity()},
              {"near_boundary", points(chain.near_boundary)},
              {"stages", stages},
              {"h", hs}}
      .dump();
}

std::string expansion_to_json(const UnwindingExpansion& e, bool include_series) {
  json zeros = json::array();
  for (const auto& z : e.blaschke_zeros) zeros.push_back(points(z));
  json j{{"depth", e.depth()},
         {"terminated", e.terminated},
         {"constants", points(e.constants)},
         {"residual_h2", e.residual_h2},
         {"blaschke_zeros", zeros}};
  if (include_series) {
    json cb = json::array();
    for (const Series& s : e.cumulative_blaschke) cb.push_back(coeffs(s));
    json rs = json::array();
    for (const Series& s : e.residuals) rs.push_back(coeffs(s));
    j["cumulative_blaschke"] = cb;
    j["residuals"] = rs;
  }
  return j.dump();
}

std::string expansion_to_csv(const UnwindingExpansion& e) {
  std::string out = "depth,residual_h2\n";
  for (std::size_t n = 0; n < e.depth(); ++n) {
    out += std::to_string(n) + "," + json(e.residual_h2[n]).dump() + "\n";
  }
  return out;
}

std::string report_to_json(const VerificationReport& r) {
  json j{{"claim", std::string(to_string(r.claim))},
         {"relation", r.relation == Relation::identity ? "identity" : "inequality"},
         {"lhs", r.lhs},
         {"rhs", r.rhs},
         {"slack", r.slack},
         {"tol", r.tol},
         {"pass", r.pass},
         {"weight", r.weight},
         {"context", r.context}};
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  if (!r.error.empty()) j["error"] = r.error;
  return j.dump();
}

std::vector<double> signal_from_csv(std::string_view text) {
  std::vector<double> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t' || line.back() == ',')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(line) + "' is not a number");
    }
    out.push_back(v);
  }
  return out;
}

std::string samples_to_csv(const std::vector<double>& samples) {
  std::string out;
  for (double v : samples) out += json(v).dump() + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

}  // namespace hardy::io
