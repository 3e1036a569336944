#include "hardy/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

double parse_number(std::string_view text, std::string_view descriptor) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("bad number '" + std::string(text) + "' in weight descriptor '" + std::string(descriptor) + "'");
  }
  return v;
}

long long parse_integer(std::string_view text, std::string_view descriptor) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("bad integer '" + std::string(text) + "' in weight descriptor '" + std::string(descriptor) + "'");
  }
  return v;
}

}  // namespace

WeightSequence WeightSequence::parse(std::string_view descriptor) {
  const auto colon = descriptor.find(':');
  const std::string_view family = descriptor.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : descriptor.substr(colon + 1);
  auto require_param = [&] {
    if (rest.empty()) throw ParseError("weight family '" + std::string(family) + "' needs a parameter");
  };
  auto forbid_param = [&] {
    if (!rest.empty()) throw ParseError("weight family '" + std::string(family) + "' takes no parameter");
  };
  if (family == "dirichlet") {
    forbid_param();
    return dirichlet();
  }
  if (family == "sobolev_square") {
    forbid_param();
    return sobolev_square();
  }
  if (family == "constant_step") {
    if (rest.empty()) return constant_step(1.0);
    return constant_step(parse_number(rest, descriptor));
  }
  if (family == "indicator") {
    require_param();
    const long long k = parse_integer(rest, descriptor);
    if (k < 1) throw InvalidWeight("indicator index must be at least 1");
    return indicator(static_cast<std::size_t>(k));
  }
  if (family == "concave_power_sum") {
    require_param();
    return concave_power_sum(static_cast<int>(parse_integer(rest, descriptor)));
  }
  if (family == "table") {
    require_param();
    std::string_view values = rest;
    Extension rule = Extension::error;
    if (const auto c = rest.find(':'); c != std::string_view::npos) {
      values = rest.substr(0, c);
      const std::string_view ext = rest.substr(c + 1);
      if (ext == "hold_last") {
        rule = Extension::hold_last;
      } else if (ext != "error") {
        throw ParseError("unknown table extension '" + std::string(ext) + "'");
      }
    }
    std::vector<double> v;
    while (!values.empty()) {
      const auto comma = values.find(',');
      v.push_back(parse_number(values.substr(0, comma), descriptor));
      values = comma == std::string_view::npos ? std::string_view{} : values.substr(comma + 1);
    }
    return table(std::move(v), rule);
  }
  throw ParseError("unknown weight family '" + std::string(family) + "'");
}

double zeta(double s) {
  if (!(s > 1.0)) throw DomainError("zeta requires s > 1");
  constexpr int kTerms = 100;
  double sum = 0.0;
  for (int k = kTerms - 1; k >= 1; --k) sum += std::pow(k, -s);
  const double K = kTerms;
  // Euler-Maclaurin tail for sum_{k>=K} k^{-s}.
  sum += std::pow(K, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(K, -s);
  sum += s / 12.0 * std::pow(K, -s - 1.0);
  sum -= s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(K, -s - 3.0);
  sum += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) / 30240.0 * std::pow(K, -s - 5.0);
  return sum;
}

WeightSequence WeightSequence::dirichlet() {
  WeightSequence w;
  w.family_ = WeightFamily::dirichlet;
  return w;
}

WeightSequence WeightSequence::sobolev_square() {
  WeightSequence w;
  w.family_ = WeightFamily::sobolev_square;
  return w;
}

WeightSequence WeightSequence::constant_step(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidWeight("constant_step requires a finite step c > 0");
  WeightSequence w;
  w.family_ = WeightFamily::constant_step;
  w.param_ = c;
  return w;
}

WeightSequence WeightSequence::indicator(std::size_t k) {
  if (k < 1) throw InvalidWeight("indicator weight requires k >= 1 (gamma_0 must vanish)");
  WeightSequence w;
  w.family_ = WeightFamily::indicator;
  w.k_ = k;
  w.limit_ = 1.0;
  w.tail_sum_ = static_cast<double>(k);
  return w;
}

WeightSequence WeightSequence::concave_power_sum(int beta) {
  if (beta < 1) throw InvalidWeight("concave_power_sum requires an integer beta >= 1");
  WeightSequence w;
  w.family_ = WeightFamily::concave_power_sum;
  w.beta_ = beta;
  if (beta >= 2) w.limit_ = zeta(beta);
  // sum_n (M - gamma_n) = sum_k k * k^{-beta} = zeta(beta - 1)
  if (beta >= 3) w.tail_sum_ = zeta(beta - 1);
  return w;
}

WeightSequence WeightSequence::table(std::vector<double> values, Extension rule) {
  if (values.empty()) throw InvalidWeight("weight table is empty");
  if (values.front() != 0.0) throw InvalidWeight("weight table must start with gamma_0 = 0");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) throw InvalidWeight("weight table has a non-finite entry");
    if (i > 0 && values[i] < values[i - 1]) {
      throw InvalidWeight("weight table is not monotone at index " + std::to_string(i));
    }
  }
  if (values.back() == 0.0) throw InvalidWeight("weight table is identically zero");
  WeightSequence w;
  w.family_ = WeightFamily::table;
  w.extension_ = rule;
  if (rule == Extension::hold_last) {
    const double m = values.back();
    double tail = 0.0;
    for (double v : values) tail += m - v;
    w.limit_ = m;
    w.tail_sum_ = tail;
  }
  w.table_ = std::move(values);
  return w;
}

double WeightSequence::gamma_at(std::size_t n) const {
  switch (family_) {
    case WeightFamily::dirichlet:
      return static_cast<double>(n);
    case WeightFamily::sobolev_square:
      return static_cast<double>(n) * static_cast<double>(n);
    case WeightFamily::constant_step:
      return param_ * static_cast<double>(n);
    case WeightFamily::indicator:
      return n >= k_ ? 1.0 : 0.0;
    case WeightFamily::concave_power_sum: {
      double s = 0.0;
      for (std::size_t j = n; j >= 1; --j) s += std::pow(static_cast<double>(j), -beta_);
      return s;
    }
    case WeightFamily::table:
      if (n < table_.size()) return table_[n];
      if (extension_ == Extension::hold_last) return table_.back();
      throw IndexError("weight table has " + std::to_string(table_.size()) + " entries; index " +
                       std::to_string(n) + " requested");
  }
  return 0.0;
}

double WeightSequence::step_at(std::size_t n) const {
  switch (family_) {
    case WeightFamily::dirichlet:
      return 1.0;
    case WeightFamily::sobolev_square:
      return 2.0 * static_cast<double>(n) + 1.0;
    case WeightFamily::constant_step:
      return param_;
    case WeightFamily::indicator:
      return n + 1 == k_ ? 1.0 : 0.0;
    case WeightFamily::concave_power_sum:
      return std::pow(static_cast<double>(n + 1), -beta_);
    case WeightFamily::table:
      return gamma_at(n + 1) - gamma_at(n);
  }
  return 0.0;
}

std::vector<double> WeightSequence::gammas(std::size_t count) const {
  std::vector<double> out(count);
  if (family_ == WeightFamily::concave_power_sum) {
    double s = 0.0;
    for (std::size_t n = 0; n < count; ++n) {
      out[n] = s;
      s += std::pow(static_cast<double>(n + 1), -beta_);
    }
    return out;
  }
  for (std::size_t n = 0; n < count; ++n) out[n] = gamma_at(n);
  return out;
}

std::vector<double> WeightSequence::steps(std::size_t count) const {
  std::vector<double> out(count);
  for (std::size_t n = 0; n < count; ++n) out[n] = step_at(n);
  return out;
}

std::string WeightSequence::describe() const {
  switch (family_) {
    case WeightFamily::dirichlet:
      return "dirichlet";
    case WeightFamily::sobolev_square:
      return "sobolev_square";
    case WeightFamily::constant_step:
      return "constant_step:" + format_double(param_);
    case WeightFamily::indicator:
      return "indicator:" + std::to_string(k_);
    case WeightFamily::concave_power_sum:
      return "concave_power_sum:" + std::to_string(beta_);
    case WeightFamily::table: {
      std::string s = "table:";
      for (std::size_t i = 0; i < table_.size(); ++i) {
        if (i) s += ',';
        s += format_double(table_[i]);
      }
      s += extension_ == Extension::hold_last ? ":hold_last" : ":error";
      return s;
    }
  }
  return "unknown";
}

std::size_t default_horizon(const Series& f) noexcept { return std::max<std::size_t>(f.degree_cap() + 2, 64); }

GrowthClass classify_sampled(const WeightSequence& w, std::size_t horizon) {
  if (horizon < 2) throw DomainError("classification horizon must be at least 2");
  std::size_t count = horizon + 3;
  if (w.family() == WeightFamily::table && w.extension() == Extension::error) {
    count = std::min(count, w.table_values().size());
  }
  const std::vector<double> g = w.gammas(count);
  double scale = 1.0;
  for (double v : g) scale = std::max(scale, std::abs(v));
  const double tol = 1e-12 * scale;

  GrowthClass c;
  c.convex = true;
  c.concave = true;
  for (std::size_t n = 0; n + 2 < g.size(); ++n) {
    const double d2 = g[n + 2] - 2.0 * g[n + 1] + g[n];
    if (d2 < -tol) c.convex = false;
    if (d2 > tol) c.concave = false;
  }
  c.constant_step = c.convex && c.concave;
  c.limit = w.limit();
  c.bounded = c.limit.has_value();
  c.tail_summable = w.tail_sum().has_value();
  return c;
}

GrowthClass classify(const WeightSequence& w, std::size_t horizon) {
  if (horizon < 2) throw DomainError("classification horizon must be at least 2");
  GrowthClass c;
  c.limit = w.limit();
  c.bounded = c.limit.has_value();
  c.tail_summable = w.tail_sum().has_value();
  switch (w.family()) {
    case WeightFamily::dirichlet:
    case WeightFamily::constant_step:
      c.convex = c.concave = c.constant_step = true;
      return c;
    case WeightFamily::sobolev_square:
      c.convex = true;
      return c;
    case WeightFamily::concave_power_sum:
      c.concave = true;
      return c;
    case WeightFamily::indicator:
      // Gamma_n is the unit impulse at n = k-1: nonincreasing only when k = 1.
      c.concave = w.index() == 1;
      return c;
    case WeightFamily::table:
      return classify_sampled(w, horizon);
  }
  return c;
}

double x_norm_sq(const Series& f, const WeightSequence& w) {
  const std::vector<double> g = w.gammas(f.size());
  double s = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) s += g[j] * std::norm(f[j]);
  return s;
}

double y_seminorm_sq(const Series& f, const WeightSequence& w) {
  double s = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) s += w.step_at(j) * std::norm(f[j]);
  return s;
}

}  // namespace hardy
