#include "hardy_cli/cli.hpp"

#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hardy/blaschke.hpp"
#include "hardy/errors.hpp"
#include "hardy/io.hpp"
#include "hardy/signal.hpp"
#include "hardy/unwind.hpp"
#include "hardy/verify.hpp"
#include "hardy/weights.hpp"

namespace hardy::cli {

namespace {

using json = nlohmann::json;

bool has_extension(const std::string& path, const char* ext) {
  return std::filesystem::path(path).extension() == ext;
}

void require_input(const CommandConfig& c) {
  if (c.input.empty()) throw InvalidSpec("--input is required");
  if (!std::filesystem::exists(c.input)) throw InvalidSpec("input file '" + c.input + "' does not exist");
}

std::vector<double> load_signal(const std::string& path) { return io::signal_from_csv(io::read_file(path)); }

// JSON coefficients, or a CSV signal turned into its analytic signal.
Series load_series(const CommandConfig& c) {
  require_input(c);
  if (has_extension(c.input, ".csv")) {
    const BoundarySignal s(load_signal(c.input));
    return analytic_signal(s, c.cap.value_or(s.size() / 2 - 1));
  }
  return io::series_from_json(io::read_file(c.input));
}

WeightSequence load_weight(const std::string& arg) {
  if (has_extension(arg, ".json") && std::filesystem::exists(arg)) return io::weight_from_json(io::read_file(arg));
  return WeightSequence::parse(arg);
}

RootOptions root_options(const CommandConfig& c) {
  RootOptions o;
  o.root_residual_tol = c.root_tol;
  return o;
}

VerifyOptions verify_options(const CommandConfig& c) {
  VerifyOptions o;
  o.roots = root_options(c);
  o.tol = c.tol;
  return o;
}

struct Output {
  std::string text;
  int code = kOk;
};

Output reports_output(const std::vector<VerificationReport>& reports) {
  Output o;
  for (const VerificationReport& r : reports) {
    o.text += io::report_to_json(r) + "\n";
    if (!r.pass) o.code = kVerificationFailed;
  }
  return o;
}

Output run_verify(const CommandConfig& c) {
  if (c.claim.empty()) throw InvalidSpec("--claim is required");
  const Claim claim = claim_from_string(c.claim);
  const VerifyOptions opts = verify_options(c);
  std::vector<VerificationReport> reports;

  if (claim == Claim::theorem3_truncated) {
    if (c.roots.empty()) throw InvalidSpec("theorem3_truncated needs --roots");
    if (!std::filesystem::exists(c.roots)) throw InvalidSpec("roots file '" + c.roots + "' does not exist");
    const RootSet roots = io::roots_from_json(io::read_file(c.roots));
    const Series g = load_series(c);
    std::vector<std::size_t> caps = c.caps;
    if (caps.empty()) caps.push_back(roots.size());
    Theorem3Options t3;
    t3.verify = opts;
    return reports_output(verify_theorem3_truncated(roots, g, load_weight(c.weight), caps, t3));
  }

  const Series f = load_series(c);
  switch (claim) {
    case Claim::prop_reflect:
      reports = verify_prop_reflect(f, load_weight(c.weight), opts);
      break;
    case Claim::single_root:
      reports.push_back(verify_single_root(f, load_weight(c.weight), opts));
      break;
    case Claim::lemma10_chain:
      reports = verify_lemma10_chain(f, load_weight(c.weight), opts);
      break;
    case Claim::theorem1:
      reports.push_back(verify_theorem1(f, load_weight(c.weight), opts));
      break;
    case Claim::corollary1:
      reports.push_back(verify_corollary1(f, load_weight(c.weight), opts));
      break;
    case Claim::corollary2:
      reports.push_back(verify_corollary2(f, opts));
      break;
    case Claim::theorem2:
      reports.push_back(verify_theorem2(f, load_weight(c.weight), opts));
      break;
    case Claim::qian_tail_identity:
    case Claim::qian_tail_inequality: {
      std::size_t lo = 1;
      std::size_t hi = static_cast<std::size_t>(std::max(f.degree(), 1L));
      if (c.k) lo = hi = *c.k;
      for (std::size_t k = lo; k <= hi; ++k) {
        QianTailReports q = verify_qian_tail(f, k, opts);
        reports.push_back(claim == Claim::qian_tail_identity ? q.identity : q.inequality);
      }
      break;
    }
    case Claim::theorem3_truncated:
      break;
  }
  return reports_output(reports);
}

Output run_sweep_command(const CommandConfig& c) {
  SweepConfig sc;
  if (!c.claim.empty() && c.claim != "all") {
    sc.claims.clear();
    std::string_view rest = c.claim;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      sc.claims.push_back(claim_from_string(rest.substr(0, comma)));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  }
  sc.count = c.count;
  sc.seed = c.seed;
  sc.threads = c.threads;
  return reports_output(run_sweep(sc));
}

Output dispatch(const CommandConfig& c) {
  switch (c.subcommand) {
    case Subcommand::norms: {
      const Series f = load_series(c);
      const WeightSequence w = load_weight(c.weight);
      const json j{{"degree", f.degree()},
                   {"h2_norm_sq", h2_norm_sq(f)},
                   {"x_norm_sq", x_norm_sq(f, w)},
                   {"y_seminorm_sq", y_seminorm_sq(f, w)},
                   {"weight", w.describe()}};
      return {j.dump() + "\n"};
    }
    case Subcommand::roots: {
      const RootSearch found = find_roots_in_disk(load_series(c), root_options(c));
      return {io::roots_to_json(found.inside, found.near_boundary) + "\n"};
    }
    case Subcommand::decompose:
      return {io::chain_to_json(decompose(load_series(c), root_options(c))) + "\n"};
    case Subcommand::unwind: {
      UnwindOptions o;
      o.roots = root_options(c);
      const UnwindingExpansion e = unwind(load_series(c), c.depth, o);
      if (has_extension(c.output, ".csv")) return {io::expansion_to_csv(e)};
      return {io::expansion_to_json(e, c.full) + "\n"};
    }
    case Subcommand::signal: {
      require_input(c);
      if (has_extension(c.input, ".csv")) {
        const BoundarySignal s(load_signal(c.input));
        return {io::series_to_json(analytic_signal(s, c.cap.value_or(s.size() / 2 - 1))) + "\n"};
      }
      // Series in, real boundary samples out.
      const Series f = io::series_from_json(io::read_file(c.input));
      const std::size_t k = c.samples.value_or(std::max<std::size_t>(4, next_power_of_two(2 * f.size())));
      const std::vector<Complex> z = boundary_samples(f, k);
      std::vector<double> re;
      re.reserve(z.size());
      for (Complex v : z) re.push_back(v.real());
      return {io::samples_to_csv(re)};
    }
    case Subcommand::verify:
      return run_verify(c);
    case Subcommand::sweep:
      return run_sweep_command(c);
  }
  return {};
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  if (config.tol && !(*config.tol > 0.0)) {
    err << "error: --tol must be positive\n";
    return kUsageError;
  }
  if (config.root_tol && !(*config.root_tol > 0.0)) {
    err << "error: --root-tol must be positive\n";
    return kUsageError;
  }
  Output result;
  try {
    result = dispatch(config);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  if (config.output.empty()) {
    out << result.text;
  } else {
    try {
      io::write_file(config.output, result.text);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kUsageError;
    }
  }
  return result.code;
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blaschke decomposition, weighted Hardy norms and phase unwinding", "hardy"};
  app.require_subcommand(1);
  CommandConfig c;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input,-i", c.input, "Coefficient JSON or signal CSV")->required();
    sub->add_option("--output,-o", c.output, "Output path (default: standard output)");
    sub->add_option("--root-tol", c.root_tol, "Residual |f(alpha)| accepted as a root");
  };
  auto add_weight = [&](CLI::App* sub) {
    sub->add_option("--weight,-w", c.weight, "family[:param] or a weight JSON file")->capture_default_str();
  };
  auto add_cap = [&](CLI::App* sub) { sub->add_option("--cap", c.cap, "Degree cap for CSV signals"); };

  CLI::App* norms = app.add_subcommand("norms", "H2, X and Y norms of a series");
  add_io(norms);
  add_weight(norms);
  add_cap(norms);

  CLI::App* roots = app.add_subcommand("roots", "Roots inside the unit disk");
  add_io(roots);
  add_cap(roots);

  CLI::App* decomp = app.add_subcommand("decompose", "Blaschke decomposition chain");
  add_io(decomp);
  add_cap(decomp);

  CLI::App* unw = app.add_subcommand("unwind", "Phase unwinding expansion (CSV output when --output ends in .csv)");
  add_io(unw);
  add_cap(unw);
  unw->add_option("--depth,-d", c.depth, "Maximum number of unwinding steps")->capture_default_str();
  unw->add_flag("--full", c.full, "Include cumulative Blaschke factors and residuals");

  CLI::App* sig = app.add_subcommand("signal", "CSV signal to analytic series, or series to boundary samples");
  add_io(sig);
  add_cap(sig);
  sig->add_option("--samples", c.samples, "Boundary sample count when converting a series");

  CLI::App* ver = app.add_subcommand("verify", "Check one claim on one instance");
  add_io(ver);
  add_weight(ver);
  add_cap(ver);
  ver->add_option("--claim,-c", c.claim, "Claim name")->required();
  ver->add_option("--tol", c.tol, "Tolerance override");
  ver->add_option("--k", c.k, "Tail index for the qian_tail claims (default: every k)");
  ver->add_option("--roots", c.roots, "RootSet JSON for theorem3_truncated");
  ver->add_option("--caps", c.caps, "Root-count caps for theorem3_truncated")->delimiter(',');

  CLI::App* swp = app.add_subcommand("sweep", "Randomized verification sweep, one JSON line per report");
  swp->add_option("--claim,-c", c.claim, "'all' or a comma-separated claim list")->capture_default_str();
  swp->add_option("--count,-n", c.count, "Instances per claim")->capture_default_str();
  swp->add_option("--seed,-s", c.seed, "Base seed")->capture_default_str();
  swp->add_option("--threads,-t", c.threads, "Worker threads")->capture_default_str();
  swp->add_option("--output,-o", c.output, "Output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsageError;
  }

  const std::pair<CLI::App*, Subcommand> table[] = {
      {norms, Subcommand::norms}, {roots, Subcommand::roots}, {decomp, Subcommand::decompose},
      {unw, Subcommand::unwind},  {sig, Subcommand::signal},  {ver, Subcommand::verify},
      {swp, Subcommand::sweep},
  };
  for (const auto& [sub, kind] : table) {
    if (sub->parsed()) c.subcommand = kind;
  }
  return run(c, out, err);
}

}  // namespace hardy::cli
