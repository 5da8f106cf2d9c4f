#include "mellin/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mellin/bandlimited.hpp"
#include "mellin/corpus.hpp"
#include "mellin/error.hpp"
#include "mellin/io.hpp"
#include "mellin/kernels.hpp"
#include "mellin/paley_wiener.hpp"
#include "mellin/transform.hpp"
#include "mellin/verify.hpp"

namespace mellin::cli {

namespace {

using nlohmann::json;

// A failed --strict check; maps to exit code 3.
struct StrictFailure {};

struct Context {
  const RunConfig& cfg;
  std::ostream& out;
  std::ostream& err;

  void warn(const std::string& message) const {
    if (cfg.verbosity > 0) err << "warning: " << message << '\n';
  }
  void info(const std::string& message) const {
    if (cfg.verbosity > 1) err << message << '\n';
  }
  // Diagnostics are warnings, or a failure under --strict.
  void diagnose(const std::vector<std::string>& messages) const {
    for (const auto& m : messages) warn(m);
    if (cfg.strict && !messages.empty()) throw StrictFailure{};
  }
  void emit(const std::string& text) const {
    if (cfg.out.empty()) {
      out << text;
    } else {
      io::write_file(cfg.out, text);
      info("wrote " + cfg.out);
    }
  }
};

std::istringstream open_input(const std::string& path, const char* flag) {
  if (path.empty()) throw ValidationError(std::string("missing required option ") + flag);
  return std::istringstream(io::read_file(path));
}

GeometricGrid config_grid(const RunConfig& cfg) { return {cfg.u_min, cfg.u_max, cfg.n}; }

BandlimitedModel config_model(const RunConfig& cfg) {
  if (!cfg.density.empty()) {
    auto in = open_input(cfg.density, "--density");
    return BandlimitedModel(cfg.c.value_or(0.0), io::read_density_csv(in));
  }
  if (!cfg.model.empty()) {
    const auto model = corpus::by_name(cfg.model);
    return cfg.c ? model.with_c(*cfg.c) : model;
  }
  if (!(cfg.T > 0.0)) throw ValidationError("--T must be positive");
  return BandlimitedModel(cfg.c.value_or(0.0), corpus::box_density(cfg.T));
}

std::vector<double> evaluation_points(const RunConfig& cfg) {
  if (cfg.x.empty()) return config_grid(cfg).points();
  for (double x : cfg.x) {
    if (!(x > 0.0)) throw ValidationError("--x values must be positive");
  }
  return cfg.x;
}

struct PointRow {
  double x;
  Complex value;
  double error_estimate;
};

std::string point_table(const std::vector<PointRow>& rows, const std::string& format, std::optional<int> K) {
  std::ostringstream s;
  if (format == "json") {
    s << '[';
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      s << (i ? ", " : "") << "{\"x\": " << io::format_number(r.x) << ", \"re\": " << io::format_number(r.value.real())
        << ", \"im\": " << io::format_number(r.value.imag())
        << ", \"error_estimate\": " << io::format_number(r.error_estimate);
      if (K) s << ", \"K\": " << *K;
      s << '}';
    }
    s << "]\n";
    return s.str();
  }
  s << "x,re,im,error_estimate" << (K ? ",K" : "") << '\n';
  for (const auto& r : rows) {
    s << io::format_number(r.x) << ',' << io::format_number(r.value.real()) << ',' << io::format_number(r.value.imag())
      << ',' << io::format_number(r.error_estimate);
    if (K) s << ',' << *K;
    s << '\n';
  }
  return s.str();
}

void write_signal(const Context& ctx, const SampledSignal& signal) {
  std::ostringstream csv;
  io::write_signal_csv(csv, signal);
  ctx.emit(csv.str());
  if (!ctx.cfg.meta.empty()) {
    std::ostringstream meta;
    io::write_meta(meta, io::meta_of(signal));
    io::write_file(ctx.cfg.meta, meta.str());
  }
}

void cmd_transform(const Context& ctx) {
  const auto& cfg = ctx.cfg;
  auto meta_in = open_input(cfg.meta, "--meta");
  const auto meta = io::read_meta(meta_in);
  if (cfg.c && *cfg.c != meta.c) throw ValidationError("--c disagrees with the sidecar c");
  auto in = open_input(cfg.in, "--in");
  const auto signal = io::read_signal_csv(in, meta);
  const auto spectrum = mellin_forward(signal, {cfg.t_max, cfg.m});
  ctx.diagnose(spectrum.diagnostics());
  std::ostringstream csv;
  io::write_spectrum_csv(csv, spectrum);
  ctx.emit(csv.str());
}

void cmd_inverse(const Context& ctx) {
  const auto& cfg = ctx.cfg;
  auto in = open_input(cfg.in, "--in");
  const auto spectrum = io::read_spectrum_csv(in, cfg.c.value_or(0.0));
  write_signal(ctx, mellin_inverse(spectrum, config_grid(cfg)));
}

void cmd_synth(const Context& ctx) {
  write_signal(ctx, synthesize_on_grid(config_model(ctx.cfg), config_grid(ctx.cfg)));
}

void cmd_sample(const Context& ctx) {
  const auto& cfg = ctx.cfg;
  const auto model = config_model(cfg);
  if (!sampling_is_adequate(model.band_edge(), cfg.sigma)) {
    ctx.warn("band edge exceeds pi * sigma, aliasing expected");
  }
  std::ostringstream s;
  io::write_samples_json(s, exp_sample(model, cfg.sigma, cfg.K));
  ctx.emit(s.str());
}

void cmd_reconstruct(const Context& ctx) {
  const auto& cfg = ctx.cfg;
  auto in = open_input(cfg.samples.empty() ? cfg.in : cfg.samples, "--samples");
  const auto samples = io::read_samples_json(in);
  std::vector<PointRow> rows;
  for (double x : evaluation_points(cfg)) {
    const auto r = exp_reconstruct(samples, x);
    rows.push_back({x, r.value, r.error_estimate});
  }
  ctx.emit(point_table(rows, cfg.format, samples.K()));
}

void cmd_kernel_apply(const Context& ctx) {
  const auto& cfg = ctx.cfg;
  const auto model = config_model(cfg);
  KernelQuadrature quad = default_kernel_quadrature();
  std::vector<PointRow> rows;
  std::vector<std::string> warnings;
  for (double x : evaluation_points(cfg)) {
    const auto r = kernel_apply(model, cfg.sigma, x, quad);
    rows.push_back({x, r.value, r.error_estimate});
    for (const auto& w : r.warnings) warnings.push_back("x=" + io::format_number(x) + ": " + w);
  }
  ctx.diagnose(warnings);
  ctx.emit(point_table(rows, cfg.format, std::nullopt));
}

void cmd_estimate_bw(const Context& ctx) {
  const auto& cfg = ctx.cfg;
  BandwidthEstimate estimate;
  if (!cfg.in.empty()) {
    auto in = open_input(cfg.in, "--in");
    estimate = estimate_bandwidth(io::read_spectrum_csv(in, cfg.c.value_or(0.0)), cfg.r_max);
  } else {
    estimate = estimate_bandwidth(config_model(cfg), cfg.r_max);
  }
  ctx.diagnose(estimate.warnings);
  std::ostringstream s;
  io::write_bandwidth_json(s, estimate);
  ctx.emit(s.str());
}

bool cmd_verify(const Context& ctx) {
  const bool json_out = ctx.cfg.format == "json";
  if (!json_out) {
    ctx.out << "module           status  invariant\n";
    ctx.out.flush();
  }
  auto results = verify::run_invariant_suite([&](const verify::CheckResult& r) {
    if (json_out) return;
    char line[256];
    std::snprintf(line, sizeof line, "%-16s %-6s  %s", r.module.c_str(), r.pass ? "pass" : "FAIL", r.name.c_str());
    ctx.out << line << "  [" << r.detail << "]\n";
    ctx.out.flush();
  });
  bool all = true;
  json table = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    table.push_back({{"module", r.module}, {"invariant", r.name}, {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}});
  }
  if (json_out) {
    ctx.emit(table.dump(2) + "\n");
  } else {
    ctx.out << (all ? "all invariants pass\n" : "some invariants FAIL\n");
  }
  return all;
}

void add_model_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--density", cfg.density, "spectral density CSV (t,re,im)");
  sub->add_option("--model", cfg.model, "built-in corpus model name");
  sub->add_option("--T", cfg.T, "band edge of the default box density");
}

void add_grid_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--umin", cfg.u_min, "grid start in log x");
  sub->add_option("--umax", cfg.u_max, "grid end in log x");
  sub->add_option("--n", cfg.n, "grid point count");
}

void add_c_option(CLI::App* sub, RunConfig& cfg) {
  sub->add_option_function<double>("--c", [&cfg](double c) { cfg.c = c; }, "Mellin parameter");
}

}  // namespace

std::string to_json(const RunConfig& cfg) {
  json j = {{"command", cfg.command}, {"in", cfg.in},         {"meta", cfg.meta},     {"out", cfg.out},
            {"density", cfg.density}, {"model", cfg.model},   {"samples", cfg.samples}, {"T", cfg.T},
            {"sigma", cfg.sigma},     {"K", cfg.K},           {"r_max", cfg.r_max},   {"u_min", cfg.u_min},
            {"u_max", cfg.u_max},     {"n", cfg.n},           {"t_max", cfg.t_max},   {"m", cfg.m},
            {"x", cfg.x},             {"format", cfg.format}, {"verbosity", cfg.verbosity}, {"strict", cfg.strict}};
  j["c"] = cfg.c ? json(*cfg.c) : json(nullptr);
  return j.dump(2) + "\n";
}

RunConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("config JSON must be an object");
  RunConfig cfg;
  auto read = [&j](const char* key, auto& field) {
    if (!j.contains(key)) return;
    try {
      j.at(key).get_to(field);
    } catch (const json::exception&) {
      throw ValidationError(std::string("config field '") + key + "' has the wrong type");
    }
  };
  read("command", cfg.command);
  read("in", cfg.in);
  read("meta", cfg.meta);
  read("out", cfg.out);
  read("density", cfg.density);
  read("model", cfg.model);
  read("samples", cfg.samples);
  read("T", cfg.T);
  read("sigma", cfg.sigma);
  read("K", cfg.K);
  read("r_max", cfg.r_max);
  read("u_min", cfg.u_min);
  read("u_max", cfg.u_max);
  read("n", cfg.n);
  read("t_max", cfg.t_max);
  read("m", cfg.m);
  read("x", cfg.x);
  read("format", cfg.format);
  read("verbosity", cfg.verbosity);
  read("strict", cfg.strict);
  if (j.contains("c") && !j["c"].is_null()) {
    double c = 0.0;
    read("c", c);
    cfg.c = c;
  }
  return cfg;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string config_path;
  std::string save_config;

  // --config is applied first so that explicit flags override it.
  for (std::size_t i = 1; i + 1 < argv.size(); ++i) {
    if (argv[i] == "--config") config_path = argv[i + 1];
  }

  CLI::App app{"Mellin-transform analysis toolkit", "mellin_kit"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "expand help for every subcommand");

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"transform", "signal CSV -> spectrum CSV"},
      {"inverse", "spectrum CSV -> signal CSV"},
      {"synth", "bandlimited model -> signal CSV"},
      {"sample", "bandlimited model -> exponential samples JSON"},
      {"reconstruct", "samples JSON -> values by the sampling series"},
      {"kernel-apply", "bandlimited model -> values by the reproducing kernel"},
      {"estimate-bw", "spectrum CSV or model -> bandwidth estimate JSON"},
      {"verify", "run the invariant suite on the built-in corpus"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", config_path, "load a RunConfig JSON before the flags");
    sub->add_option("--save-config", save_config, "write the effective RunConfig JSON");
    sub->add_option("--out", cfg.out, "output path (stdout when absent)");
    sub->add_option("--format", cfg.format, "csv | json for tabular output")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--verbosity", cfg.verbosity, "0 quiet, 1 warnings, 2 progress");
    sub->add_flag("--strict", cfg.strict, "treat numerical diagnostics as failures");
    const std::string name = c.name;
    if (name == "transform") {
      sub->add_option("--in", cfg.in, "signal CSV (x,re,im)");
      sub->add_option("--meta", cfg.meta, "signal JSON sidecar");
      sub->add_option("--tmax", cfg.t_max, "spectrum half-width");
      sub->add_option("--m", cfg.m, "spectrum point count (odd)");
      add_c_option(sub, cfg);
    } else if (name == "inverse") {
      sub->add_option("--in", cfg.in, "spectrum CSV (t,re,im)");
      sub->add_option("--meta", cfg.meta, "where to write the signal JSON sidecar");
      add_c_option(sub, cfg);
      add_grid_options(sub, cfg);
    } else if (name == "synth") {
      sub->add_option("--meta", cfg.meta, "where to write the signal JSON sidecar");
      add_c_option(sub, cfg);
      add_model_options(sub, cfg);
      add_grid_options(sub, cfg);
    } else if (name == "sample") {
      add_c_option(sub, cfg);
      add_model_options(sub, cfg);
      sub->add_option("--sigma", cfg.sigma, "sampling rate");
      sub->add_option("--K", cfg.K, "truncation radius");
    } else if (name == "reconstruct") {
      sub->add_option("--samples,--in", cfg.samples, "samples JSON");
      sub->add_option("--x", cfg.x, "evaluation points")->delimiter(',');
      add_grid_options(sub, cfg);
    } else if (name == "kernel-apply") {
      add_c_option(sub, cfg);
      add_model_options(sub, cfg);
      sub->add_option("--sigma", cfg.sigma, "kernel rate");
      sub->add_option("--x", cfg.x, "evaluation points")->delimiter(',');
      add_grid_options(sub, cfg);
    } else if (name == "estimate-bw") {
      sub->add_option("--in", cfg.in, "spectrum CSV (t,re,im)");
      add_c_option(sub, cfg);
      add_model_options(sub, cfg);
      sub->add_option("--rmax", cfg.r_max, "highest derivative order");
    }
  }

  try {
    if (!config_path.empty()) cfg = config_from_json(io::read_file(config_path));
    std::vector<std::string> args(argv.rbegin(), argv.rend() - (argv.empty() ? 0 : 1));
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  const Context ctx{cfg, out, err};
  try {
    kernels::apply_thread_cap_from_env();
    if (!save_config.empty()) io::write_file(save_config, to_json(cfg));
    if (cfg.command == "transform") cmd_transform(ctx);
    else if (cfg.command == "inverse") cmd_inverse(ctx);
    else if (cfg.command == "synth") cmd_synth(ctx);
    else if (cfg.command == "sample") cmd_sample(ctx);
    else if (cfg.command == "reconstruct") cmd_reconstruct(ctx);
    else if (cfg.command == "kernel-apply") cmd_kernel_apply(ctx);
    else if (cfg.command == "estimate-bw") cmd_estimate_bw(ctx);
    else if (cfg.command == "verify") return cmd_verify(ctx) ? kOk : kNumerical;
  } catch (const StrictFailure&) {
    err << "error: diagnostics present and --strict is set\n";
    return kNumerical;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kOk;
}

}  // namespace mellin::cli
