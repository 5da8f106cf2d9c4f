#include "mellin/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mellin/error.hpp"

namespace mellin::io {

namespace {

using nlohmann::json;

struct Row {
  double key;
  Complex value;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_field(const std::string& text, std::size_t line, const char* field) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ValidationError("line " + std::to_string(line) + ": field '" + field + "' is not a number: '" + text + "'");
  }
  if (!std::isfinite(v)) {
    throw ValidationError("line " + std::to_string(line) + ": field '" + field + "' is not finite");
  }
  return v;
}

// Reads a three-column CSV with the given header; blank lines are skipped.
std::vector<Row> read_rows(std::istream& in, const std::string& key_name) {
  const std::string header = key_name + ",re,im";
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (!seen_header) {
      if (text != header) {
        throw ValidationError("line " + std::to_string(line_no) + ": expected header '" + header + "'");
      }
      seen_header = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (text.back() == ',') fields.emplace_back();
    if (fields.size() != 3) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected 3 fields, found " +
                            std::to_string(fields.size()));
    }
    rows.push_back({parse_field(fields[0], line_no, key_name.c_str()),
                    {parse_field(fields[1], line_no, "re"), parse_field(fields[2], line_no, "im")}});
  }
  if (!seen_header) throw ValidationError("line 1: missing header '" + header + "'");
  return rows;
}

void write_rows(std::ostream& out, const std::string& key_name, std::span<const double> keys,
                std::span<const Complex> values) {
  out << key_name << ",re,im\n";
  for (std::size_t j = 0; j < keys.size(); ++j) {
    out << format_number(keys[j]) << ',' << format_number(values[j].real()) << ','
        << format_number(values[j].imag()) << '\n';
  }
}

json parse_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

const json& require(const json& j, const char* field) {
  if (!j.is_object()) throw ValidationError("JSON: expected an object");
  auto it = j.find(field);
  if (it == j.end()) throw ValidationError(std::string("JSON: missing field '") + field + "'");
  return *it;
}

double number_field(const json& j, const char* field) {
  const json& v = require(j, field);
  if (!v.is_number()) throw ValidationError(std::string("JSON: field '") + field + "' must be a number");
  return v.get<double>();
}

long long integer_field(const json& j, const char* field) {
  const json& v = require(j, field);
  if (!v.is_number_integer()) throw ValidationError(std::string("JSON: field '") + field + "' must be an integer");
  return v.get<long long>();
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) throw ValidationError("cannot format a non-finite number");
  if (v == 0.0) v = 0.0;  // prints -0 as 0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SignalMeta meta_of(const SampledSignal& signal) {
  const auto& g = signal.grid();
  return {signal.c(), g.u_min(), g.u_max(), g.size()};
}

void write_meta(std::ostream& out, const SignalMeta& meta) {
  out << "{\"c\": " << format_number(meta.c) << ", \"u_min\": " << format_number(meta.u_min)
      << ", \"u_max\": " << format_number(meta.u_max) << ", \"n\": " << meta.n << "}\n";
}

SignalMeta read_meta(std::istream& in) {
  const json j = parse_json(in);
  SignalMeta meta;
  meta.c = number_field(j, "c");
  meta.u_min = number_field(j, "u_min");
  meta.u_max = number_field(j, "u_max");
  const long long n = integer_field(j, "n");
  if (n < 2) throw ValidationError("JSON: field 'n' must be at least 2");
  meta.n = static_cast<std::size_t>(n);
  meta.grid();
  return meta;
}

void write_signal_csv(std::ostream& out, const SampledSignal& signal) {
  write_rows(out, "x", signal.grid().points(), signal.values());
}

SampledSignal read_signal_csv(std::istream& in, const SignalMeta& meta) {
  const GeometricGrid grid = meta.grid();
  const auto rows = read_rows(in, "x");
  if (rows.size() != grid.size()) {
    throw ValidationError("signal has " + std::to_string(rows.size()) + " rows but the grid has " +
                          std::to_string(grid.size()) + " points");
  }
  std::vector<Complex> values(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const double x = grid.x(j);
    if (std::abs(rows[j].key - x) > 1e-12 * x) {
      throw ValidationError("line " + std::to_string(j + 2) + ": field 'x' does not match the grid point " +
                            format_number(x));
    }
    values[j] = rows[j].value;
  }
  return SampledSignal(grid, meta.c, std::move(values));
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum) {
  write_rows(out, "t", spectrum.t_points(), spectrum.values());
}

Spectrum read_spectrum_csv(std::istream& in, double c) {
  const auto rows = read_rows(in, "t");
  const std::size_t m = rows.size();
  if (m < 3 || m % 2 == 0) throw ValidationError("spectrum needs an odd number of rows, at least 3");
  const double t_max = rows.back().key;
  if (!(t_max > 0.0)) throw ValidationError("spectrum t column must end at a positive t_max");
  std::vector<Complex> values(m);
  const double dt = 2.0 * t_max / static_cast<double>(m - 1);
  for (std::size_t j = 0; j < m; ++j) {
    const double expected = (static_cast<double>(j) - static_cast<double>(m / 2)) * dt;
    if (std::abs(rows[j].key - expected) > 1e-9 * dt) {
      throw ValidationError("line " + std::to_string(j + 2) + ": field 't' is off the symmetric uniform grid");
    }
    values[j] = rows[j].value;
  }
  return Spectrum(c, t_max, std::move(values));
}

SpectralDensity read_density_csv(std::istream& in) {
  const auto rows = read_rows(in, "t");
  std::vector<double> t(rows.size());
  std::vector<Complex> v(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    t[j] = rows[j].key;
    v[j] = rows[j].value;
  }
  return SpectralDensity::from_samples(std::move(t), std::move(v));
}

void write_density_csv(std::ostream& out, const SpectralDensity& density, std::size_t m) {
  if (m < 2) throw ValidationError("density output needs at least 2 points");
  const double T = density.band_edge();
  std::vector<double> t(m);
  std::vector<Complex> v(m);
  for (std::size_t j = 0; j < m; ++j) {
    t[j] = j + 1 == m ? T : -T + 2.0 * T * static_cast<double>(j) / static_cast<double>(m - 1);
    v[j] = density(t[j]);
  }
  write_rows(out, "t", t, v);
}

void write_samples_json(std::ostream& out, const ExpSampleSet& samples) {
  out << "{\"c\": " << format_number(samples.c()) << ", \"sigma\": " << format_number(samples.sigma())
      << ", \"K\": " << samples.K() << ", \"samples\": [";
  const auto s = samples.samples();
  for (std::size_t j = 0; j < s.size(); ++j) {
    out << (j ? ", " : "") << '[' << format_number(s[j].real()) << ", " << format_number(s[j].imag()) << ']';
  }
  out << "]}\n";
}

ExpSampleSet read_samples_json(std::istream& in) {
  const json j = parse_json(in);
  const double c = number_field(j, "c");
  const double sigma = number_field(j, "sigma");
  const long long K = integer_field(j, "K");
  if (K < 1 || K > 10'000'000) throw ValidationError("JSON: field 'K' out of range");
  const json& arr = require(j, "samples");
  if (!arr.is_array()) throw ValidationError("JSON: field 'samples' must be an array");
  if (arr.size() != static_cast<std::size_t>(2 * K + 1)) {
    throw ValidationError("JSON: field 'samples' must hold 2K+1 entries");
  }
  std::vector<Complex> values;
  values.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& p = arr[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw ValidationError("JSON: samples[" + std::to_string(i) + "] must be [re, im]");
    }
    values.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return ExpSampleSet(c, sigma, static_cast<int>(K), std::move(values));
}

void write_bandwidth_json(std::ostream& out, const BandwidthEstimate& estimate) {
  out << "{\"method\": " << quoted(estimate.method) << ", \"T_hat\": " << format_number(estimate.T_hat)
      << ", \"stabilized_at\": " << estimate.stabilized_at << ", \"per_order\": [";
  for (std::size_t i = 0; i < estimate.per_order.size(); ++i) {
    const auto& o = estimate.per_order[i];
    out << (i ? ", " : "") << "{\"r\": " << o.r << ", \"root\": " << format_number(o.root) << ", \"ratio\": "
        << (o.ratio ? format_number(*o.ratio) : std::string("null")) << '}';
  }
  out << "], \"warnings\": [";
  for (std::size_t i = 0; i < estimate.warnings.size(); ++i) {
    out << (i ? ", " : "") << quoted(estimate.warnings[i]);
  }
  out << "]}\n";
}

BandwidthEstimate read_bandwidth_json(std::istream& in) {
  const json j = parse_json(in);
  BandwidthEstimate e;
  const json& method = require(j, "method");
  if (!method.is_string()) throw ValidationError("JSON: field 'method' must be a string");
  e.method = method.get<std::string>();
  e.T_hat = number_field(j, "T_hat");
  if (j.contains("stabilized_at")) e.stabilized_at = static_cast<int>(integer_field(j, "stabilized_at"));
  const json& orders = require(j, "per_order");
  if (!orders.is_array()) throw ValidationError("JSON: field 'per_order' must be an array");
  for (const json& o : orders) {
    BandwidthOrder order{static_cast<int>(integer_field(o, "r")), number_field(o, "root"), std::nullopt};
    if (o.contains("ratio") && !o["ratio"].is_null()) order.ratio = number_field(o, "ratio");
    e.per_order.push_back(order);
  }
  if (j.contains("warnings")) {
    for (const json& w : j["warnings"]) {
      if (!w.is_string()) throw ValidationError("JSON: field 'warnings' must hold strings");
      e.warnings.push_back(w.get<std::string>());
    }
  }
  return e;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw ValidationError("write failed for '" + path.string() + "'");
}

}  // namespace mellin::io
