#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "mellin/bandlimited.hpp"
#include "mellin/corpus.hpp"
#include "mellin/error.hpp"
#include "mellin/io.hpp"
#include "mellin/paley_wiener.hpp"
#include "mellin/transform.hpp"

using mellin::Complex;
namespace io = mellin::io;

namespace {

template <class F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const mellin::ValidationError& e) {
    return e.what();
  }
  return "<no error>";
}

mellin::SampledSignal small_signal() {
  const mellin::GeometricGrid grid(-3.0, 2.0, 11);
  return mellin::synthesize_on_grid(mellin::corpus::by_name("box-Tpi-c-1-shift"), grid);
}

}  // namespace

TEST(FormatNumber, RoundTripsAndNormalizes) {
  for (double v : {0.1, -2.5e-300, 1.0 / 3.0, 6.02214076e23, 2.2250738585072014e-308}) {
    EXPECT_EQ(std::stod(io::format_number(v)), v);
  }
  EXPECT_EQ(io::format_number(-0.0), "0");
  EXPECT_EQ(io::format_number(2.0), "2");
  EXPECT_THROW(io::format_number(INFINITY), mellin::ValidationError);
  EXPECT_THROW(io::format_number(std::nan("")), mellin::ValidationError);
}

TEST(SignalCsv, RoundTripIsExact) {
  const auto signal = small_signal();
  std::ostringstream csv, meta;
  io::write_signal_csv(csv, signal);
  io::write_meta(meta, io::meta_of(signal));
  std::istringstream meta_in(meta.str());
  const auto m = io::read_meta(meta_in);
  EXPECT_EQ(m, io::meta_of(signal));
  std::istringstream csv_in(csv.str());
  const auto back = io::read_signal_csv(csv_in, m);
  ASSERT_EQ(back.values().size(), signal.values().size());
  for (std::size_t j = 0; j < back.values().size(); ++j) EXPECT_EQ(back.values()[j], signal.values()[j]);
  EXPECT_EQ(back.c(), signal.c());
  EXPECT_EQ(csv.str().rfind("x,re,im\n", 0), 0u);
}

TEST(SignalCsv, MalformedRowsNameTheLineAndField) {
  const auto m = io::meta_of(small_signal());
  std::ostringstream csv;
  io::write_signal_csv(csv, small_signal());
  std::string text = csv.str();

  auto read = [&](const std::string& t) {
    return error_of([&] {
      std::istringstream in(t);
      io::read_signal_csv(in, m);
    });
  };
  EXPECT_NE(read("x,re\n1,2\n").find("line 1"), std::string::npos);
  // corrupt the 're' of the third data row (line 4)
  std::istringstream lines(text);
  std::string out, line;
  for (int i = 1; std::getline(lines, line); ++i) {
    if (i == 4) line = line.substr(0, line.find(',')) + ",abc,0";
    out += line + "\n";
  }
  const auto e = read(out);
  EXPECT_NE(e.find("line 4"), std::string::npos) << e;
  EXPECT_NE(e.find("'re'"), std::string::npos) << e;
  EXPECT_NE(read("x,re,im\n1,2\n").find("expected 3 fields"), std::string::npos);
  EXPECT_NE(read("x,re,im\n1,2,inf\n").find("'im'"), std::string::npos);
  EXPECT_NE(read("x,re,im\n1,2,3\n").find("rows"), std::string::npos);
}

TEST(SignalCsv, GridMismatchIsRejected) {
  const auto signal = small_signal();
  std::ostringstream csv;
  io::write_signal_csv(csv, signal);
  auto m = io::meta_of(signal);
  m.u_max = 2.5;
  std::istringstream in(csv.str());
  const auto e = error_of([&] { io::read_signal_csv(in, m); });
  EXPECT_NE(e.find("'x'"), std::string::npos) << e;
}

TEST(Meta, Validation) {
  auto read = [](const std::string& t) {
    return error_of([&] {
      std::istringstream in(t);
      io::read_meta(in);
    });
  };
  EXPECT_NE(read("{\"c\": 0").find("malformed JSON"), std::string::npos);
  EXPECT_NE(read("{\"c\": 0, \"u_min\": -1, \"u_max\": 1}").find("'n'"), std::string::npos);
  EXPECT_NE(read("{\"c\": \"x\", \"u_min\": -1, \"u_max\": 1, \"n\": 5}").find("'c'"), std::string::npos);
  EXPECT_NE(read("{\"c\": 0, \"u_min\": -1, \"u_max\": 1, \"n\": 1.5}").find("'n'"), std::string::npos);
}

TEST(SpectrumCsv, RoundTripAndShapeChecks) {
  const auto spectrum = mellin::mellin_forward(small_signal(), {3.0, 9});
  std::ostringstream csv;
  io::write_spectrum_csv(csv, spectrum);
  std::istringstream in(csv.str());
  const auto back = io::read_spectrum_csv(in, spectrum.c());
  EXPECT_EQ(back.t_max(), spectrum.t_max());
  for (std::size_t j = 0; j < back.size(); ++j) EXPECT_EQ(back.values()[j], spectrum.values()[j]);

  auto read = [](const std::string& t) {
    return error_of([&] {
      std::istringstream in(t);
      io::read_spectrum_csv(in, 0.0);
    });
  };
  EXPECT_NE(read("t,re,im\n-1,0,0\n1,0,0\n").find("odd"), std::string::npos);
  EXPECT_NE(read("t,re,im\n-1,0,0\n0.1,0,0\n1,0,0\n").find("line 3"), std::string::npos);
}

TEST(DensityCsv, RoundTrip) {
  const auto d = mellin::corpus::box_density(2.0, 0.5, 0.0);
  std::ostringstream csv;
  io::write_density_csv(csv, d, 21);
  std::istringstream in(csv.str());
  const auto back = io::read_density_csv(in);
  EXPECT_EQ(back.band_edge(), 2.0);
  for (double t : {-1.9, -0.3, 0.0, 1.2}) EXPECT_NEAR(std::abs(back(t) - d(t)), 0.0, 1e-15);
}

TEST(SamplesJson, RoundTripAndValidation) {
  const auto s = mellin::exp_sample(mellin::corpus::sampling_model(1.0, 0.5), 1.0, 8);
  std::ostringstream out;
  io::write_samples_json(out, s);
  std::istringstream in(out.str());
  const auto back = io::read_samples_json(in);
  EXPECT_EQ(back.c(), s.c());
  EXPECT_EQ(back.sigma(), s.sigma());
  EXPECT_EQ(back.K(), s.K());
  for (int k = -8; k <= 8; ++k) EXPECT_EQ(back.at(k), s.at(k));

  auto read = [](const std::string& t) {
    return error_of([&] {
      std::istringstream in(t);
      io::read_samples_json(in);
    });
  };
  EXPECT_NE(read("{\"c\":0,\"sigma\":1,\"K\":1,\"samples\":[[1,0],[0,0]]}").find("2K+1"), std::string::npos);
  EXPECT_NE(read("{\"c\":0,\"sigma\":1,\"K\":1,\"samples\":[[1,0],[0],[0,0]]}").find("samples[1]"), std::string::npos);
  EXPECT_NE(read("{\"c\":0,\"sigma\":1,\"samples\":[]}").find("'K'"), std::string::npos);
}

TEST(BandwidthJson, RoundTrip) {
  const auto est = mellin::estimate_bandwidth(mellin::corpus::lin_model(0.0), 6);
  std::ostringstream out;
  io::write_bandwidth_json(out, est);
  std::istringstream in(out.str());
  const auto back = io::read_bandwidth_json(in);
  EXPECT_EQ(back.method, est.method);
  EXPECT_EQ(back.T_hat, est.T_hat);
  EXPECT_EQ(back.stabilized_at, est.stabilized_at);
  EXPECT_EQ(back.warnings, est.warnings);
  ASSERT_EQ(back.per_order.size(), est.per_order.size());
  for (std::size_t i = 0; i < est.per_order.size(); ++i) {
    EXPECT_EQ(back.per_order[i].r, est.per_order[i].r);
    EXPECT_EQ(back.per_order[i].root, est.per_order[i].root);
    EXPECT_EQ(back.per_order[i].ratio, est.per_order[i].ratio);
  }
  EXPECT_NE(out.str().find("null"), std::string::npos);
}

TEST(Writers, AreDeterministic) {
  std::ostringstream a, b;
  io::write_signal_csv(a, small_signal());
  io::write_signal_csv(b, small_signal());
  EXPECT_EQ(a.str(), b.str());
}

TEST(Files, MissingFileIsAValidationError) {
  EXPECT_THROW(io::read_file("/nonexistent/dir/file.csv"), mellin::ValidationError);
}
