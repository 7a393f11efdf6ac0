#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "zeta_eta/zero_store.hpp"

using namespace zeta_eta;

namespace {

ZeroStore first100() { return load_zeros(ZETA_ETA_DATA_DIR "/zeros_first100.txt", ZeroFormat::Plain); }

Errc parse_error(const std::string& text, ZeroFormat fmt, long* line = nullptr) {
  std::istringstream in(text);
  try {
    parse_zeros(in, fmt, "inline");
  } catch (const Error& e) {
    if (line && e.line()) *line = *e.line();
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("plain and csv ingestion") {
  std::istringstream plain("# first three\n14.134725141734693\n21.022039638771555\n\n25.010857580145689\n");
  const auto s = parse_zeros(plain, ZeroFormat::Plain, "inline");
  CHECK(s.size() == 3);
  CHECK(s.t_max() == doctest::Approx(25.010857580145689));

  std::istringstream csv("gamma,beta,multiplicity\n14.134725141734693,0.5,1\n21.022039638771555\n30,0.75,2\n");
  const auto c = parse_zeros(csv, ZeroFormat::Csv, "inline");
  CHECK(c.size() == 3);
  CHECK(c.records()[2].hypothetical);
  CHECK(c.records()[2].multiplicity == 2);
  CHECK_FALSE(c.records()[1].hypothetical);
}

TEST_CASE("ingestion errors") {
  CHECK(parse_error("# nothing\n", ZeroFormat::Plain) == Errc::EmptyFile);
  long line = 0;
  CHECK(parse_error("14.13\n25.01\n21.02\n", ZeroFormat::Plain, &line) == Errc::NotSorted);
  CHECK(line == 3);
  CHECK(parse_error("14.13\n14.13\n", ZeroFormat::Plain) == Errc::NotSorted);
  CHECK(parse_error("14.13\nabc\n", ZeroFormat::Plain, &line) == Errc::ParseError);
  CHECK(line == 2);
  CHECK(parse_error("gamma,beta\n14.1,1.5\n", ZeroFormat::Csv) == Errc::OutOfStrip);
  CHECK(parse_error("14.1,0.5,0\n", ZeroFormat::Csv) == Errc::ParseError);
  try {
    load_zeros("/nonexistent/zeros.txt", ZeroFormat::Plain);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IoError);
  }
}

TEST_CASE("bundled table") {
  const auto s = first100();
  CHECK(s.size() == 100);
  CHECK(s.count_below(100.0) == 29);
  CHECK(s.count_below(50.0) == 10);
  CHECK(s.records()[0].gamma == doctest::Approx(14.134725141734693).epsilon(1e-15));
  const auto big = load_zeros(ZETA_ETA_DATA_DIR "/zeros_to_2100.txt", ZeroFormat::Plain);
  CHECK(big.t_max() > 2000.0);
  CHECK(big.count_below(236.6) == 100);
}

TEST_CASE("window counts") {
  const auto s = first100();
  CHECK(count_window(s, 14.1347, 0.01) == 1);
  CHECK(count_window(s, 17.5, 0.5) == 0);
  CHECK(count_window(s, 17.5, 1e-12) == 0);
  CHECK_THROWS_AS(count_window(s, 236.0, 1.0), Error);
  // monotone in h and additive over disjoint windows
  long prev = 0;
  for (double h = 0.1; h < 20; h += 0.1) {
    const long c = count_window(s, 60.0, h);
    CHECK(c >= prev);
    prev = c;
  }
  CHECK(count_window(s, 60.0, 5.0) ==
        s.count_below(65.0000001) - s.count_below(55.0));
}

TEST_CASE("sigma_Xt") {
  const auto s = first100();
  CHECK(sigma_Xt(s, std::exp(4.0), 50.0) == doctest::Approx(1.5));
  CHECK(sigma_Xt(s, std::exp(8.0), 50.0) == doctest::Approx(1.0));
  const auto h = inject_hypothetical(s, 0.8, 100.0);
  CHECK(sigma_Xt(h, std::exp(8.0), 100.0) == doctest::Approx(0.5 + 2 * 0.3));
  const auto far = inject_hypothetical(s, 0.8, 30.0);
  CHECK(sigma_Xt(far, std::exp(7.0), 200.0) == doctest::Approx(0.5 + 4 / 7.0));
  CHECK(sigma_Xt(far, std::exp(7.0), 60.0) == doctest::Approx(1.1));
  const auto q = inject_hypothetical(s, 0.75, 100.0);
  CHECK(sigma_Xt(q, std::exp(10.0), 100.05) == doctest::Approx(1.0));
  CHECK_THROWS_AS(sigma_Xt(s, 10.0, 236.4), Error);
  for (double t : {20.0, 77.7, 140.0}) CHECK(sigma_Xt(s, 100.0, t) >= 0.5 + 4 / std::log(100.0) - 1e-15);
}

TEST_CASE("hypothetical injection") {
  const auto s = first100();
  const auto h = inject_hypothetical(s, 0.75, 100.0, 1);
  CHECK(count_window(h, 100.0, 0.1) == count_window(s, 100.0, 0.1) + 1);
  CHECK(s.size() == 100);
  CHECK(h.has_hypothetical());
  CHECK_FALSE(s.has_hypothetical());
  try {
    inject_hypothetical(s, 1.5, 10.0);
    FAIL("expected OutOfStrip");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OutOfStrip);
  }
  CHECK_FALSE(h.ordinate_near(100.0, 1e-6).has_value());
}

TEST_CASE("Riemann-von Mangoldt") {
  const auto s = first100();
  for (double T : {14.0, 50.0, 100.0}) {
    const auto r = rvmf_check(s, T);
    CAPTURE(T);
    CHECK(std::abs(r.delta) < 1e-6);
  }
  CHECK(rvmf_check(s, 14.0).n_store == 0);
  CHECK(rvmf_check(s, 50.0).n_store == 10);
  CHECK(rvmf_check(s, 100.0).n_store == 29);
  try {
    rvmf_check(s, 21.022039638771555);
    FAIL("expected OnOrdinate");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OnOrdinate);
  }
  CHECK_THROWS_AS(rvmf_check(s, 300.0), Error);
}

TEST_CASE("Lorentz zero sum") {
  const auto s = first100();
  // density tail makes the sum insensitive to where the table stops
  const auto big = load_zeros(ZETA_ETA_DATA_DIR "/zeros_to_2100.txt", ZeroFormat::Plain);
  for (double t : {30.0, 80.0}) CHECK(std::abs(lorentz_zero_sum(s, t) - lorentz_zero_sum(big, t)) < 0.05);
  CHECK(lorentz_zero_sum(s, 100.0) > 0.0);
}
