#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "rbfweno/grid.hpp"
#include "rbfweno/reconstruction.hpp"

using namespace rbfweno;

namespace {
void check_row(int k, int r, std::array<double, 3> base, std::array<double, 3> slope) {
  const CoeffRow& row = default_coeff_tables().rbf(k, r);
  for (int j = 0; j < k; ++j) {
    CHECK(row.base[static_cast<size_t>(j)] == doctest::Approx(base[static_cast<size_t>(j)]).epsilon(1e-15));
    CHECK(row.slope[static_cast<size_t>(j)] == doctest::Approx(slope[static_cast<size_t>(j)]).epsilon(1e-15));
  }
}
}  // namespace

TEST_CASE("k = 2 coefficient rows") {
  check_row(2, -1, {1.5, -0.5}, {-1.5, 0.5});
  check_row(2, 0, {0.5, 0.5}, {0.25, 0.25});
  check_row(2, 1, {-0.5, 1.5}, {0.5, -1.5});
}

TEST_CASE("k = 3 coefficient rows") {
  check_row(3, -1, {11.0 / 6, -7.0 / 6, 1.0 / 3}, {-4.5, 6.0, -1.5});
  check_row(3, 0, {1.0 / 3, 5.0 / 6, -1.0 / 6}, {5.0 / 6, -2.0 / 3, -1.0 / 6});
  check_row(3, 1, {-1.0 / 6, 5.0 / 6, 1.0 / 3}, {-1.0 / 6, -2.0 / 3, 5.0 / 6});
  check_row(3, 2, {1.0 / 3, -7.0 / 6, 11.0 / 6}, {-1.5, 6.0, -4.5});
}

TEST_CASE("rbf_coeffs is linear in eta") {
  const auto c = rbf_coeffs(2, 0, 0.4);
  CHECK(c.c[0] == doctest::Approx(0.6));
  CHECK(c.c[1] == doctest::Approx(0.6));
  CHECK(c.apply(std::array<double, 2>{1.0, 3.0}) == doctest::Approx(2.4));
  CHECK_THROWS_AS(rbf_coeffs(3, 3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(poly_coeffs(4, 0), std::invalid_argument);
}

TEST_CASE("scheme names") {
  CHECK(parse_scheme("rbf-weno-js") == Scheme::rbf_weno_js);
  CHECK(to_string(Scheme::rbf_eno) == "rbf-eno");
  CHECK_THROWS_AS(parse_scheme("weno-z"), ConfigError);
}

TEST_CASE("shape parameter examples") {
  CHECK(eta_k2_raw(0.0, 1.0, 0.0) == doctest::Approx(0.8));
  CHECK(monotone_k2(0.0, 1.0, 0.0));
  CHECK_FALSE(monotone_k2(0.0, 1.0, 2.0));
  const Eta e = eta_k2(0.0, 1.0, 0.0);
  CHECK(e.limited);
  CHECK(e.value == 0.0);
  const Eta raw = eta_k2(0.0, 1.0, 0.0, false);
  CHECK(raw.value == doctest::Approx(0.8));
  CHECK_FALSE(raw.limited);
}

TEST_CASE("shape parameter clamp") {
  // denominator -fm + 5 f0 + 2 fp is tiny relative to the numerator
  const Eta e = eta_k2(5.0, 0.0, 2.45, false);
  CHECK(e.clamped);
  CHECK(std::abs(e.value) == kEtaClamp);
}

TEST_CASE("k = 2 shape parameter tends to -(dx^2 / 3) h''/h") {
  // h = exp(x): h'' = h, so eta / dx^2 -> -1/3
  for (double dx : {0.1, 0.05, 0.025}) {
    auto avg = [&](double a) { return (std::exp(a + dx) - std::exp(a)) / dx; };
    const Eta e = eta_k2(avg(-dx), avg(0.0), avg(dx), false);
    CHECK(e.value / (dx * dx) == doctest::Approx(-1.0 / 3.0).epsilon(0.05));
  }
}

TEST_CASE("ENO stencil selection") {
  CHECK(eno_select(std::array<double, 5>{0, 0, 0, 1, 1}, 3) == 2);
  CHECK(eno_select(std::array<double, 5>{0, 0, 1, 1, 1}, 3) == 0);
  CHECK(eno_select(std::array<double, 3>{0, 0, 1}, 2) == 1);
  const auto d = undivided_differences(std::array<double, 3>{1, 4, 9});
  REQUIRE(d.size() == 3);
  CHECK(d[1][0] == 3.0);
  CHECK(d[2][0] == 2.0);
}

TEST_CASE("WENO-JS smoothness indicators and weights") {
  const auto b = beta_js(3, std::array<double, 5>{1, 1, 1, 1, 1});
  CHECK(b[0] == 0.0);
  CHECK(b[1] == 0.0);
  CHECK(b[2] == 0.0);
  const auto d = linear_weights(3);
  CHECK(d[0] == doctest::Approx(0.3));
  CHECK(d[1] == doctest::Approx(0.6));
  CHECK(d[2] == doctest::Approx(0.1));
  const auto jump = beta_js(3, std::array<double, 5>{0, 0, 0, 1, 1});
  const auto w = weno_weights(3, std::span<const double>(d.data(), 3), std::span<const double>(jump.data(), 3));
  CHECK(w.w[2] > 0.99);
}

TEST_CASE("reconstruct_interface argument checks") {
  const std::array<double, 4> bad{1, 2, 3, 4};
  CHECK_THROWS_AS(reconstruct_interface(3, Scheme::eno, bad, ReconSide::plus), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct_interface(4, Scheme::eno, bad, ReconSide::plus), std::invalid_argument);
}

TEST_CASE("reconstruction of constants is exact for every scheme") {
  const std::array<double, 5> c{2.5, 2.5, 2.5, 2.5, 2.5};
  for (Scheme s : {Scheme::eno, Scheme::rbf_eno, Scheme::weno_js, Scheme::rbf_weno_js}) {
    for (int k : {2, 3}) {
      const std::span<const double> w(c.data(), static_cast<size_t>(2 * k - 1));
      CHECK(reconstruct_interface(k, s, w, ReconSide::plus) == doctest::Approx(2.5).epsilon(1e-15));
      CHECK(reconstruct_interface(k, s, w, ReconSide::minus) == doctest::Approx(2.5).epsilon(1e-15));
    }
  }
}

TEST_CASE("stats count eta evaluations") {
  ReconStats st;
  const std::array<double, 5> w{0.0, 0.1, 0.3, 0.6, 1.0};
  reconstruct_interface(3, Scheme::rbf_weno_js, w, ReconSide::plus, &st);
  reconstruct_interface(3, Scheme::weno_js, w, ReconSide::plus, &st);
  CHECK(st.eta_evaluations == 1);
}

TEST_CASE("monotone switch can be disabled per call") {
  const std::array<double, 3> bump{0.0, 1.0, 0.0};
  const double on = reconstruct_interface(2, Scheme::rbf_eno, bump, ReconSide::plus, nullptr, {true, nullptr});
  const double eno = reconstruct_interface(2, Scheme::eno, bump, ReconSide::plus);
  const double off = reconstruct_interface(2, Scheme::rbf_eno, bump, ReconSide::plus, nullptr, {false, nullptr});
  CHECK(on == eno);
  CHECK(off != eno);
}
