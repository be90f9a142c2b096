#include <doctest.h>

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "spinchain/error.hpp"
#include "spinchain/harness.hpp"
#include "spinchain/parallel.hpp"

using namespace spinchain;

TEST_SUITE("experiment_harness") {

TEST_CASE("three-site benchmarks against frozen values") {
  const auto field = run_three_site_benchmark(1.0, 0.0, 0.01, 1.0);
  CHECK(field.measured_current == doctest::Approx(0.0089675467681981941).epsilon(1e-10));
  CHECK(field.relative_error < 1e-3);
  const auto coarse = run_three_site_benchmark(1.0, 0.05, 0.1, 0.0);
  CHECK(coarse.measured_current == doctest::Approx(0.00017041881701429507).epsilon(1e-9));
  const auto fine = run_three_site_benchmark(1.0, 0.025, 0.05, 0.0);
  CHECK(fine.measured_current == doctest::Approx(2.1571722073794597e-05).epsilon(1e-9));
  CHECK(fine.relative_error < coarse.relative_error);
  CHECK(field_coefficient(1.0) == doctest::Approx(912.0 / 1017.0));
  CHECK(asymmetry_coefficient(1.0) == doctest::Approx(2668704.0 / 7699707.0));
}

TEST_CASE("current symmetries of the benchmark chain") {
  // no drive imbalance, no current
  const auto zero = run_three_site_benchmark(1.0, 0.05, 0.0, 0.0);
  CHECK(std::abs(zero.measured_current) < 1e-14);
  CHECK(std::abs(zero.report.currents.mean_spin_current) < 1e-14);
  // uniform chain without field carries no energy current
  const auto uniform = run_three_site_benchmark(1.0, 0.0, 0.3, 0.0);
  CHECK(std::abs(uniform.measured_current) < 1e-14);
  CHECK(std::abs(uniform.report.currents.mean_spin_current) > 0.01);
  // grading reversed, current reversed
  const auto up = run_three_site_benchmark(1.0, 0.1, 0.3, 0.0);
  const auto down = run_three_site_benchmark(1.0, -0.1, 0.3, 0.0);
  CHECK(up.measured_current == doctest::Approx(-down.measured_current).epsilon(1e-10));
}

TEST_CASE("one-way street on a small chain") {
  const ChainModel m = make_xxz(1.0, {0.8, 1.2});
  const auto r = run_one_way(m, z_target_drive(1.0, 0.1, -0.1));
  CHECK(r.forward_energy_current == doctest::Approx(0.00050447930970135696).epsilon(1e-9));
  CHECK(r.absolute_difference < 1e-13);
  CHECK(r.inverted_spin_current == doctest::Approx(-r.forward_spin_current).epsilon(1e-10));

  CHECK_THROWS_AS(run_one_way(make_xxz(1.0, {1.0}), z_target_drive(1.0, 0.1, -0.1)),
                  InvalidInput);
  CHECK_THROWS_WITH_AS(run_one_way(make_xxx({1.0, 1.0}), twisted_xy_drive(1.0, 0.1, 0.2)),
                       "drive family twisted_xy is not defined for the xxx model", InvalidInput);
}

TEST_CASE("solve with cross-check") {
  const ChainModel m = make_xxx({0.7, 1.3});
  const auto r = run_solve(m, twisted_zx_drive(1.0, -0.3, 4.0), {}, true);
  REQUIRE(r.time_evolution_distance.has_value());
  CHECK(*r.time_evolution_distance < 1e-6);
  CHECK(r.currents.mean_energy_current ==
        doctest::Approx(-0.0033660969519068128).epsilon(1e-9));
  CHECK_FALSE(run_solve(m, twisted_zx_drive(1.0, -0.3, 4.0)).time_evolution_distance);
}

TEST_CASE("parity scan") {
  const auto rows = run_parity_scan(make_xxz(1.0, {0.95, 1.05}), 1.0, {0.0, 0.1, 0.3});
  REQUIRE(rows.size() == 3);
  CHECK(std::abs(rows[0].energy_current_plus) < 1e-14);
  for (const auto& r : rows) {
    CHECK(r.energy_evenness_defect < 1e-12);
    CHECK(r.spin_oddness_defect < 1e-12);
  }
  CHECK(rows[2].spin_current_plus > rows[1].spin_current_plus);
  CHECK_THROWS_AS(run_parity_scan(make_xxz(1.0, {1.0, 1.0}, {0.1, 0.1, 0.1}), 1.0, {0.1}),
                  InvalidInput);
}

TEST_CASE("parallel_map keeps order and rethrows the first failure") {
  const auto squares = parallel_map(100, [](std::size_t i) { return i * i; }, 4);
  for (std::size_t i = 0; i < 100; ++i) CHECK(squares[i] == i * i);
  CHECK(parallel_map(0, [](std::size_t i) { return i; }).empty());

  std::atomic<int> calls{0};
  try {
    parallel_map(
        50,
        [&](std::size_t i) {
          ++calls;
          if (i == 7 || i == 30) throw std::runtime_error("task " + std::to_string(i));
          return 0;
        },
        3);
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "task 7");
  }
}

TEST_CASE("seeded draws are reproducible") {
  Rng a = sample_rng(42, 5, 3);
  Rng b = sample_rng(42, 5, 3);
  Rng c = sample_rng(42, 5, 4);
  const ChainModel ma = draw_graded_model(ModelKind::XXX, 5, a);
  const ChainModel mb = draw_graded_model(ModelKind::XXX, 5, b);
  const ChainModel mc = draw_graded_model(ModelKind::XXX, 5, c);
  CHECK(ma.alpha == mb.alpha);
  CHECK(ma.alpha != mc.alpha);
  CHECK(ma.alpha.size() == 4);
  CHECK(ma.alpha.front() < ma.alpha.back());
  CHECK(draw_drive(DriveFamily::SixOpXXX, a) == draw_drive(DriveFamily::SixOpXXX, b));
  const DriveSpec t = draw_drive(DriveFamily::TwistedXY, a, 1.25);
  CHECK(t.twisted().theta == 1.25);
  CHECK(std::abs(t.twisted().f) <= 0.9);
  const DriveSpec z = draw_drive(DriveFamily::ZTarget, a);
  CHECK(z.z_target().f_right == -z.z_target().f_left);
}

TEST_CASE("compatibility table") {
  CHECK(is_compatible(ModelKind::XXZ, DriveFamily::ZTarget));
  CHECK(is_compatible(ModelKind::XXX, DriveFamily::ZTarget));
  CHECK(is_compatible(ModelKind::XXZ, DriveFamily::SixOpXXZ));
  CHECK_FALSE(is_compatible(ModelKind::XXZ, DriveFamily::TwistedZX));
  CHECK_FALSE(is_compatible(ModelKind::XXX, DriveFamily::SixOpXXZ));
  CHECK(max_workers() >= 1);
}

}  // TEST_SUITE
