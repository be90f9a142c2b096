#include <doctest.h>

#include "oracle.hpp"
#include "spinchain/chain_model.hpp"
#include "spinchain/error.hpp"

using namespace spinchain;

TEST_SUITE("chain_models") {

TEST_CASE("XXZ Hamiltonian matches the brute-force sum") {
  const ChainModel m = make_xxz(0.8, {0.5, 1.0, 1.5}, {0.2, -0.1, 0.3, 0.05});
  const Operator expected =
      oracle::chain_hamiltonian({0.8, 0.8, 0.8}, {0.5, 1.0, 1.5}, {0.2, -0.1, 0.3, 0.05});
  CHECK((build_hamiltonian(m) - expected).norm() < 1e-13);
}

TEST_CASE("XXX Hamiltonian matches the brute-force sum") {
  const ChainModel m = make_xxx({0.7, 1.0, 1.3});
  const Operator expected = oracle::chain_hamiltonian({0.7, 1.0, 1.3}, {0.7, 1.0, 1.3}, {});
  CHECK((build_hamiltonian(m) - expected).norm() < 1e-13);
  CHECK(m.anisotropy(2) == 1.0);
}

TEST_CASE("Hamiltonian is Hermitian and conserves total magnetization") {
  const ChainModel m = make_xxz(1.0, {0.9, 1.1, 1.3, 1.5});
  const Operator h = build_hamiltonian(m);
  CHECK((h - h.adjoint()).norm() == 0.0);
  Operator mz = Operator::Zero(h.rows(), h.cols());
  for (int j = 1; j <= 5; ++j) mz += oracle::on_site(oracle::sigma('z'), j, 5);
  CHECK((h * mz - mz * h).norm() < 1e-13);
}

TEST_CASE("site reversal maps a model onto its mirror") {
  const ChainModel m = make_xxz(1.0, {0.6, 1.0, 1.4}, {0.1, 0.2, 0.3, 0.4});
  const Operator p = site_reversal(4);
  CHECK((p * p - Operator::Identity(16, 16)).norm() == 0.0);
  CHECK((p * build_hamiltonian(m) * p - build_hamiltonian(mirrored(m))).norm() < 1e-13);

  const ChainModel x = make_xxx({0.5, 0.9, 1.2});
  CHECK((p * build_hamiltonian(x) * p - build_hamiltonian(mirrored(x))).norm() < 1e-13);
}

TEST_CASE("graded profile is a centred ramp") {
  const auto g = graded_profile(1.0, 0.2, 3);
  REQUIRE(g.size() == 3);
  CHECK(g[0] == doctest::Approx(0.8));
  CHECK(g[1] == doctest::Approx(1.0));
  CHECK(g[2] == doctest::Approx(1.2));
  CHECK(graded_profile(0.7, 0.3, 1) == std::vector<double>{0.7});
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(make_xxz(1.0, {}), InvalidInput);
  CHECK_THROWS_AS(make_xxz(1.0, {1.0, 1.0}, {0.1}), InvalidInput);
  CHECK_THROWS_AS(make_xxx({}), InvalidInput);
  ChainModel bad = make_xxx({1.0, 1.0});
  bad.delta = {1.0, 1.0};
  CHECK_THROWS_AS(bad.validate(), InvalidInput);
  bad = make_xxz(1.0, {1.0, 1.0});
  bad.alpha = {1.0, 2.0};
  CHECK_THROWS_AS(bad.validate(), InvalidInput);
  CHECK_THROWS_AS(make_xxz(1.0, {1.0, 1.0}).coupling(3), InvalidInput);
  CHECK_FALSE(make_xxz(1.0, {1.0}, {0.0, 0.0}).has_field());
}

}  // TEST_SUITE
