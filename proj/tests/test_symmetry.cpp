#include <doctest.h>

#include <numbers>

#include "oracle.hpp"
#include "spinchain/error.hpp"
#include "spinchain/harness.hpp"
#include "spinchain/liouvillian.hpp"
#include "spinchain/symmetry.hpp"

using namespace spinchain;

namespace {
constexpr double pi = std::numbers::pi;
const SixOpAmplitudes kAmps{0.3, 0.9, 0.5, 1.2, 0.7, 0.2};

LocalUnitary unitary_for(UnitaryFamily f, double theta) {
  const bool twisted = f == UnitaryFamily::U1 || f == UnitaryFamily::U3;
  return make_unitary(f, twisted ? std::optional<double>(theta) : std::nullopt);
}

DriveSpec drive_for(UnitaryFamily f, double theta) {
  switch (matched_drive(f)) {
    case DriveFamily::TwistedXY: return twisted_xy_drive(1.0, 0.4, theta);
    case DriveFamily::TwistedZX: return twisted_zx_drive(1.0, -0.3, theta);
    case DriveFamily::SixOpXXZ: return six_op_xxz_drive(kAmps);
    default: return six_op_xxx_drive(kAmps);
  }
}

ChainModel model_for(UnitaryFamily f) {
  return matched_model(f) == ModelKind::XXZ ? make_xxz(1.0, {0.6, 1.0, 1.4})
                                            : make_xxx({0.7, 1.0, 1.3});
}

const UnitaryFamily kFamilies[] = {UnitaryFamily::U1, UnitaryFamily::U2, UnitaryFamily::U3,
                                   UnitaryFamily::U4};

}  // namespace

TEST_SUITE("symmetry_checks") {

TEST_CASE("unitaries and their conjugation tables") {
  for (UnitaryFamily f : kFamilies) {
    for (double theta : {0.0, 0.7, pi / 2, 2.5, pi, 4.0, 5.9}) {
      CAPTURE(to_string(f));
      CAPTURE(theta);
      const LocalUnitary u = unitary_for(f, theta);
      CHECK((u.matrix * u.matrix.adjoint() - LocalOperator::Identity()).norm() < 1e-15);
      CHECK(conjugation_table_deviation(u) < 1e-15);
    }
  }
  // u1 sends z to -z and u4 swaps y and z up to sign, independent of the angle
  const auto t1 = conjugation_table(UnitaryFamily::U1, 1.3);
  CHECK((t1[2] + oracle::sigma('z')).norm() == 0.0);
  const auto t4 = conjugation_table(UnitaryFamily::U4);
  CHECK((t4[1] + oracle::sigma('z')).norm() == 0.0);
  CHECK((t4[2] + oracle::sigma('y')).norm() == 0.0);
}

TEST_CASE("square-root form of u3 holds on the upper half only") {
  for (double theta : {0.0, 0.4, 1.5, 2.9, pi}) {
    CHECK((sqrt_form_u3(theta) - make_unitary(UnitaryFamily::U3, theta).matrix).norm() < 1e-15);
  }
  for (double theta : {3.5, 4.5, 6.0}) {
    CHECK((sqrt_form_u3(theta) - make_unitary(UnitaryFamily::U3, theta).matrix).norm() > 0.1);
  }
}

TEST_CASE("angle is required exactly for the twisted families") {
  CHECK_THROWS_AS(make_unitary(UnitaryFamily::U1), InvalidInput);
  CHECK_THROWS_AS(make_unitary(UnitaryFamily::U3), InvalidInput);
  CHECK_THROWS_AS(make_unitary(UnitaryFamily::U2, 0.5), InvalidInput);
  CHECK_THROWS_AS(make_unitary(UnitaryFamily::U4, 0.5), InvalidInput);
}

TEST_CASE("global unitary is the site-wise tensor power") {
  const LocalUnitary u = make_unitary(UnitaryFamily::U3, 1.1);
  const oracle::Mat expected = oracle::product({u.matrix, u.matrix, u.matrix});
  CHECK((global_unitary(u, 3) - expected).norm() < 1e-15);
}

TEST_CASE("matched pairs map each drive onto its inversion") {
  for (UnitaryFamily f : kFamilies) {
    CAPTURE(to_string(f));
    const double theta = 2.2;
    const LocalUnitary u = unitary_for(f, theta);
    const DriveSpec spec = drive_for(f, theta);
    const ChainModel model = model_for(f);
    const Operator big_u = global_unitary(u, 4);
    CHECK(verify_hamiltonian_invariance(big_u, build_hamiltonian(model)) < 1e-14);
    CHECK(verify_current_invariance(big_u, model) < 1e-14);
    CHECK(verify_dissipator_swap(u, spec, 4) < 1e-14);
    const auto rho = steady_state(build_hamiltonian(model), build_jump_operators(spec, 4)).state;
    CHECK(mapped_state_residual(u, model, spec, rho) < 1e-10);
  }
}

TEST_CASE("dissipator deviation agrees with the column-stacked route") {
  // the literal square-root u3 breaks the swap for theta in (pi, 2 pi), so the
  // deviation is far from zero and both routes must report the same value
  const Operator h = Operator::Zero(8, 8);
  for (double theta : {1.0, 4.0, 5.5}) {
    CAPTURE(theta);
    const LocalUnitary u{sqrt_form_u3(theta), UnitaryFamily::U3, theta};
    const DriveSpec spec = twisted_zx_drive(1.0, -0.3, theta);
    const Eigen::MatrixXcd d = build_superoperator(h, build_jump_operators(spec, 3));
    const Eigen::MatrixXcd d_inv =
        build_superoperator(h, build_jump_operators(invert_baths(spec), 3));
    const oracle::Mat big = global_unitary(u, 3);
    const oracle::Mat s = oracle::kron(big.conjugate(), big);
    const double expected = (d_inv - s * d * s.adjoint()).norm() / d.norm();
    CHECK(verify_dissipator_swap(u, spec, 3) == doctest::Approx(expected).epsilon(1e-12));
    if (theta > pi) CHECK(expected > 0.1);
  }
}

TEST_CASE("mismatches are detected") {
  // wrong drive for the unitary
  CHECK_THROWS_AS(verify_dissipator_swap(make_unitary(UnitaryFamily::U2),
                                         six_op_xxx_drive(kAmps), 3),
                  InvalidInput);
  // angle of the unitary differs from that of the drive
  CHECK_THROWS_AS(verify_dissipator_swap(make_unitary(UnitaryFamily::U1, 1.0),
                                         twisted_xy_drive(1.0, 0.4, 2.0), 3),
                  InvalidInput);
  // a z field is odd under u1 and u2
  const ChainModel m = make_xxz(1.0, {0.8, 1.2}, {0.3, 0.3, 0.3});
  const Operator h = build_hamiltonian(m);
  CHECK(verify_hamiltonian_invariance(global_unitary(make_unitary(UnitaryFamily::U2), 3), h) >
        0.1);
  CHECK(verify_hamiltonian_invariance(global_unitary(make_unitary(UnitaryFamily::U1, 0.5), 3),
                                      h) > 0.1);
  // u3 does not commute with an anisotropic Hamiltonian
  CHECK(verify_hamiltonian_invariance(global_unitary(make_unitary(UnitaryFamily::U3, 0.5), 3),
                                      build_hamiltonian(make_xxz(1.0, {0.5, 1.5}))) > 0.01);
}

TEST_CASE("suite rows") {
  SymmetrySuiteOptions opts;
  opts.n_sites = {3};
  opts.theta_samples = 3;
  opts.amplitude_draws = 2;
  const auto rows = run_symmetry_suite(opts);
  CHECK(rows.size() == 3 + 2 + 3 + 2);
  for (const auto& r : rows) {
    CAPTURE(r.error);
    CHECK(r.pass);
    CHECK(r.end_to_end_residual.has_value());
  }
  CHECK(rows[1].theta.value() == doctest::Approx(2 * pi / 3));
  opts.theta_samples = 0;
  CHECK_THROWS_AS(run_symmetry_suite(opts), InvalidInput);
}

}  // TEST_SUITE
