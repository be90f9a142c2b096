#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "spinchain/drives.hpp"
#include "spinchain/error.hpp"

using namespace spinchain;

namespace {

const SixOpAmplitudes kAmps{0.3, 0.9, 0.5, 1.2, 0.7, 0.2};

std::vector<DriveSpec> all_families() {
  return {z_target_drive(1.5, 0.3, -0.5), twisted_xy_drive(1.0, 0.4, 1.0),
          twisted_zx_drive(0.7, -0.3, 4.0), six_op_xxz_drive(kAmps), six_op_xxx_drive(kAmps)};
}

// Every operator in `a` has a counterpart in `b` on the same site.
bool same_channels(const std::vector<JumpOperator>& a, const std::vector<JumpOperator>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& j : a) {
    bool found = false;
    for (std::size_t k = 0; k < b.size() && !found; ++k) {
      if (!used[k] && b[k].site == j.site && (b[k].matrix - j.matrix).norm() < 1e-15) {
        used[k] = found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("boundary_drives") {

TEST_CASE("channel counts and sites") {
  for (const auto& spec : all_families()) {
    const auto jumps = build_jump_operators(spec, 4);
    const bool six = spec.family == DriveFamily::SixOpXXZ || spec.family == DriveFamily::SixOpXXX;
    CHECK(jumps.size() == (six ? 12u : 4u));
    for (const auto& j : jumps) CHECK((j.site == 1 || j.site == 4));
    CHECK(std::count_if(jumps.begin(), jumps.end(), [](const auto& j) { return j.site == 1; }) ==
          static_cast<long>(jumps.size() / 2));
  }
}

TEST_CASE("z targets drive each edge towards f") {
  const auto jumps = build_jump_operators(z_target_drive(2.0, 1.0, -0.5), 3);
  // full polarization switches the lowering channel off
  CHECK(jumps[1].matrix.norm() == 0.0);
  CHECK((jumps[0].matrix - std::sqrt(2.0) * oracle::sigma('+')).norm() < 1e-15);
  CHECK((jumps[2].matrix - std::sqrt(0.5) * oracle::sigma('+')).norm() < 1e-15);
  CHECK((jumps[3].matrix - std::sqrt(1.5) * oracle::sigma('-')).norm() < 1e-15);
}

TEST_CASE("twisted edge rotates in the xy plane") {
  const double f = 0.4;
  const auto jumps = build_jump_operators(twisted_xy_drive(1.0, f, std::numbers::pi / 2), 3);
  const oracle::Mat x = oracle::sigma('x'), y = oracle::sigma('y'), z = oracle::sigma('z');
  const oracle::cplx i(0, 1);
  CHECK(jumps[0].site == 1);
  CHECK((jumps[0].matrix - std::sqrt(1 + f) * (y + i * z) / 2.0).norm() < 1e-15);
  CHECK((jumps[1].matrix - std::sqrt(1 - f) * (y - i * z) / 2.0).norm() < 1e-15);
  CHECK(jumps[2].site == 3);
  CHECK((jumps[2].matrix - std::sqrt(1 - f) * (y + i * z) / 2.0).norm() < 1e-15);
  CHECK((jumps[3].matrix - std::sqrt(1 + f) * (y - i * z) / 2.0).norm() < 1e-15);

  const auto zx = build_jump_operators(twisted_zx_drive(1.0, f, 0.0), 3);
  CHECK((zx[0].matrix - std::sqrt(1 + f) * (x + i * y) / 2.0).norm() < 1e-15);
  CHECK((zx[2].matrix - std::sqrt(1 - f) * (x + i * y) / 2.0).norm() < 1e-15);
}

TEST_CASE("bath inversion swaps the content of the two edges") {
  for (const auto& spec : all_families()) {
    CAPTURE(to_string(spec.family));
    const DriveSpec inv = invert_baths(spec);
    CHECK(invert_baths(inv) == spec);
    CHECK(same_channels(build_jump_operators(inv, 5),
                        swap_boundary_sites(build_jump_operators(spec, 5), 5)));
  }
}

TEST_CASE("six-operator pairing tables") {
  const auto xxz = build_jump_operators(six_op_xxz_drive(kAmps), 3);
  const auto xxx = build_jump_operators(six_op_xxx_drive(kAmps), 3);
  const oracle::Mat x = oracle::sigma('x'), y = oracle::sigma('y'), z = oracle::sigma('z');
  const oracle::cplx i(0, 1);
  // site 1 carries (x+iy, x-iy, y+iz, y-iz, z+ix, z-ix) with (alpha, beta, p, q, u, v)
  CHECK((xxz[0].matrix - 0.3 * (x + i * y)).norm() < 1e-15);
  CHECK((xxz[5].matrix - 0.2 * (z - i * x)).norm() < 1e-15);
  // site N: XXZ pairs alpha <-> beta; XXX moves alpha onto z-ix
  CHECK((xxz[6].matrix - 0.9 * (x + i * y)).norm() < 1e-15);
  CHECK((xxx[11].matrix - 0.3 * (z - i * x)).norm() < 1e-15);
  CHECK((xxx[6].matrix - 0.2 * (x + i * y)).norm() < 1e-15);

  // equal amplitudes make the drive inversion-invariant
  const SixOpAmplitudes flat{0.5, 0.5, 0.5, 0.5, 0.5, 0.5};
  CHECK(invert_baths(six_op_xxz_drive(flat)) == six_op_xxz_drive(flat));
  CHECK(invert_baths(six_op_xxx_drive(flat)) == six_op_xxx_drive(flat));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(z_target_drive(1.0, 1.5, 0.0), InvalidInput);
  CHECK_THROWS_AS(z_target_drive(0.0, 0.1, 0.0), InvalidInput);
  CHECK_THROWS_AS(twisted_xy_drive(1.0, -1.01, 0.0), InvalidInput);
  CHECK_THROWS_AS(twisted_zx_drive(1.0, 0.1, NAN), InvalidInput);
  CHECK_THROWS_AS(six_op_xxx_drive({0.1, -0.2, 0, 0, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(build_jump_operators(z_target_drive(1.0, 0, 0), 1), InvalidInput);
  CHECK_THROWS_AS(z_target_drive(1.0, 0, 0).twisted(), InvalidInput);
  DriveSpec mismatched{DriveFamily::TwistedXY, ZTargetParams{}};
  CHECK_THROWS_AS(mismatched.validate(), InvalidInput);
  for (const auto& spec : all_families()) {
    CHECK(drive_family_from_string(to_string(spec.family)) == spec.family);
  }
  CHECK_THROWS_AS(drive_family_from_string("z-target"), InvalidInput);
}

}  // TEST_SUITE
