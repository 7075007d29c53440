#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "adia/errors.hpp"
#include "adia/hamiltonian.hpp"
#include "oracles.hpp"

using namespace adia;

namespace {

const ProblemInstance kE1(2, {0.0, 1.0, 2.0, 3.0}, 0);

}  // namespace

TEST_CASE("structured apply matches the hand-multiplied dense product") {
  const StructuredHamiltonian h(kE1);
  std::vector<double> v{1.0, 0.0, 0.0, 0.0}, out(4);
  h.apply(0.5, v, out);
  // row 0 of H(0.5): d_0 - 1/8 = 0.375, off-diagonals -1/8
  CHECK(out[0] == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(out[1] == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(out[2] == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(out[3] == doctest::Approx(-0.125).epsilon(1e-15));
}

TEST_CASE("apply agrees with the dense matrix on random vectors") {
  const auto inst = testutil::random_instance(4, 21);
  const StructuredHamiltonian h(inst);
  std::mt19937_64 rng(5);
  for (double s : {0.0, 0.3, 0.7, 1.0}) {
    const auto dense = h.dense(s);
    std::vector<double> v(inst.size()), got(inst.size());
    for (auto& x : v) x = 2.0 * testutil::u53(rng) - 1.0;
    h.apply(s, v, got);
    const Eigen::Map<const Eigen::VectorXd> vm(v.data(), v.size());
    const Eigen::VectorXd want = dense * vm;
    for (std::size_t k = 0; k < v.size(); ++k) {
      CHECK(got[k] == doctest::Approx(want[k]).epsilon(1e-13));
    }
  }
}

TEST_CASE("complex apply acts componentwise like the real one") {
  const auto inst = testutil::random_instance(3, 22);
  const StructuredHamiltonian h(inst);
  std::mt19937_64 rng(6);
  std::vector<std::complex<double>> v(inst.size()), got(inst.size());
  std::vector<double> re(inst.size()), im(inst.size());
  std::vector<double> re_out(inst.size()), im_out(inst.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    re[k] = testutil::u53(rng) - 0.5;
    im[k] = testutil::u53(rng) - 0.5;
    v[k] = {re[k], im[k]};
  }
  h.apply(0.4, v, got);
  h.apply(0.4, re, re_out);
  h.apply(0.4, im, im_out);
  for (std::size_t k = 0; k < v.size(); ++k) {
    CHECK(got[k].real() == doctest::Approx(re_out[k]).epsilon(1e-14));
    CHECK(got[k].imag() == doctest::Approx(im_out[k]).epsilon(1e-14));
  }
}

TEST_CASE("dense form is symmetric and interpolates the endpoints") {
  const StructuredHamiltonian h(kE1);
  const auto h0 = h.dense(0.0);
  const auto h1 = h.dense(1.0);
  CHECK((h0 - h0.transpose()).norm() == 0.0);
  // H(0) = I - J/N: diagonal 3/4, off-diagonal -1/4
  CHECK(h0(0, 0) == doctest::Approx(0.75));
  CHECK(h0(1, 2) == doctest::Approx(-0.25));
  // H(1) = diag(f)
  CHECK(h1(1, 1) == doctest::Approx(1.0));
  CHECK(h1(0, 1) == 0.0);
  const auto mid = h.dense(0.5);
  const Eigen::MatrixXd blend = 0.5 * h0 + 0.5 * h1;
  CHECK((mid - blend).norm() <= 1e-14);
}

TEST_CASE("apply validates vector lengths") {
  const StructuredHamiltonian h(kE1);
  std::vector<double> v(3), out(4);
  CHECK_THROWS_AS(h.apply(0.5, v, out), DimensionError);
}

TEST_CASE("dhds spectral norm: unperturbed closed form sqrt((N-1))/sqrt(N)") {
  // dH/ds for all-equal costs has eigenvalues +-sqrt((N-1)/N) and zeros
  const auto norm4 = dhds_spectral_norm(unperturbed_instance(2));
  CHECK(norm4.method == DhdsNorm::Method::DenseEigensolve);
  CHECK(norm4.value == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));

  const auto norm16 = dhds_spectral_norm(unperturbed_instance(4));
  CHECK(norm16.value ==
        doctest::Approx(std::sqrt(15.0) / 4.0).epsilon(1e-12));
}

TEST_CASE("dhds spectral norm: E1 dense fixture") {
  const auto norm = dhds_spectral_norm(kE1);
  CHECK(norm.method == DhdsNorm::Method::DenseEigensolve);
  CHECK(norm.value == doctest::Approx(2.3895819234375937).epsilon(1e-12));
}

TEST_CASE("dhds upper bound dominates the dense value") {
  for (std::uint64_t seed : {31, 32, 33}) {
    const auto inst = testutil::random_instance(5, seed);
    const double exact = dhds_spectral_norm(inst).value;
    double worst = 1.0;
    for (std::size_t k = 0; k < inst.size(); ++k) {
      if (k != inst.marked()) {
        worst = std::max(worst, std::abs(inst.f()[k] - 1.0));
      }
    }
    CHECK(exact <= worst + 1.0 + 1e-12);
  }
}

TEST_CASE("wht_rhs equals the Frobenius norm of the step difference") {
  CHECK(wht_rhs(kE1, 0.0) == 0.0);
  CHECK(wht_rhs(kE1, 1.0) == doctest::Approx(8.0).epsilon(1e-15));
  // ds^2 scaling
  CHECK(wht_rhs(kE1, 0.5) == doctest::Approx(2.0).epsilon(1e-15));

  const auto inst = testutil::random_instance(4, 44);
  const StructuredHamiltonian h(inst);
  const double ds = 1e-3;
  const Eigen::MatrixXd diff = h.dense(0.4 + ds) - h.dense(0.4);
  CHECK(wht_rhs(inst, ds) ==
        doctest::Approx(diff.squaredNorm()).epsilon(1e-9));
}
