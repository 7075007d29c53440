#include <doctest.h>

#include <vector>

#include "adia/parallel.hpp"
#include "adia/spectrum.hpp"
#include "oracles.hpp"

using namespace adia;

// The parallel kernels and the serial reference path must agree bit for bit:
// identical per-item arithmetic, only the loop scheduling differs.

TEST_CASE("eigenvalues: parallel == serial reference, exactly") {
  for (int n : {2, 5, 9}) {  // n = 9 crosses the parallel threshold (N = 512)
    const auto inst = testutil::random_instance(n, 400 + n);
    for (double s : {0.0, 0.2, 0.5, 0.8, 1.0}) {
      const auto par = eigenvalues(inst, s);
      const auto ser = ref::eigenvalues(inst, s);
      REQUIRE(par.eigenvalues.size() == ser.eigenvalues.size());
      for (std::size_t i = 0; i < par.eigenvalues.size(); ++i) {
        CHECK(par.eigenvalues[i] == ser.eigenvalues[i]);
        CHECK(par.residuals[i] == ser.residuals[i]);
        CHECK(par.copy_rank[i] == ser.copy_rank[i]);
      }
    }
  }
}

TEST_CASE("sweep: parallel == serial reference, exactly") {
  const auto inst = testutil::random_instance(6, 500);
  std::vector<double> grid;
  for (int i = 0; i <= 64; ++i) grid.push_back(i / 64.0);
  const auto par = sweep(inst, grid);
  const auto ser = ref::sweep(inst, grid);
  REQUIRE(par.size() == ser.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    CHECK(par[j].s == ser[j].s);
    for (std::size_t i = 0; i < par[j].eigenvalues.size(); ++i) {
      CHECK(par[j].eigenvalues[i] == ser[j].eigenvalues[i]);
    }
  }
}

TEST_CASE("min_gap: parallel == serial reference, exactly") {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto inst = testutil::random_instance(7, 600 + seed);
    const auto par = min_gap(inst, 256, 1e-12);
    const auto ser = ref::min_gap(inst, 256, 1e-12);
    CHECK(par.g_min == ser.g_min);
    CHECK(par.s_star == ser.s_star);
  }
}

TEST_CASE("deflated spectra agree exactly too") {
  const auto inst = unperturbed_instance(9);  // every pole tied at N = 512
  const auto par = eigenvalues(inst, 0.37);
  const auto ser = ref::eigenvalues(inst, 0.37);
  for (std::size_t i = 0; i < par.eigenvalues.size(); ++i) {
    CHECK(par.eigenvalues[i] == ser.eigenvalues[i]);
  }
  CHECK(thread_count() >= 1);
}
