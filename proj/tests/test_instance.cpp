#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "adia/errors.hpp"
#include "adia/instance.hpp"

using namespace adia;

namespace {

std::string temp_file(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("valid instance is accepted and exposes canonical order") {
  ProblemInstance inst(2, {0.0, 3.0, 1.0, 2.0}, 0);
  CHECK(inst.size() == 4);
  CHECK(inst.marked() == 0);
  CHECK(inst.poly_bound() == doctest::Approx(8.0));
  CHECK(inst.f_z1() == 1.0);
  CHECK(inst.f_max() == 3.0);

  const auto& canon = inst.canonical();
  REQUIRE(canon.values.size() == 3);
  CHECK(canon.values[0] == 1.0);
  CHECK(canon.values[1] == 2.0);
  CHECK(canon.values[2] == 3.0);
  CHECK(canon.perm[0] == 2);
  CHECK(canon.perm[1] == 3);
  CHECK(canon.perm[2] == 1);
  CHECK_FALSE(canon.has_ties());
}

TEST_CASE("validation rejects malformed instances") {
  CHECK_THROWS_AS(ProblemInstance(2, {0.0, 1.0, 2.0}, 0), DimensionError);
  CHECK_THROWS_AS(ProblemInstance(2, {0.5, 1.0, 2.0, 3.0}, 0), MarkedValueError);
  CHECK_THROWS_AS(ProblemInstance(2, {0.0, 1.0, 2.0, -1.0}, 0),
                  NegativeEntryError);
  CHECK_THROWS_AS(ProblemInstance(2, {0.0, 1.0, 0.0, 2.0}, 0),
                  NegativeEntryError);
  CHECK_THROWS_AS(ProblemInstance(2, {0.0, 1.0, 2.0, 9.0}, 0), BoundError);
  CHECK_THROWS_AS(ProblemInstance(2, {0.0, 1.0, 2.0, 3.0}, 4), DimensionError);
  // explicit bound overrides the n^3 default
  CHECK_NOTHROW(ProblemInstance(2, {0.0, 1.0, 2.0, 9.0}, 0, 16.0));
}

TEST_CASE("tie detection groups equal and nearly-equal costs") {
  // exact duplicates
  ProblemInstance tied(2, {0.0, 2.0, 2.0, 1.0}, 0);
  REQUIRE(tied.canonical().ties.size() == 1);
  CHECK(tied.canonical().ties[0].indices == std::vector<std::size_t>{1, 2});

  // separation just inside the relative tolerance at value ~2
  ProblemInstance close(2, {0.0, 2.0, 2.0 + 1e-12, 1.0}, 0);
  CHECK(close.canonical().ties.size() == 1);

  // separation well outside it
  ProblemInstance apart(2, {0.0, 2.0, 2.0 + 1e-10, 1.0}, 0);
  CHECK(apart.canonical().ties.empty());
}

TEST_CASE("unperturbed instance ties all non-marked costs") {
  const auto inst = unperturbed_instance(3, 5);
  CHECK(inst.marked() == 5);
  CHECK(inst.f_z1() == 1.0);
  REQUIRE(inst.canonical().ties.size() == 1);
  CHECK(inst.canonical().ties[0].indices.size() == 7);
}

TEST_CASE("uniform perturbation is deterministic and in range") {
  const auto a = perturb(3, 0, NoiseModel::uniform(1.0, 3.0, 7));
  const auto b = perturb(3, 0, NoiseModel::uniform(1.0, 3.0, 7));
  CHECK(a.f() == b.f());
  for (std::size_t k = 1; k < a.size(); ++k) {
    CHECK(a.f()[k] >= 1.0);
    CHECK(a.f()[k] <= 3.0);
  }
  // frozen regression values: draws assigned in index order, marked skipped
  CHECK(a.f()[0] == 0.0);
  CHECK(a.f()[1] == doctest::Approx(2.5087706083057162).epsilon(1e-15));
  CHECK(a.f()[2] == doctest::Approx(2.8986024057852884).epsilon(1e-15));
  CHECK(a.f()[3] == doctest::Approx(1.234828562069036).epsilon(1e-15));
  CHECK(a.f()[7] == doctest::Approx(2.6650459610628916).epsilon(1e-15));

  const auto c = perturb(3, 0, NoiseModel::uniform(1.0, 3.0, 8));
  CHECK(a.f() != c.f());
}

TEST_CASE("gaussian perturbation clips to (0, bound] deterministically") {
  const auto a = perturb(2, 1, NoiseModel::gaussian(2.0, 0.5, 11));
  CHECK(a.f()[0] == doctest::Approx(2.1390353347025894).epsilon(1e-15));
  CHECK(a.f()[1] == 0.0);
  CHECK(a.f()[2] == doctest::Approx(1.7787753494135115).epsilon(1e-15));
  CHECK(a.f()[3] == doctest::Approx(1.7476897084420346).epsilon(1e-15));

  // heavy clipping still terminates and respects the bound
  const auto b = perturb(2, 0, NoiseModel::gaussian(7.5, 3.0, 3));
  for (std::size_t k = 1; k < b.size(); ++k) {
    CHECK(b.f()[k] > 0.0);
    CHECK(b.f()[k] <= b.poly_bound());
  }
}

TEST_CASE("noise model validation") {
  CHECK_THROWS_AS(perturb(2, 0, NoiseModel::uniform(0.0, 2.0, 1)),
                  NoiseRangeError);
  CHECK_THROWS_AS(perturb(2, 0, NoiseModel::uniform(2.0, 1.0, 1)),
                  NoiseRangeError);
  CHECK_THROWS_AS(perturb(2, 0, NoiseModel::uniform(1.0, 100.0, 1)),
                  NoiseRangeError);  // exceeds n^3 = 8
  CHECK_THROWS_AS(perturb(2, 0, NoiseModel::gaussian(1.0, -1.0, 1)),
                  NoiseRangeError);
  CHECK_THROWS_AS(perturb(2, 0, NoiseModel::gaussian(-100.0, 1.0, 1)),
                  NoiseRangeError);
  CHECK_THROWS_AS(perturb(2, 0, NoiseModel::explicit_list({1.0, 2.0})),
                  DimensionError);
}

TEST_CASE("explicit list fills non-marked slots in index order") {
  const auto inst = perturb(2, 2, NoiseModel::explicit_list({1.0, 2.0, 3.0}));
  CHECK(inst.f() == std::vector<double>{1.0, 2.0, 0.0, 3.0});
}

TEST_CASE("instance JSON round-trip preserves costs exactly") {
  const auto inst = perturb(3, 2, NoiseModel::uniform(1.0, 3.0, 99));
  const auto path = temp_file("adia_inst_roundtrip.json");
  save_instance_json(inst, path);
  const auto back = load_instance_json(path);
  CHECK(back.n() == inst.n());
  CHECK(back.marked() == inst.marked());
  CHECK(back.f() == inst.f());
  std::remove(path.c_str());
}

TEST_CASE("instance JSON loader rejects unknown fields and bad shapes") {
  const auto path = temp_file("adia_inst_bad.json");
  auto write = [&](const char* text) {
    std::ofstream out(path);
    out << text;
  };

  write(R"({"n": 1, "marked": 0, "f": [0, 1], "extra": 1})");
  CHECK_THROWS_AS(load_instance_json(path), IoError);

  write(R"({"n": 1, "marked": 0})");
  CHECK_THROWS_AS(load_instance_json(path), IoError);

  write(R"({"n": 1, "marked": 0, "f": [0, "x"]})");
  CHECK_THROWS_AS(load_instance_json(path), IoError);

  write(R"(not json)");
  CHECK_THROWS_AS(load_instance_json(path), IoError);

  write(R"({"n": 1, "marked": 0, "f": [0, 1]})");
  CHECK_NOTHROW(load_instance_json(path));
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_instance_json("/nonexistent/instance.json"), IoError);
}
