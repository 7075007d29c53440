#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "adia/bounds.hpp"
#include "adia/errors.hpp"
#include "adia/hamiltonian.hpp"
#include "adia/quadrature.hpp"
#include "adia/interp.hpp"
#include "adia/schedule.hpp"
#include "adia/spectrum.hpp"
#include "oracles.hpp"

using namespace adia;

namespace {
const ProblemInstance kE1(2, {0.0, 1.0, 2.0, 3.0}, 0);
}

TEST_CASE("quadrature: smooth closed forms") {
  const auto cube = integrate([](double x) { return x * x * x; }, 0.0, 2.0);
  CHECK(cube.value == doctest::Approx(4.0).epsilon(1e-12));
  const auto expo = integrate([](double x) { return std::exp(x); }, -1.0, 1.0);
  CHECK(expo.value ==
        doctest::Approx(std::exp(1.0) - std::exp(-1.0)).epsilon(1e-12));
  CHECK(expo.evaluations > 0);
}

TEST_CASE("quadrature: panels tile the interval and sum to the total") {
  const auto res = integrate([](double x) { return 1.0 / (0.01 + x * x); },
                             -1.0, 1.0, 1e-10, std::vector<double>{0.0});
  const double want = 2.0 * std::atan(10.0) / 0.1;
  CHECK(res.value == doctest::Approx(want).epsilon(1e-10));
  double acc = 0.0;
  double prev = -1.0;
  bool saw_breakpoint_edge = false;
  for (const auto& p : res.panels) {
    CHECK(p.a == prev);
    CHECK(p.b > p.a);
    if (p.b == 0.0) saw_breakpoint_edge = true;
    acc += p.value;
    prev = p.b;
  }
  CHECK(prev == 1.0);
  CHECK(saw_breakpoint_edge);
  CHECK(acc == doctest::Approx(res.value).epsilon(1e-13));
}

TEST_CASE("quadrature: kinked integrand converges once split at the kink") {
  const auto res = integrate([](double x) { return std::abs(x - 0.3); }, 0.0,
                             1.0, 1e-10, std::vector<double>{0.3});
  CHECK(res.value == doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-12));
}

TEST_CASE("quadrature: non-finite integrand is reported, not propagated") {
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0),
                  ArgumentError);
}

TEST_CASE("monotone cubic: interpolates knots, preserves monotonicity") {
  const std::vector<double> x{0.0, 0.1, 0.4, 0.8, 1.0};
  const std::vector<double> y{0.0, 0.5, 0.6, 0.61, 2.0};
  const MonotoneCubic mc(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(mc(x[i]) == y[i]);
  double prev = mc(0.0);
  for (int i = 1; i <= 1000; ++i) {
    const double cur = mc(i / 1000.0);
    CHECK(cur >= prev);
    prev = cur;
  }
  // clamped outside the data range
  CHECK(mc(-1.0) == y.front());
  CHECK(mc(2.0) == y.back());
  // derivative matches a central difference in the smooth interior
  const double h = 1e-6;
  const double fd = (mc(0.25 + h) - mc(0.25 - h)) / (2.0 * h);
  CHECK(mc.derivative(0.25) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("monotone cubic rejects non-increasing abscissae") {
  CHECK_THROWS_AS(MonotoneCubic({0.0, 0.5, 0.5, 1.0}, {0.0, 1.0, 2.0, 3.0}),
                  ArgumentError);
  CHECK_THROWS_AS(MonotoneCubic({0.0}, {1.0}), ArgumentError);
}

TEST_CASE("schedule kinds round-trip through their names") {
  for (auto k : {ScheduleKind::Global, ScheduleKind::LocalExact,
                 ScheduleKind::LocalEnvelope}) {
    CHECK(parse_kind(kind_name(k)) == k);
  }
  CHECK(kind_name(ScheduleKind::LocalExact) == "local-exact");
  CHECK_THROWS_AS(parse_kind("adaptive"), ArgumentError);
}

TEST_CASE("total_time: constant gap model has a closed form") {
  const auto model = constant_gap_model(0.25);
  CHECK(total_time(model, 2.0, 0.1) ==
        doctest::Approx(2.0 / (0.1 * 0.0625)).epsilon(1e-10));
}

TEST_CASE("total_time: envelope model reproduces the runtime estimate") {
  const auto est = runtime_estimate(kE1, 0.05);
  const auto model = envelope_gap_model(est.env);
  const double t = total_time(model, est.big_d, 0.2);
  CHECK(t == doctest::Approx(est.integral / 0.2).epsilon(1e-7));
}

TEST_CASE("total_time refuses a gap model that touches zero") {
  const GapModel bad{[](double s) { return s - 0.5; }, {}, ScheduleKind::LocalExact};
  CHECK_THROWS_AS(total_time(bad, 1.0, 0.1), ArgumentError);
}

TEST_CASE("global schedule: linear ramp at the worst-case rate") {
  const auto res = min_gap(kE1);
  const auto sched = global_schedule(kE1, 0.1, res.g_min);
  const double big_d = dhds_spectral_norm(kE1).value;
  CHECK(sched.kind == ScheduleKind::Global);
  CHECK(sched.T ==
        doctest::Approx(big_d / (0.1 * res.g_min * res.g_min)).epsilon(1e-12));
  REQUIRE(sched.t.size() == sched.s.size());
  for (std::size_t j = 0; j < sched.s.size(); ++j) {
    const double sj = static_cast<double>(j) / (sched.s.size() - 1);
    CHECK(sched.s[j] == sj);
    CHECK(sched.t[j] == sched.T * sj);
  }
  CHECK(sched.s_of_t(0.5 * sched.T) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sched.t_of_s(0.25) == doctest::Approx(0.25 * sched.T).epsilon(1e-12));
}

TEST_CASE("local schedule with a constant model degenerates to the ramp") {
  const auto sched = local_schedule(kE1, constant_gap_model(0.5), 0.1, 129);
  for (std::size_t j = 0; j < sched.s.size(); ++j) {
    const double sj = static_cast<double>(j) / (sched.s.size() - 1);
    CHECK(sched.s[j] == doctest::Approx(sj).epsilon(1e-9));
  }
}

TEST_CASE("local-exact schedule: nodes, endpoints, inverse consistency") {
  const auto sched = local_schedule(kE1, exact_gap_model(kE1), 0.1, 257);
  CHECK(sched.kind == ScheduleKind::LocalExact);
  REQUIRE(sched.t.size() == 257);
  CHECK(sched.t.front() == 0.0);
  CHECK(sched.s.front() == 0.0);
  CHECK(sched.t.back() == sched.T);
  CHECK(sched.s.back() == 1.0);
  for (std::size_t j = 1; j < sched.t.size(); ++j) {
    CHECK(sched.t[j] > sched.t[j - 1]);
    CHECK(sched.s[j] > sched.s[j - 1]);
  }
  // node times are the equal-mass targets
  for (std::size_t j = 1; j + 1 < sched.t.size(); ++j) {
    CHECK(sched.t[j] == doctest::Approx(sched.T * j / 256.0).epsilon(1e-9));
  }
  // the two interpolants invert each other at and between nodes
  for (int i = 0; i <= 500; ++i) {
    const double t = sched.T * i / 500.0;
    CHECK(std::abs(sched.t_of_s(sched.s_of_t(t)) - t) <= 1e-6 * sched.T);
  }
  // gap column records the model
  for (std::size_t j = 0; j < sched.s.size(); ++j) {
    CHECK(sched.g[j] == doctest::Approx(gap(kE1, sched.s[j])).epsilon(1e-10));
  }
}

TEST_CASE("local-exact schedule obeys the local rate condition") {
  const double eps = 0.1;
  const auto sched = local_schedule(kE1, exact_gap_model(kE1), eps, 513);
  const double big_d = sched.D;
  for (std::size_t j = 0; j + 1 < sched.t.size(); ++j) {
    const double dt = sched.t[j + 1] - sched.t[j];
    const double ds = sched.s[j + 1] - sched.s[j];
    const double s_mid = 0.5 * (sched.s[j] + sched.s[j + 1]);
    const double ideal = eps * gap(kE1, s_mid) * gap(kE1, s_mid) / big_d;
    CHECK(ds / dt <= ideal * 1.05);
    CHECK(ds / dt >= ideal * 0.95);
  }
}

TEST_CASE("local-exact schedule dwells near the gap minimum") {
  const auto res = min_gap(kE1);
  const auto sched = local_schedule(kE1, exact_gap_model(kE1), 0.1, 257);
  // time spent inside |s - s_star| < 0.05, normalized by T, must exceed the
  // uniform-ramp share of the same window
  const double lo = sched.t_of_s(res.s_star - 0.05);
  const double hi = sched.t_of_s(res.s_star + 0.05);
  CHECK((hi - lo) / sched.T > 0.1);
}

TEST_CASE("schedule hierarchy: global slowest, envelope above exact") {
  const auto res = min_gap(kE1);
  const double eps = 0.1;
  const auto g = global_schedule(kE1, eps, res.g_min);
  const auto le = local_schedule(kE1, exact_gap_model(kE1), eps, 257);
  const auto env = envelope_gap_model(envelope(kE1, res.g_min));
  const auto lv = local_schedule(kE1, env, eps, 257);
  CHECK(lv.kind == ScheduleKind::LocalEnvelope);
  CHECK(le.T <= g.T);
  CHECK(le.T <= lv.T);
  CHECK(lv.T <= g.T * (1.0 + 1e-12));
}

TEST_CASE("local-exact runtime regression: unperturbed n = 4") {
  const auto inst = unperturbed_instance(4);
  const auto sched = local_schedule(inst, exact_gap_model(inst), 0.1, 1025);
  CHECK(sched.T == doctest::Approx(52.72464286610967).epsilon(1e-10));
  CHECK(sched.D == doctest::Approx(std::sqrt(15.0) / 4.0).epsilon(1e-12));
}

TEST_CASE("schedule argument validation") {
  CHECK_THROWS_AS(local_schedule(kE1, exact_gap_model(kE1), 0.1, 64),
                  ArgumentError);
  CHECK_THROWS_AS(local_schedule(kE1, exact_gap_model(kE1), 0.0, 257),
                  ArgumentError);
  CHECK_THROWS_AS(global_schedule(kE1, -0.1, 0.5), ArgumentError);
  CHECK_THROWS_AS(global_schedule(kE1, 0.1, 0.0), ArgumentError);
}
