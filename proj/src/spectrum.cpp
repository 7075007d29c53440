#include "adia/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>

#include "adia/errors.hpp"
#include "adia/parallel.hpp"

namespace adia {

namespace {

// Offset factors, relative to scale = max(1, f_max).
constexpr double kRootTol = 1e-13;     // eigenvalue convergence
constexpr double kPoleOffset = 1e-14;  // keep evaluations off the poles

void check_s(double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw ArgumentError("s must lie in [0, 1], got " + std::to_string(s));
  }
}

// Distinct diagonal values d_k(s) = 1 - s + s f_k ascending, with their
// multiplicities.  Consecutive values within the tie tolerance are merged
// (centroid) and later handled by deflation instead of root finding.
struct PoleSystem {
  std::vector<double> u;
  std::vector<int> c;
  std::vector<std::vector<std::uint32_t>> members;
  double rho;    // (1-s)/N
  double scale;  // max(1, f_max)
};

PoleSystem build_poles(const ProblemInstance& inst, double s, bool want_members) {
  const auto& canon = inst.canonical();
  const std::size_t big_n = inst.size();
  PoleSystem ps;
  ps.rho = (1.0 - s) / static_cast<double>(big_n);
  ps.scale = std::max(1.0, inst.f_max());

  // d in canonical order: marked first (cost 0), then ascending costs.
  std::vector<double> d(big_n);
  d[0] = 1.0 - s;
  for (std::size_t i = 1; i < big_n; ++i) {
    d[i] = 1.0 - s + s * canon.values[i - 1];
  }
  auto original_index = [&](std::size_t i) -> std::uint32_t {
    return static_cast<std::uint32_t>(i == 0 ? inst.marked() : canon.perm[i - 1]);
  };

  std::size_t i = 0;
  while (i < big_n) {
    std::size_t j = i + 1;
    while (j < big_n &&
           d[j] - d[j - 1] <= ProblemInstance::kTieTol * std::max(1.0, d[j])) {
      ++j;
    }
    double centroid = 0.0;
    for (std::size_t r = i; r < j; ++r) centroid += d[r];
    centroid /= static_cast<double>(j - i);
    ps.u.push_back(centroid);
    ps.c.push_back(static_cast<int>(j - i));
    if (want_members) {
      std::vector<std::uint32_t> g;
      g.reserve(j - i);
      for (std::size_t r = i; r < j; ++r) g.push_back(original_index(r));
      ps.members.push_back(std::move(g));
    }
    i = j;
  }
  return ps;
}

// w(lambda) = 1 - rho sum_j c_j/(u_j - lambda) and its derivative.
// Strictly decreasing between consecutive poles.
void secular_wd(const PoleSystem& ps, double lambda, double* w, double* dw) {
  double acc = 0.0, dacc = 0.0;
  const std::size_t m = ps.u.size();
  for (std::size_t j = 0; j < m; ++j) {
    const double inv = static_cast<double>(ps.c[j]) / (ps.u[j] - lambda);
    acc += inv;
    dacc += inv / (ps.u[j] - lambda);
  }
  *w = 1.0 - ps.rho * acc;
  *dw = -ps.rho * dacc;
}

// Single root of w in the open interval below pole j (above pole j-1, or
// above 0 for j = 0).  Safeguarded Newton: the bracket always shrinks, so
// termination is guaranteed; residual reports |w| at the returned point.
double solve_root(const PoleSystem& ps, std::size_t j, double* residual) {
  const double lo = j == 0 ? 0.0 : ps.u[j - 1];
  const double hi = ps.u[j];
  const double delta = kPoleOffset * ps.scale;
  const double tol = kRootTol * ps.scale;

  double a = j == 0 ? lo : lo + delta;
  double b = hi - delta;
  if (!(b > a)) {  // interval narrower than the pole offsets
    *residual = 0.0;
    return 0.5 * (lo + hi);
  }
  double w, dw;
  secular_wd(ps, a, &w, &dw);
  if (w <= 0.0) {  // root hugs the lower pole
    *residual = std::abs(w);
    return a;
  }
  secular_wd(ps, b, &w, &dw);
  if (w >= 0.0) {  // root hugs the upper pole
    *residual = std::abs(w);
    return b;
  }

  double x = 0.5 * (a + b);
  secular_wd(ps, x, &w, &dw);
  double step_old = b - a;
  for (int it = 0; it < 200; ++it) {
    if (w == 0.0) {
      *residual = 0.0;
      return x;
    }
    if (w > 0.0) {
      a = x;
    } else {
      b = x;
    }
    double xn = x - w / dw;  // dw < 0 everywhere, never divides by zero
    double step = std::abs(xn - x);
    const bool outside = !(xn > a && xn < b);
    // fall back to bisection when Newton leaves the bracket or stalls
    if (outside || step > 0.5 * step_old) {
      xn = 0.5 * (a + b);
      step = 0.5 * (b - a);
    }
    step_old = step;
    x = xn;
    secular_wd(ps, x, &w, &dw);
    if (step <= tol || b - a <= tol) {
      *residual = std::abs(w);
      return x;
    }
  }
  throw ConvergenceError("secular root refinement stalled in interval " +
                         std::to_string(j));
}

SpectrumSample assemble_endpoint_one(const ProblemInstance& inst) {
  // s = 1: rho vanishes, the spectrum is exactly the sorted costs.
  SpectrumSample out;
  out.s = 1.0;
  PoleSystem ps = build_poles(inst, 1.0, true);
  const std::size_t m = ps.u.size();
  for (std::size_t j = 0; j < m; ++j) {
    for (int r = 0; r < ps.c[j]; ++r) {
      out.eigenvalues.push_back(ps.u[j]);
      out.intervals.emplace_back(ps.u[j], ps.u[j]);
      out.residuals.push_back(0.0);
      out.pole_index.push_back(static_cast<std::int32_t>(j));
      out.copy_rank.push_back(r);
    }
  }
  out.poles = std::move(ps.u);
  out.pole_members = std::move(ps.members);
  return out;
}

SpectrumSample solve_impl(const ProblemInstance& inst, double s, bool parallel) {
  check_s(s);
  if (s == 1.0) return assemble_endpoint_one(inst);

  SpectrumSample out;
  out.s = s;
  PoleSystem ps = build_poles(inst, s, true);
  const std::size_t m = ps.u.size();
  std::vector<double> roots(m), resid(m);
  const std::ptrdiff_t mi = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(dynamic, 16) \
    if (parallel && m >= kParallelThreshold)
  for (std::ptrdiff_t j = 0; j < mi; ++j) {
    roots[j] = solve_root(ps, static_cast<std::size_t>(j), &resid[j]);
  }
  (void)parallel;

  out.eigenvalues.reserve(inst.size());
  for (std::size_t j = 0; j < m; ++j) {
    const double lo = j == 0 ? 0.0 : ps.u[j - 1];
    out.eigenvalues.push_back(roots[j]);
    out.intervals.emplace_back(lo, ps.u[j]);
    out.residuals.push_back(resid[j]);
    out.pole_index.push_back(static_cast<std::int32_t>(j));
    out.copy_rank.push_back(0);
    for (int r = 1; r < ps.c[j]; ++r) {
      out.eigenvalues.push_back(ps.u[j]);
      out.intervals.emplace_back(ps.u[j], ps.u[j]);
      out.residuals.push_back(0.0);
      out.pole_index.push_back(static_cast<std::int32_t>(j));
      out.copy_rank.push_back(r);
    }
  }
  out.poles = std::move(ps.u);
  out.pole_members = std::move(ps.members);
  return out;
}

// Signed log-magnitude arithmetic for polynomial values far outside double
// range.  sign 0 encodes exact zero (log is then -inf by convention).
struct SignedLog {
  int sign = 0;
  double log = -std::numeric_limits<double>::infinity();
};

SignedLog sl_from(double x) {
  if (x == 0.0) return {};
  return {x > 0.0 ? 1 : -1, std::log(std::abs(x))};
}

SignedLog sl_mul(const SignedLog& a, const SignedLog& b) {
  if (a.sign == 0 || b.sign == 0) return {};
  return {a.sign * b.sign, a.log + b.log};
}

SignedLog sl_add(const SignedLog& a, const SignedLog& b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  const SignedLog& hi = a.log >= b.log ? a : b;
  const SignedLog& lo = a.log >= b.log ? b : a;
  const double t = std::exp(lo.log - hi.log);
  if (a.sign == b.sign) return {hi.sign, hi.log + std::log1p(t)};
  if (t == 1.0) return {};
  return {hi.sign, hi.log + std::log1p(-t)};
}

}  // namespace

double secular_eval(const ProblemInstance& inst, double s, double lambda) {
  check_s(s);
  const auto& canon = inst.canonical();
  const std::size_t big_n = inst.size();
  const double scale = std::max(1.0, inst.f_max());
  const double guard = kPoleOffset * scale;
  const double rho = (1.0 - s) / static_cast<double>(big_n);

  double acc = 0.0;
  for (std::size_t i = 0; i < big_n; ++i) {
    const double d = i == 0 ? 1.0 - s : 1.0 - s + s * canon.values[i - 1];
    if (std::abs(d - lambda) <= guard) {
      throw PoleProximityError("secular function evaluated within " +
                               std::to_string(guard) + " of pole at " +
                               std::to_string(d));
    }
    acc += 1.0 / (d - lambda);
  }
  return 1.0 - rho * acc;
}

CharPolyValue char_poly_eval(const ProblemInstance& inst, double s, double lambda) {
  check_s(s);
  const auto& canon = inst.canonical();
  const std::size_t big_n = inst.size();
  const double rho = (1.0 - s) / static_cast<double>(big_n);
  const double x0 = (1.0 - s) - lambda;

  // P = prod_{k>=1} x_k; S = sum_j prod_{k>=1, k!=j} x_k, tracking exact
  // zeros separately so S survives a vanishing factor.
  int zero_count = 0;
  std::size_t zero_at = 0;
  int p_sign = 1;
  double p_log = 0.0;
  for (std::size_t i = 1; i < big_n; ++i) {
    const double x = 1.0 - s + s * canon.values[i - 1] - lambda;
    if (x == 0.0) {
      if (++zero_count > 1) break;
      zero_at = i;
      continue;
    }
    p_sign *= x > 0.0 ? 1 : -1;
    p_log += std::log(std::abs(x));
  }

  SignedLog p_full{};  // product over all k >= 1
  SignedLog s_sum{};   // leave-one-out sum
  if (zero_count == 0) {
    p_full = {p_sign, p_log};
    for (std::size_t i = 1; i < big_n; ++i) {
      const double x = 1.0 - s + s * canon.values[i - 1] - lambda;
      const SignedLog term{p_sign * (x > 0.0 ? 1 : -1),
                           p_log - std::log(std::abs(x))};
      s_sum = sl_add(s_sum, term);
    }
  } else if (zero_count == 1) {
    s_sum = {p_sign, p_log};  // only the term omitting the zero factor survives
    (void)zero_at;
  }
  // zero_count >= 2: both P and S vanish identically.

  const SignedLog rho_sl = sl_from(rho);
  const SignedLog bracket =
      sl_add(p_full, sl_mul({-rho_sl.sign, rho_sl.log}, s_sum));
  const SignedLog t1 = sl_mul(sl_from(x0), bracket);
  const SignedLog t2 = sl_mul({-rho_sl.sign, rho_sl.log}, p_full);
  const SignedLog c = sl_add(t1, t2);
  return {c.sign, c.log};
}

SpectrumSample eigenvalues(const ProblemInstance& inst, double s) {
  return solve_impl(inst, s, true);
}

std::pair<double, double> lowest_two(const ProblemInstance& inst, double s) {
  check_s(s);
  if (s == 1.0) return {0.0, inst.f_z1()};
  PoleSystem ps = build_poles(inst, s, false);
  double resid;
  const double l0 = solve_root(ps, 0, &resid);
  if (ps.c[0] >= 2) return {l0, ps.u[0]};
  const double l1 = solve_root(ps, 1, &resid);
  return {l0, l1};
}

double gap(const ProblemInstance& inst, double s) {
  const auto [l0, l1] = lowest_two(inst, s);
  return l1 - l0;
}

std::vector<double> eigenvector(const ProblemInstance& inst,
                                const SpectrumSample& sample, std::size_t which) {
  const std::size_t big_n = inst.size();
  if (which >= sample.eigenvalues.size()) {
    throw DimensionError("eigenvector index out of range");
  }
  std::vector<double> v(big_n, 0.0);
  const std::int32_t pj = sample.pole_index[which];
  const std::int32_t rank = sample.copy_rank[which];

  if (sample.s == 1.0) {
    // basis vector of the item holding this diagonal entry
    v[sample.pole_members[pj][rank]] = 1.0;
    return v;
  }
  if (rank == 0) {
    // secular root: v_k = C / (d_k - lambda)
    const double lambda = sample.eigenvalues[which];
    const double s = sample.s;
    double norm2 = 0.0;
    for (std::size_t k = 0; k < big_n; ++k) {
      const double d = 1.0 - s + s * inst.f()[k];
      v[k] = 1.0 / (d - lambda);
      norm2 += v[k] * v[k];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
    return v;
  }
  // deflated copy: sum-zero vector supported on the tie group
  const auto& g = sample.pole_members[pj];
  const double r = static_cast<double>(rank);
  const double norm = std::sqrt(r * (r + 1.0));
  for (std::int32_t i = 0; i < rank; ++i) {
    v[g[static_cast<std::size_t>(i)]] = 1.0 / norm;
  }
  v[g[static_cast<std::size_t>(rank)]] = -r / norm;
  return v;
}

std::vector<double> ground_state(const ProblemInstance& inst, double s) {
  check_s(s);
  const std::size_t big_n = inst.size();
  std::vector<double> v(big_n, 0.0);
  if (s == 1.0) {
    v[inst.marked()] = 1.0;
    return v;
  }
  PoleSystem ps = build_poles(inst, s, false);
  double resid;
  const double l0 = solve_root(ps, 0, &resid);
  double norm2 = 0.0;
  for (std::size_t k = 0; k < big_n; ++k) {
    const double d = 1.0 - s + s * inst.f()[k];
    v[k] = 1.0 / (d - l0);
    norm2 += v[k] * v[k];
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& x : v) x *= inv;
  return v;
}

std::vector<SpectrumSample> sweep(const ProblemInstance& inst,
                                  const std::vector<double>& s_values) {
  std::vector<SpectrumSample> out(s_values.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(s_values.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = solve_impl(inst, s_values[i], false);
  }
  return out;
}

GapFunction::GapFunction(ProblemInstance inst) : inst_(std::move(inst)) {}

double GapFunction::operator()(double s) const {
  {
    std::shared_lock lock(mu_);
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
  }
  const double g = gap(inst_, s);
  std::unique_lock lock(mu_);
  cache_.emplace(s, g);
  return g;
}

namespace {

struct GoldenBest {
  double x;
  double fx;
};

// Golden-section minimization tracking the best point ever evaluated, so the
// result can never exceed the bracket samples it started from.
template <typename F>
GoldenBest golden_min(F&& f, double a, double b, double tol, GoldenBest best) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  auto consider = [&](double x, double fx) {
    if (fx < best.fx) best = {x, fx};
  };
  consider(x1, f1);
  consider(x2, f2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
      consider(x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
      consider(x2, f2);
    }
  }
  return best;
}

MinGapResult min_gap_impl(const ProblemInstance& inst, int grid_points,
                          double refine_tol, bool parallel) {
  if (grid_points < 64) {
    throw ArgumentError("min_gap needs at least 64 grid points");
  }
  if (!(refine_tol > 0.0)) {
    throw ArgumentError("min_gap refine tolerance must be positive");
  }
  const int g = grid_points;
  std::vector<double> ss(g), gg(g);
  for (int i = 0; i < g; ++i) {
    ss[i] = static_cast<double>(i) / static_cast<double>(g - 1);
  }
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (int i = 0; i < g; ++i) {
    gg[i] = gap(inst, ss[i]);
  }
  (void)parallel;

  int arg = 0;
  for (int i = 1; i < g; ++i) {
    if (gg[i] < gg[arg]) arg = i;
  }
  GoldenBest best{ss[arg], gg[arg]};

  // Refine every valley competitive with the global sample minimum; a single
  // narrow dip between grid nodes must not be lost to a broad shallow one.
  const double cutoff = gg[arg] * 1.5 + 1e-300;
  auto f = [&](double s) { return gap(inst, s); };
  for (int i = 0; i < g; ++i) {
    const bool left_ok = i == 0 || gg[i] <= gg[i - 1];
    const bool right_ok = i == g - 1 || gg[i] <= gg[i + 1];
    if (!(left_ok && right_ok) || gg[i] > cutoff) continue;
    const double a = ss[std::max(i - 1, 0)];
    const double b = ss[std::min(i + 1, g - 1)];
    best = golden_min(f, a, b, refine_tol, best);
  }
  return {best.x, best.fx};
}

}  // namespace

MinGapResult min_gap(const ProblemInstance& inst, int grid_points,
                     double refine_tol) {
  return min_gap_impl(inst, grid_points, refine_tol, true);
}

namespace ref {

SpectrumSample eigenvalues(const ProblemInstance& inst, double s) {
  return solve_impl(inst, s, false);
}

std::vector<SpectrumSample> sweep(const ProblemInstance& inst,
                                  const std::vector<double>& s_values) {
  std::vector<SpectrumSample> out(s_values.size());
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    out[i] = solve_impl(inst, s_values[i], false);
  }
  return out;
}

MinGapResult min_gap(const ProblemInstance& inst, int grid_points,
                     double refine_tol) {
  return min_gap_impl(inst, grid_points, refine_tol, false);
}

}  // namespace ref

}  // namespace adia
