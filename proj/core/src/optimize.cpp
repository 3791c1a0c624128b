#include "rabi/optimize.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "rabi/states.hpp"
#include "rabi/variational.hpp"

namespace rabi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMinRelativeNorm = 1e-6;

struct Simplex {
  std::vector<std::vector<double>> x;
  std::vector<double> f;
};

struct CountingObjective {
  const Objective& f;
  long evals = 0;
  double operator()(std::span<const double> x) {
    ++evals;
    const double v = f(x);
    return std::isfinite(v) ? v : kInf;
  }
};

double diameter(const Simplex& s) {
  double d = 0.0;
  for (std::size_t i = 1; i < s.x.size(); ++i)
    for (std::size_t k = 0; k < s.x[0].size(); ++k)
      d = std::max(d, std::abs(s.x[i][k] - s.x[0][k]));
  return d;
}

void sort_simplex(Simplex& s) {
  std::vector<std::size_t> idx(s.f.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return s.f[a] < s.f[b]; });
  Simplex out;
  for (auto i : idx) {
    out.x.push_back(s.x[i]);
    out.f.push_back(s.f[i]);
  }
  s = std::move(out);
}

struct SimplexRun {
  std::vector<double> x;
  double f;
  bool hit_cap;
};

// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
SimplexRun nelder_mead(CountingObjective& f, std::vector<double> x0,
                       const std::vector<double>& step, double tol, long budget) {
  const std::size_t n = x0.size();
  Simplex s;
  s.x.push_back(x0);
  s.f.push_back(f(x0));
  for (std::size_t i = 0; i < n; ++i) {
    auto xi = x0;
    xi[i] += step[i];
    s.f.push_back(f(xi));
    s.x.push_back(std::move(xi));
  }
  const long start_evals = f.evals;

  auto affine = [n](const std::vector<double>& c, const std::vector<double>& w, double t) {
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = c[k] + t * (w[k] - c[k]);
    return out;
  };

  while (true) {
    sort_simplex(s);
    const double spread = s.f.back() - s.f.front();
    if (diameter(s) < tol ||
        (std::isfinite(spread) && spread < tol * std::max(1.0, std::abs(s.f.front())))) {
      return {s.x.front(), s.f.front(), false};
    }
    if (f.evals - start_evals >= budget) return {s.x.front(), s.f.front(), true};

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += s.x[i][k] / double(n);

    const auto xr = affine(centroid, s.x.back(), -1.0);
    const double fr = f(xr);
    if (fr < s.f.front()) {
      const auto xe = affine(centroid, s.x.back(), -2.0);
      const double fe = f(xe);
      if (fe < fr) {
        s.x.back() = xe;
        s.f.back() = fe;
      } else {
        s.x.back() = xr;
        s.f.back() = fr;
      }
      continue;
    }
    if (fr < s.f[n - 1]) {
      s.x.back() = xr;
      s.f.back() = fr;
      continue;
    }
    const bool outside = fr < s.f.back();
    const auto xc = outside ? affine(centroid, s.x.back(), -0.5)
                            : affine(centroid, s.x.back(), 0.5);
    const double fc = f(xc);
    if (fc < (outside ? fr : s.f.back())) {
      s.x.back() = xc;
      s.f.back() = fc;
      continue;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      s.x[i] = affine(s.x[0], s.x[i], 0.5);
      s.f[i] = f(s.x[i]);
    }
  }
}

std::vector<double> default_step(std::span<const double> x, const MinimizeOptions& opts) {
  if (!opts.initial_step.empty()) return opts.initial_step;
  std::vector<double> step(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) step[i] = 0.1 * std::max(1.0, std::abs(x[i]));
  return step;
}

// Simplex with restarts from the best vertex; restart edges shrink tenfold
// each round until a restart no longer improves the value.
SimplexRun simplex_with_restarts(CountingObjective& f, std::vector<double> x0,
                                 const MinimizeOptions& opts) {
  std::vector<double> step = default_step(x0, opts);
  const long start = f.evals;
  SimplexRun best = nelder_mead(f, std::move(x0), step, opts.tol, opts.max_evals_per_start);
  for (int round = 0; round < 12 && !best.hit_cap; ++round) {
    for (double& s : step) s = std::max(s * 0.1, 1e-7);
    const long left = opts.max_evals_per_start - (f.evals - start);
    if (left <= 0) {
      best.hit_cap = true;
      break;
    }
    SimplexRun again = nelder_mead(f, best.x, step, opts.tol, left);
    const double gain = best.f - again.f;
    const bool improved = again.f < best.f;
    if (improved) best = again;
    best.hit_cap = again.hit_cap;
    if (!improved || gain < opts.tol * std::max(1.0, std::abs(best.f))) break;
  }
  return best;
}

// Newton steps on a finite-difference Hessian whose eigenvalues are replaced
// by their magnitudes (floored), so flat or slightly concave directions give
// bounded descent steps.  Falls back to steepest descent when the Newton
// step fails the line search.  Monotone in f.
void newton_polish(CountingObjective& f, std::vector<double>& x, double& fx,
                   double fd_step) {
  const std::size_t n = x.size();
  const double hh = 1e-4;
  for (int iter = 0; iter < 60; ++iter) {
    const std::vector<double> g = fd_gradient(f.f, x, fd_step);
    f.evals += static_cast<long>(2 * n);
    double gmax = 0.0;
    for (double gi : g) gmax = std::max(gmax, std::abs(gi));
    if (!std::isfinite(gmax) || gmax < 1e-10) return;

    Eigen::MatrixXd hess(n, n);
    auto at = [&](std::size_t i, double di, std::size_t j, double dj) {
      std::vector<double> y = x;
      y[i] += di;
      y[j] += dj;
      return f(y);
    };
    for (std::size_t i = 0; i < n; ++i) {
      hess(i, i) = (at(i, hh, i, 0.0) - 2.0 * fx + at(i, -hh, i, 0.0)) / (hh * hh);
      for (std::size_t j = 0; j < i; ++j) {
        const double v = (at(i, hh, j, hh) - at(i, hh, j, -hh) - at(i, -hh, j, hh) +
                          at(i, -hh, j, -hh)) / (4.0 * hh * hh);
        hess(i, j) = hess(j, i) = v;
      }
    }
    const Eigen::VectorXd grad =
        Eigen::Map<const Eigen::VectorXd>(g.data(), static_cast<Eigen::Index>(n));
    std::vector<Eigen::VectorXd> directions;
    if (hess.allFinite()) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hess);
      Eigen::VectorXd lam = es.eigenvalues().cwiseAbs();
      const double floor = 1e-6 * std::max(1.0, lam.maxCoeff());
      for (Eigen::Index i = 0; i < lam.size(); ++i) lam(i) = std::max(lam(i), floor);
      const Eigen::MatrixXd& v = es.eigenvectors();
      Eigen::VectorXd dir = -v * (v.transpose() * grad).cwiseQuotient(lam);
      if (dir.allFinite()) directions.push_back(dir);
    }
    directions.push_back(-grad / std::max(1.0, grad.norm()));

    bool moved = false;
    for (const Eigen::VectorXd& dir : directions) {
      double t = 1.0;
      for (int k = 0; k < 50 && !moved; ++k, t *= 0.5) {
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + t * dir(static_cast<Eigen::Index>(i));
        const double fy = f(y);
        if (fy < fx) {
          x = std::move(y);
          fx = fy;
          moved = true;
        }
      }
      if (moved) break;
    }
    if (!moved) return;
  }
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::vector<double> fd_gradient(const Objective& f, std::span<const double> x, double h) {
  std::vector<double> g(x.size());
  std::vector<double> y(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = x[i] + h;
    const double fp = f(y);
    y[i] = x[i] - h;
    const double fm = f(y);
    y[i] = x[i];
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

MinimizeResult minimize_scalar_field(const Objective& f,
                                     const std::vector<std::vector<double>>& starts,
                                     const MinimizeOptions& opts) {
  if (starts.empty()) throw InvalidArgument("minimize_scalar_field needs at least one start");
  const std::size_t n = starts.front().size();
  if (n < 1 || n > 5) throw InvalidArgument("minimize_scalar_field handles 1..5 parameters");

  CountingObjective counted{f};
  MinimizeResult out;
  bool have = false;
  bool best_hit_cap = false;
  for (const auto& s : starts) {
    if (s.size() != n) throw InvalidArgument("all starts must have the same dimension");
    if (!std::isfinite(counted(s))) continue;
    SimplexRun run = simplex_with_restarts(counted, s, opts);
    ++out.starts_tried;
    if (!have || run.f < out.value) {
      out.x = std::move(run.x);
      out.value = run.f;
      best_hit_cap = run.hit_cap;
      have = true;
    }
  }
  if (!have) throw InvalidArgument("objective is not finite at any start");

  newton_polish(counted, out.x, out.value, opts.fd_step);
  out.grad_norm = max_abs(fd_gradient(f, out.x, opts.fd_step));
  out.evaluations = counted.evals;
  out.converged = !best_hit_cap && std::isfinite(out.value) && out.grad_norm < opts.grad_tol;
  return out;
}

// ---------------------------------------------------------------------------
// Ansatz-level driver.

Ansatz2Params OptResult::as_two_state() const {
  if (const auto* a1 = std::get_if<Ansatz1Params>(&params)) return embed(*a1);
  return std::get<Ansatz2Params>(params);
}

double OptResult::mean_photon() const {
  if (const auto* a1 = std::get_if<Ansatz1Params>(&params)) return mean_photon_1css(*a1);
  return mean_photon_2css(std::get<Ansatz2Params>(params));
}

namespace {

// E + delta/2, the energy above the bare-spin level.  The optimizer works on
// this shifted value: at large delta/omega the energy itself sits near
// -delta/2 and its rounding would hide the last digits of the descent.
double ansatz_excess(const ModelParams& params, const AnsatzKind& kind, const Ansatz2Params& a) {
  const double half_delta = 0.5 * params.delta;
  if (!kind.two_state()) {
    const double xi = kind.squeezed() ? a.xi : 0.0;
    const double beta = a.beta1;
    const double eta2 = squeeze_eta(xi) * squeeze_eta(xi);
    const double sh = std::sinh(2.0 * xi);
    const double x = 2.0 * beta * beta * eta2;
    return params.omega * (sh * sh + beta * beta) - 2.0 * beta * params.alpha() -
           half_delta * std::expm1(-x) - 2.0 * params.gamma() * beta * eta2 * std::exp(-x);
  }
  Ansatz2Params b = a;
  if (!kind.squeezed()) b.xi = 0.0;
  const EnergyTerms t = energy_terms_2css(params, b);
  // Near-cancelling superpositions lose digits as 1/norm; keep the quotient
  // to ~1e-10 relative by staying away from them.
  if (!(t.norm >= kMinRelativeNorm * 2.0 * (b.c1 * b.c1 + b.c2 * b.c2))) return kInf;
  const double s = sign_of(kind.parity);
  const double eta2 = squeeze_eta(b.xi) * squeeze_eta(b.xi);
  const std::array<double, 2> c{b.c1, b.c2};
  const std::array<double, 2> beta{b.beta1, b.beta2};
  // (s atom + (delta/2) norm) = delta sum C_k C_l (<+f_k|+f_l> - s <+f_k|-f_l>)
  double spin = 0.0;
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t l = 0; l < 2; ++l) {
      const double u = 0.5 * eta2 * (beta[k] - beta[l]) * (beta[k] - beta[l]);
      const double v = 0.5 * eta2 * (beta[k] + beta[l]) * (beta[k] + beta[l]);
      const double bracket = s > 0 ? -std::exp(-u) * std::expm1(u - v) : std::exp(-u) + std::exp(-v);
      spin += c[k] * c[l] * bracket;
    }
  }
  return (params.delta * spin + t.photon + t.iso + s * t.ani) / t.norm;
}

}  // namespace

double ansatz_energy(const ModelParams& params, const AnsatzKind& kind,
                     const Ansatz2Params& a) {
  return ansatz_excess(params, kind, a) - 0.5 * params.delta;
}

namespace {

// Internal coordinates: [beta(, xi)] or [theta, beta1, beta2(, xi)] with
// C1 = cos(theta), C2 = sin(theta).
std::vector<double> to_coords(const AnsatzKind& kind, const Ansatz2Params& a) {
  if (!kind.two_state()) {
    if (kind.squeezed()) return {a.beta1, a.xi};
    return {a.beta1};
  }
  const double theta = std::atan2(a.c2, a.c1);
  if (kind.squeezed()) return {theta, a.beta1, a.beta2, a.xi};
  return {theta, a.beta1, a.beta2};
}

Ansatz2Params from_coords(const AnsatzKind& kind, std::span<const double> x) {
  if (!kind.two_state()) {
    Ansatz1Params a1{x[0], kind.squeezed() ? x[1] : 0.0};
    return embed(a1);
  }
  return {std::cos(x[0]), std::sin(x[0]), x[1], x[2], kind.squeezed() ? x[3] : 0.0};
}

Ansatz2Params canonicalize(const ModelParams& params, const AnsatzKind& kind,
                           Ansatz2Params a, double energy) {
  if (a.beta2 > a.beta1) {
    std::swap(a.c1, a.c2);
    std::swap(a.beta1, a.beta2);
  }
  if (a.c1 < 0.0 || (a.c1 == 0.0 && a.c2 < 0.0)) {
    a.c1 = -a.c1;
    a.c2 = -a.c2;
  }
  // A branch with a vanishing weight carries an arbitrary displacement; fold
  // it onto the dominant one when that leaves the energy unchanged.
  const double small = std::min(std::abs(a.c1), std::abs(a.c2));
  if (small < 1e-6) {
    Ansatz2Params merged = a;
    const double dominant_beta = std::abs(a.c1) >= std::abs(a.c2) ? a.beta1 : a.beta2;
    merged.beta1 = merged.beta2 = dominant_beta;
    const double total = a.c1 + a.c2;
    merged.c1 = std::abs(total) > 0.0 ? 1.0 : 0.0;
    merged.c2 = 0.0;
    const double e = ansatz_excess(params, kind, merged);
    if (e <= energy + 1e-12 * std::max(1.0, std::abs(energy))) return merged;
  }
  return a;
}

OptResult solve_ansatz_impl(const ModelParams& params, const AnsatzKind& kind,
                            const SolveOptions& opts) {
  params.validate();
  kind.validate();

  // Seeds in two-state layout; single-state kinds read beta1/xi.
  std::vector<Ansatz2Params> seeds;
  const double mf = params.alpha() / params.omega;  // minimizer of omega b^2 - 2 alpha b
  const ModelParams iso_equiv{params.delta, params.omega, params.alpha(), 1.0};
  const Ansatz1Params asym = params.delta > 0.0 ? asymptotic_params(iso_equiv)
                                                : Ansatz1Params{mf, 0.0};
  const double root_half = 1.0 / std::sqrt(2.0);

  std::vector<OptResult> nested;
  auto nested_solve = [&](AnsatzTag tag, Parity parity) {
    SolveOptions inner = opts;
    inner.warm_start.reset();
    try {
      nested.push_back(solve_ansatz_impl(params, {tag, parity}, inner));
    } catch (const NoConvergence& e) {
      nested.push_back(e.best());
    }
  };
  switch (kind.tag) {
    case AnsatzTag::CS1: break;
    case AnsatzTag::CSS1: nested_solve(AnsatzTag::CS1, Parity::Even); break;
    case AnsatzTag::CS2:
      nested_solve(AnsatzTag::CS1, Parity::Even);
      if (kind.parity == Parity::Odd) nested_solve(AnsatzTag::CS2, Parity::Even);
      break;
    case AnsatzTag::CSS2:
      nested_solve(AnsatzTag::CSS1, Parity::Even);
      nested_solve(AnsatzTag::CS2, kind.parity);
      if (kind.parity == Parity::Odd) nested_solve(AnsatzTag::CSS2, Parity::Even);
      break;
  }

  if (!kind.two_state()) {
    seeds.push_back({root_half, 0.0, asym.beta, 0.0, asym.xi});
    seeds.push_back({root_half, 0.0, mf, 0.0, 0.0});
    seeds.push_back({root_half, 0.0, 2.0 * mf, 0.0, 0.0});
    seeds.push_back({root_half, 0.0, 0.0, 0.0, 0.0});
  } else {
    seeds.push_back({std::cos(0.3), std::sin(0.3), mf, -mf, 0.05});
    seeds.push_back({std::cos(0.3), std::sin(0.3), asym.beta, -asym.beta, asym.xi});
    seeds.push_back({std::cos(0.1), std::sin(0.1), 2.0 * mf, 0.0, 0.05});
    seeds.push_back({std::cos(0.5), std::sin(0.5), mf, 0.0, 0.2});
    seeds.push_back({root_half, root_half, 0.5 * mf + 0.5, -0.5 * mf - 0.5, 0.1});
  }
  for (const OptResult& r : nested) {
    const Ansatz2Params a = r.as_two_state();
    if (!kind.two_state()) {
      seeds.push_back(a);
    } else if (std::holds_alternative<Ansatz1Params>(r.params)) {
      // Same state as C1 = 1, C2 = 0; the idle branch starts on each side.
      seeds.push_back({1.0, 0.0, a.beta1, -a.beta1, a.xi});
      seeds.push_back({std::cos(0.05), std::sin(0.05), a.beta1, 0.0, a.xi});
    } else {
      seeds.push_back(a);
    }
  }
  if (opts.warm_start) seeds.push_back(*opts.warm_start);

  std::vector<std::vector<double>> starts;
  for (const auto& s : seeds) starts.push_back(to_coords(kind, s));

  const Objective objective = [&](std::span<const double> x) {
    return ansatz_excess(params, kind, from_coords(kind, x));
  };
  const MinimizeResult m = minimize_scalar_field(objective, starts, opts.minimize);

  OptResult out;
  out.kind = kind;
  out.energy = m.value;
  out.starts_tried = m.starts_tried;
  out.grad_norm = m.grad_norm;
  out.converged = m.converged;

  // Never report worse than a nested optimum (those embed exactly).
  for (const OptResult& r : nested) {
    const double e = ansatz_excess(params, kind, r.as_two_state());
    if (e < out.energy) {
      out.energy = e;
      out.grad_norm = r.grad_norm;
      out.converged = r.converged;
    }
  }

  Ansatz2Params best = from_coords(kind, m.x);
  if (out.energy < m.value) {
    for (const OptResult& r : nested) {
      if (ansatz_excess(params, kind, r.as_two_state()) == out.energy) {
        best = r.as_two_state();
        if (kind.two_state() && std::holds_alternative<Ansatz1Params>(r.params)) {
          best = {1.0, 0.0, best.beta1, best.beta1, best.xi};
        }
        break;
      }
    }
  }

  if (kind.two_state()) {
    out.params = canonicalize(params, kind, best, out.energy);
  } else {
    out.params = Ansatz1Params{best.beta1, kind.squeezed() ? best.xi : 0.0};
  }
  out.energy -= 0.5 * params.delta;
  return out;
}

}  // namespace

OptResult solve_ansatz(const ModelParams& params, const AnsatzKind& kind,
                       const SolveOptions& opts) {
  OptResult r = solve_ansatz_impl(params, kind, opts);
  if (!r.converged) {
    throw NoConvergence("ansatz " + to_string(kind) + " did not converge (grad " +
                            std::to_string(r.grad_norm) + ")",
                        std::move(r));
  }
  return r;
}

}  // namespace rabi
