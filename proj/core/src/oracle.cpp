#include "hetero/oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace hetero {

Real to_real(const Rat& v) {
  Real out;
  mpfr_set_q(out.backend().data(), v.get_mpq_t(), MPFR_RNDN);
  return out;
}

Real to_real(const Surd& s) {
  Real out = to_real(s.rational_part());
  if (!s.is_rational()) out += to_real(s.surd_coeff()) * sqrt(to_real(s.radicand()));
  return out;
}

Rat to_rat(const Real& v) {
  Rat q;
  mpfr_get_q(q.get_mpq_t(), v.backend().data());
  return q;
}

std::string to_string(const Real& v, int digits) { return v.str(std::max(digits, 1) - 1, std::ios_base::scientific); }

Real speed_from_r(const Rat& r) {
  if (sgn(r) <= 0) throw std::invalid_argument("r must be positive");
  return to_real(Rat(1 / r - r));
}

namespace {

std::vector<Real> real_coeffs(const PolyQ& p) {
  std::vector<Real> out;
  for (const auto& c : p.coeffs()) out.push_back(to_real(c));
  return out;
}

Real horner(const std::vector<Real>& a, const Real& s) {
  Real acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * s + *it;
  return acc;
}

// Coefficients of p(x0 + s) in s.
std::vector<Real> recentre(const std::vector<Real>& p, const Real& x0) {
  std::vector<Real> c = p;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += x0 * c[j];
  return c;
}

int pick_order(const OracleOptions& opt, const Real& tol) {
  if (opt.order > 0) return opt.order;
  double digits = -static_cast<double>(log10(tol));
  return std::clamp(static_cast<int>(std::ceil(digits * 0.85)), 20, 140);
}

// Step length keeping the last two Taylor terms below tol.
Real step_length(const std::vector<Real>& a, const std::vector<Real>* b, const Real& tol) {
  const int n = static_cast<int>(a.size()) - 1;
  Real h = -1;
  for (int k : {n - 1, n}) {
    Real m = abs(a[static_cast<std::size_t>(k)]);
    if (b) m = std::max(m, Real(abs((*b)[static_cast<std::size_t>(k)])));
    if (m == 0) continue;
    Real hk = pow(tol / m, Real(1) / k);
    if (h < 0 || hk < h) h = hk;
  }
  return h < 0 ? Real(1) : h * Real("0.7");
}

Real tail(const std::vector<Real>& a, const Real& h) {
  const std::size_t n = a.size() - 1;
  return abs(a[n]) * pow(h, static_cast<int>(n)) + abs(a[n - 1]) * pow(h, static_cast<int>(n - 1));
}

Real floor_error() { return Real("1e-145"); }

struct PhaseRun {
  std::vector<Real> values;
  std::vector<Real> local;  // accumulated truncation estimate at each grid point
  bool complete = true;
  Real reached;
  std::size_t filled = 0;
};

// Integrates gamma gamma' = c gamma - g(x) from the seed at eps to 1 - delta.
PhaseRun phase_run(const std::vector<Real>& g, const Real& c, const std::vector<Real>& seed,
                   const std::vector<Real>& grid, const OracleOptions& opt, const Real& tol) {
  PhaseRun run;
  run.values.resize(grid.size());
  run.local.resize(grid.size());
  const int N = pick_order(opt, tol);
  const Real x_end = 1 - opt.delta;
  Real x = opt.eps;
  Real y = horner(seed, x);
  Real seed_err = 2 * abs(seed.back()) * pow(x, static_cast<int>(seed.size() - 1));
  Real acc = seed_err;
  std::size_t gi = 0;
  while (gi < grid.size() && grid[gi] <= x) {
    Real err = 2 * abs(seed.back()) * pow(grid[gi], static_cast<int>(seed.size() - 1));
    run.values[gi] = horner(seed, grid[gi]);
    run.local[gi] = err;
    ++gi;
  }
  std::vector<Real> a(static_cast<std::size_t>(N) + 1);
  while (x < x_end) {
    if (y >= 0) {
      run.complete = false;
      run.reached = x;
      break;
    }
    std::vector<Real> G = recentre(g, x);
    a[0] = y;
    for (int k = 0; k < N; ++k) {
      Real s = c * a[static_cast<std::size_t>(k)];
      if (static_cast<std::size_t>(k) < G.size()) s -= G[static_cast<std::size_t>(k)];
      for (int i = 1; i <= k; ++i) s -= (k + 1 - i) * a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(k + 1 - i)];
      a[static_cast<std::size_t>(k + 1)] = s / ((k + 1) * a[0]);
    }
    Real h = step_length(a, nullptr, tol);
    if (h < Real("1e-60")) {
      run.complete = false;
      run.reached = x;
      break;
    }
    if (x + h > x_end) h = x_end - x;
    acc += tail(a, h);
    while (gi < grid.size() && grid[gi] <= x + h) {
      run.values[gi] = horner(a, grid[gi] - x);
      run.local[gi] = acc;
      ++gi;
    }
    y = horner(a, h);
    x += h;
  }
  run.filled = gi;
  if (run.complete) {
    run.reached = x;
    // Close with the slow eigendirection of the node: gamma ~ -lambda (x - 1),
    // plus a quadratic term matching the value at x_end.
    Real gp1 = 0;
    for (std::size_t k = 1; k < g.size(); ++k) gp1 += k * g[k];
    Real disc = c * c - 4 * gp1;
    if (disc < 0) {
      run.complete = false;
    } else {
      Real lam = (-c + sqrt(disc)) / 2;
      Real mismatch = y - (-lam * (x - 1));
      for (; gi < grid.size(); ++gi) {
        Real w = (1 - grid[gi]) / opt.delta;
        Real corr = mismatch * w * w;
        run.values[gi] = -lam * (grid[gi] - 1) + corr;
        run.local[gi] = acc + 2 * abs(corr);
      }
      run.filled = gi;
    }
  }
  return run;
}

void check_grid(const std::vector<Real>& grid) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i - 1] < grid[i])) throw std::invalid_argument("oracle grid must be strictly increasing");
}

}  // namespace

std::vector<Real> separatrix_seed(const PolyQ& gq, const Real& c, int degree) {
  std::vector<Real> g = real_coeffs(gq);
  auto gk = [&](int k) { return static_cast<std::size_t>(k) < g.size() ? g[static_cast<std::size_t>(k)] : Real(0); };
  Real d = c * c - 4 * gk(1);
  if (d < 0) throw HypothesisViolated("saddle at the origin", "c^2 - 4 g'(0) < 0");
  std::vector<Real> s(static_cast<std::size_t>(degree) + 1);
  s[0] = 0;
  s[1] = (c - sqrt(d)) / 2;
  for (int m = 2; m <= degree; ++m) {
    Real acc = -gk(m);
    for (int i = 2; i <= m - 1; ++i) acc -= (m + 1 - i) * s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(m + 1 - i)];
    s[static_cast<std::size_t>(m)] = acc / ((m + 1) * s[1] - c);
  }
  return s;
}

OrbitSample integrate_phase(const ReactionTerm& rt, const Real& c, const std::vector<Real>& grid, const OracleOptions& opt) {
  check_grid(grid);
  for (const auto& x : grid)
    if (!(x > 0 && x < 1)) throw OutOfRange("phase grid points must lie in (0, 1)");
  std::vector<Real> g = real_coeffs(rt.g);
  std::vector<Real> seed = separatrix_seed(rt.g, c, opt.seed_degree);
  PhaseRun a = phase_run(g, c, seed, grid, opt, opt.tol);
  OrbitSample out;
  out.frame = Frame::Phase;
  out.reaction = rt.name;
  out.c = c;
  out.complete = a.complete;
  out.reached = a.reached;
  std::size_t n = a.filled;
  if (opt.estimate_error) {
    PhaseRun b = phase_run(g, c, seed, grid, opt, opt.reference_tol);
    n = std::min(n, b.filled);
    for (std::size_t i = 0; i < n; ++i) {
      out.abscissas.push_back(grid[i]);
      out.values.push_back(b.values[i]);
      out.errors.push_back(2 * abs(a.values[i] - b.values[i]) + b.local[i] + floor_error());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      out.abscissas.push_back(grid[i]);
      out.values.push_back(a.values[i]);
      out.errors.push_back(a.local[i] + floor_error());
    }
  }
  if (!out.complete && !opt.allow_partial)
    throw StepFailure("phase integration stopped: gamma reached zero before x = 1 or the node is not real",
                      static_cast<double>(out.reached));
  return out;
}

OrbitSample integrate_phase(const ReactionTerm& rt, const Rat& r, const std::vector<Rat>& grid, const OracleOptions& opt) {
  std::vector<Real> g;
  for (const auto& x : grid) g.push_back(to_real(x));
  OrbitSample s = integrate_phase(rt, speed_from_r(r), g, opt);
  s.params = "r=" + to_string(r);
  return s;
}

namespace {

struct TimeStep {
  Real t0;
  Real h;
  std::vector<Real> X;
};

struct TimeRun {
  std::vector<Real> values;
  std::vector<Real> local;
  bool seed_too_late = false;
  Real anchor;
};

// Taylor coefficients of the planar system x' = -y, y' = -c y + g(x) at (x0, y0).
void planar_coeffs(const std::vector<Real>& g, const Real& c, const Real& x0, const Real& y0, int N,
                   std::vector<Real>& X, std::vector<Real>& Y, std::vector<std::vector<Real>>& pw) {
  const std::size_t d = g.size() ? g.size() - 1 : 0;
  X.assign(static_cast<std::size_t>(N) + 1, Real(0));
  Y.assign(static_cast<std::size_t>(N) + 1, Real(0));
  pw.assign(d + 1, std::vector<Real>(static_cast<std::size_t>(N) + 1, Real(0)));
  X[0] = x0;
  Y[0] = y0;
  for (int k = 0; k < N; ++k) {
    const std::size_t ku = static_cast<std::size_t>(k);
    Real G = k == 0 && !g.empty() ? g[0] : Real(0);
    if (d >= 1) {
      pw[1][ku] = X[ku];
      G += g[1] * X[ku];
    }
    for (std::size_t j = 2; j <= d; ++j) {
      Real s = 0;
      for (std::size_t i = 0; i <= ku; ++i) s += X[i] * pw[j - 1][ku - i];
      pw[j][ku] = s;
      G += g[j] * s;
    }
    X[ku + 1] = -Y[ku] / (k + 1);
    Y[ku + 1] = (-c * Y[ku] + G) / (k + 1);
  }
}

TimeRun time_run(const std::vector<Real>& g, const Real& c, const std::vector<Real>& seed, const Real& eps,
                 const std::vector<Real>& t_grid, const OracleOptions& opt, const Real& tol) {
  TimeRun run;
  const int N = pick_order(opt, tol);
  Real x = eps, y = horner(seed, eps), t = 0;
  Real acc = 2 * abs(seed.back()) * pow(eps, static_cast<int>(seed.size() - 1));
  std::vector<TimeStep> steps;
  std::vector<Real> accs;
  std::vector<Real> X, Y;
  std::vector<std::vector<Real>> pw;
  bool anchored = false;
  const Real half("0.5");
  const Real t_last = t_grid.empty() ? Real(0) : t_grid.back();
  for (int guard = 0; guard < 200000; ++guard) {
    planar_coeffs(g, c, x, y, N, X, Y, pw);
    Real h = step_length(X, &Y, tol);
    if (h < Real("1e-60")) throw StepFailure("time integration step size underflow", static_cast<double>(x));
    acc += tail(X, h) + tail(Y, h);
    Real x1 = horner(X, h);
    if (!anchored && x1 >= half) {
      // Newton on the step polynomial for x(t0 + s) = 1/2.
      std::vector<Real> dX(X.size() - 1);
      for (std::size_t k = 1; k < X.size(); ++k) dX[k - 1] = k * X[k];
      Real s = h * (half - x) / (x1 - x);
      for (int it = 0; it < 200; ++it) {
        Real ds = (horner(X, s) - half) / horner(dX, s);
        s -= ds;
        if (abs(ds) < Real("1e-155")) break;
      }
      run.anchor = t + s;
      anchored = true;
    }
    steps.push_back({t, h, X});
    accs.push_back(acc);
    Real y1 = horner(Y, h);
    t += h;
    x = x1;
    y = y1;
    // Along the connection x' = -y > 0 and 0 < x < 1; otherwise this orbit misses the node.
    if (y >= 0 || x >= 1) throw StepFailure("time integration left the strip 0 < x < 1, y < 0", static_cast<double>(x));
    if (!anchored && abs(y) < Real("1e-120"))
      throw StepFailure("orbit stalls at an equilibrium before x = 1/2", static_cast<double>(x));
    if (anchored && t > run.anchor + t_last) break;
  }
  if (!anchored) throw StepFailure("time integration never reached x = 1/2", static_cast<double>(x));
  if (!t_grid.empty() && run.anchor + t_grid.front() < 0) {
    run.seed_too_late = true;
    return run;
  }
  for (const auto& tg : t_grid) {
    Real tau = run.anchor + tg;
    auto it = std::upper_bound(steps.begin(), steps.end(), tau, [](const Real& v, const TimeStep& s) { return v < s.t0; });
    std::size_t idx = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - steps.begin()) - 1));
    run.values.push_back(horner(steps[idx].X, tau - steps[idx].t0));
    run.local.push_back(accs[idx]);
  }
  return run;
}

}  // namespace

OrbitSample integrate_time(const ReactionTerm& rt, const Real& c, const std::vector<Real>& t_grid, const OracleOptions& opt) {
  check_grid(t_grid);
  std::vector<Real> g = real_coeffs(rt.g);
  std::vector<Real> seed = separatrix_seed(rt.g, c, opt.seed_degree);
  const Real lam = -seed[1];  // unstable saddle eigenvalue
  Real eps = opt.eps;
  if (!t_grid.empty() && t_grid.front() < 0) eps = std::min(eps, Real(Real("0.05") * exp(lam * t_grid.front())));
  TimeRun a, b;
  for (int attempt = 0;; ++attempt) {
    a = time_run(g, c, seed, eps, t_grid, opt, opt.tol);
    if (!a.seed_too_late) break;
    if (attempt > 8) throw StepFailure("could not seed early enough for the requested times", 0.0);
    eps *= exp(lam * (a.anchor + t_grid.front() - 2));
  }
  OrbitSample out;
  out.frame = Frame::Time;
  out.reaction = rt.name;
  out.c = c;
  out.abscissas = t_grid;
  if (opt.estimate_error) {
    b = time_run(g, c, seed, eps, t_grid, opt, opt.reference_tol);
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
      out.values.push_back(b.values[i]);
      out.errors.push_back(2 * abs(a.values[i] - b.values[i]) + b.local[i] + floor_error());
    }
  } else {
    out.values = a.values;
    for (const auto& l : a.local) out.errors.push_back(l + floor_error());
  }
  out.reached = t_grid.empty() ? Real(0) : t_grid.back();
  return out;
}

OrbitSample integrate_time(const ReactionTerm& rt, const Rat& r, const std::vector<Rat>& t_grid, const OracleOptions& opt) {
  std::vector<Real> t;
  for (const auto& v : t_grid) t.push_back(to_real(v));
  OrbitSample s = integrate_time(rt, speed_from_r(r), t, opt);
  s.params = "r=" + to_string(r);
  return s;
}

namespace {

ScalarResult scalar_run(const std::vector<Real>& g, const Real& lambda, const Real& t_end, const OracleOptions& opt,
                        const Real& tol) {
  const int N = pick_order(opt, tol);
  Real x("0.5"), t = 0, acc = 0;
  const int dir = t_end >= 0 ? 1 : -1;
  std::vector<Real> X(static_cast<std::size_t>(N) + 1);
  std::vector<std::vector<Real>> pw;
  const std::size_t d = g.size() ? g.size() - 1 : 0;
  while (dir * (t_end - t) > 0) {
    pw.assign(d + 1, std::vector<Real>(static_cast<std::size_t>(N) + 1, Real(0)));
    X[0] = x;
    for (int k = 0; k < N; ++k) {
      const std::size_t ku = static_cast<std::size_t>(k);
      Real G = k == 0 && !g.empty() ? g[0] : Real(0);
      if (d >= 1) {
        pw[1][ku] = X[ku];
        G += g[1] * X[ku];
      }
      for (std::size_t j = 2; j <= d; ++j) {
        Real s = 0;
        for (std::size_t i = 0; i <= ku; ++i) s += X[i] * pw[j - 1][ku - i];
        pw[j][ku] = s;
        G += g[j] * s;
      }
      X[ku + 1] = -lambda * G / (k + 1);
    }
    Real h = step_length(X, nullptr, tol);
    if (h < Real("1e-60")) throw StepFailure("scalar integration step size underflow", static_cast<double>(t));
    if (h > abs(t_end - t)) h = abs(t_end - t);
    acc += tail(X, h);
    x = horner(X, Real(dir * h));
    t += dir * h;
  }
  return {x, acc};
}

}  // namespace

ScalarResult integrate_scalar(const PolyQ& gq, const Real& lambda, const Real& t, const OracleOptions& opt) {
  std::vector<Real> g = real_coeffs(gq);
  ScalarResult a = scalar_run(g, lambda, t, opt, opt.tol);
  if (!opt.estimate_error) return {a.value, a.error + floor_error()};
  ScalarResult b = scalar_run(g, lambda, t, opt, opt.reference_tol);
  return {b.value, 2 * abs(a.value - b.value) + b.error + floor_error()};
}

Real OrbitSample::max_error() const {
  Real m = 0;
  for (const auto& e : errors) m = std::max(m, e);
  return m;
}

void OrbitSample::write_csv(std::ostream& os, int digits) const {
  os << (frame == Frame::Phase ? "x,gamma,error\r\n" : "t,x,error\r\n");
  for (std::size_t i = 0; i < size(); ++i)
    os << to_string(abscissas[i], digits) << "," << to_string(values[i], digits) << "," << to_string(errors[i], 6) << "\r\n";
}

std::string OrbitSample::to_json(int digits) const {
  std::ostringstream os;
  os << "{\"frame\":\"" << (frame == Frame::Phase ? "phase" : "time") << "\",\"reaction\":\"" << reaction
     << "\",\"params\":\"" << params << "\",\"complete\":" << (complete ? "true" : "false") << ",\"points\":[";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) os << ",";
    os << "[\"" << to_string(abscissas[i], digits) << "\",\"" << to_string(values[i], digits) << "\",\""
       << to_string(errors[i], 6) << "\"]";
  }
  os << "]}";
  return os.str();
}

std::vector<Real> fit_phi_expansion(const OrbitSample& sample, const Real& rate, int n, const Real& max_condition) {
  if (sample.frame != Frame::Time) throw std::invalid_argument("fit_phi_expansion needs a time-frame sample");
  const std::size_t m = sample.size();
  const std::size_t nn = static_cast<std::size_t>(n);
  if (n < 1 || m < nn) throw std::invalid_argument("fit_phi_expansion needs at least n samples");
  std::vector<std::vector<Real>> A(m, std::vector<Real>(nn));
  std::vector<Real> rhs = sample.values;
  std::vector<Real> scale(nn, Real(0));
  for (std::size_t i = 0; i < m; ++i) {
    Real phi = exp(rate * sample.abscissas[i]);
    Real p = phi;
    for (std::size_t j = 0; j < nn; ++j) {
      A[i][j] = p;
      scale[j] = std::max(scale[j], Real(abs(p)));
      p *= phi;
    }
  }
  for (auto& row : A)
    for (std::size_t j = 0; j < nn; ++j) row[j] /= scale[j];
  // Householder QR, applied to rhs on the fly.
  for (std::size_t k = 0; k < nn; ++k) {
    Real norm = 0;
    for (std::size_t i = k; i < m; ++i) norm += A[i][k] * A[i][k];
    norm = sqrt(norm);
    if (norm == 0) throw IllConditioned("rank-deficient design matrix");
    Real alpha = A[k][k] > 0 ? Real(-norm) : norm;
    std::vector<Real> v(m - k);
    for (std::size_t i = k; i < m; ++i) v[i - k] = A[i][k];
    v[0] -= alpha;
    Real vv = 0;
    for (const auto& e : v) vv += e * e;
    if (vv == 0) continue;
    for (std::size_t j = k; j < nn; ++j) {
      Real dot = 0;
      for (std::size_t i = k; i < m; ++i) dot += v[i - k] * A[i][j];
      Real f = 2 * dot / vv;
      for (std::size_t i = k; i < m; ++i) A[i][j] -= f * v[i - k];
    }
    Real dot = 0;
    for (std::size_t i = k; i < m; ++i) dot += v[i - k] * rhs[i];
    Real f = 2 * dot / vv;
    for (std::size_t i = k; i < m; ++i) rhs[i] -= f * v[i - k];
  }
  Real dmax = 0, dmin = -1;
  for (std::size_t k = 0; k < nn; ++k) {
    Real d = abs(A[k][k]);
    dmax = std::max(dmax, d);
    if (dmin < 0 || d < dmin) dmin = d;
  }
  if (dmin == 0 || dmax / dmin > max_condition) throw IllConditioned("design matrix condition exceeds threshold");
  std::vector<Real> b(nn);
  for (std::size_t k = nn; k-- > 0;) {
    Real s = rhs[k];
    for (std::size_t j = k + 1; j < nn; ++j) s -= A[k][j] * b[j];
    b[k] = s / A[k][k];
  }
  for (std::size_t j = 0; j < nn; ++j) b[j] /= scale[j];
  std::vector<Real> a(nn);
  for (std::size_t j = 0; j < nn; ++j) a[j] = b[j] / pow(b[0], static_cast<int>(j + 1));
  return a;
}

}  // namespace hetero
