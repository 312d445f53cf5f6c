#include "netgame/oog.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

namespace netgame {

SpectralPolynomial magnitude_squared(const Polynomial& p) {
  if (p.is_zero()) return {Polynomial{}};
  // Split p(s) = E(s^2) + s O(s^2); then |p(jw)|^2 = E(-w)^2 + w O(-w)^2
  // with w = omega^2, which is exact in the coefficients.
  std::vector<double> e, o;
  const auto& c = p.coeffs();
  for (size_t k = 0; k < c.size(); ++k) {
    const size_t j = k / 2;
    const double v = (j % 2 == 0) ? c[k] : -c[k];
    if (k % 2 == 0) {
      e.push_back(v);
    } else {
      o.push_back(v);
    }
  }
  const Polynomial ew{std::vector<double>(e)};
  const Polynomial ow{std::vector<double>(o)};
  return {ew * ew + Polynomial{0.0, 1.0} * (ow * ow)};
}

const char* to_string(GainResult::Reason r) {
  switch (r) {
    case GainResult::Reason::kBounded:
      return "bounded";
    case GainResult::Reason::kRelativeDegreeViolation:
      return "relative-degree-violation";
    case GainResult::Reason::kImaginaryAxisMonitorZero:
      return "imaginary-axis-monitor-zero";
  }
  return "?";
}

namespace {

// Multiplicity of a root of nt at w0, via clustered roots computed lazily.
int matched_multiplicity(const std::vector<RootCluster>& clusters, double w0) {
  int best = 0;
  for (const auto& cl : clusters) {
    if (std::abs(cl.center.imag()) > 1e-6 * std::max(1.0, std::abs(w0))) continue;
    if (std::abs(cl.center.real() - w0) <= 1e-6 * std::max(1.0, std::abs(w0))) {
      best = std::max(best, cl.multiplicity);
    }
  }
  return best;
}

bool integral_coeffs(const std::vector<double>& c) {
  for (double x : c) {
    if (std::floor(x) != x || std::abs(x) > 9.0e15) return false;
  }
  return true;
}

// nt' nm - nt nm' = sum over (i, j) of (i - j) a_i b_j w^{i+j-1}. Equal
// degrees cancel the leading term exactly, and the product coefficients can
// exceed the 2^53 integer range of a double, so integer inputs go through
// 128-bit accumulation. Non-integer inputs accumulate in doubles alongside
// an absolute-value sum per coefficient; a coefficient below 1e-12 of its
// own term sum is cancellation residue, not information, and is zeroed so
// it cannot fake a leading coefficient or a spurious critical point.
Polynomial critical_polynomial(const Polynomial& nt, const Polynomial& nm) {
  const auto& a = nt.coeffs();
  const auto& b = nm.coeffs();
  const int p = nt.degree(), q = nm.degree();
  if (p + q < 1) return Polynomial{};
  const int dn = p + q - 1;

  std::vector<double> out(dn + 1, 0.0);
  if (integral_coeffs(a) && integral_coeffs(b)) {
    std::vector<__int128> acc(dn + 1, 0);
    for (int i = 0; i <= p; ++i) {
      const auto ai = static_cast<__int128>(static_cast<long long>(a[i]));
      for (int j = 0; j <= q; ++j) {
        if (i + j < 1) continue;
        acc[i + j - 1] += (i - j) * ai * static_cast<long long>(b[j]);
      }
    }
    for (int k = 0; k <= dn; ++k) out[k] = static_cast<double>(acc[k]);
    return Polynomial{std::move(out)};
  }

  std::vector<double> noise(dn + 1, 0.0);
  for (int i = 0; i <= p; ++i) {
    for (int j = 0; j <= q; ++j) {
      if (i + j < 1) continue;
      const double term = (i - j) * a[i] * b[j];
      out[i + j - 1] += term;
      noise[i + j - 1] += std::abs(term);
    }
  }
  for (int k = 0; k <= dn; ++k) {
    if (std::abs(out[k]) <= 1e-12 * noise[k]) out[k] = 0.0;
  }
  return Polynomial{std::move(out)};
}

}  // namespace

GainResult output_to_output_gain(const AttackScenario& sc) {
  GainResult res;

  if (sc.numerator_target.is_zero() || sc.numerator_monitor.is_zero()) {
    throw NumericError("scenario has an identically zero channel numerator");
  }

  if (sc.rel_degree_monitor > sc.rel_degree_target) {
    res.value = ExtReal::infinity();
    res.reason = GainResult::Reason::kRelativeDegreeViolation;
    res.omega_kind = GainResult::OmegaKind::kInfinity;
    return res;
  }

  Polynomial nt = magnitude_squared(sc.numerator_target).poly;
  Polynomial nm = magnitude_squared(sc.numerator_monitor).poly;

  // A monitor-channel zero on the nonnegative real w-axis blinds the
  // monitor at a finite frequency; the ratio diverges there unless the
  // target channel carries the zero with at least the same multiplicity.
  // Matched zeros are cancelled so the critical-point scan stays finite.
  {
    const auto mclusters = cluster_roots(find_roots(nm));
    std::vector<RootCluster> tclusters;
    bool have_t = false;
    for (const auto& cl : mclusters) {
      const double w0 = std::max(cl.center.real(), 0.0);
      if (std::abs(cl.center.imag()) > 1e-6 * std::max(1.0, w0)) continue;
      if (cl.center.real() < -1e-9) continue;
      if (!have_t) {
        tclusters = cluster_roots(find_roots(nt));
        have_t = true;
      }
      if (cl.multiplicity > matched_multiplicity(tclusters, w0)) {
        res.value = ExtReal::infinity();
        res.reason = GainResult::Reason::kImaginaryAxisMonitorZero;
        res.omega_kind = GainResult::OmegaKind::kFinite;
        res.omega_star = std::sqrt(w0);
        return res;
      }
      nt = deflate_real_root(nt, w0, cl.multiplicity);
      nm = deflate_real_root(nm, w0, cl.multiplicity);
    }
  }

  res.reason = GainResult::Reason::kBounded;

  const auto ratio_at = [&](double w) {
    const double a = nt(w), b = nm(w);
    if (!std::isfinite(a) || !std::isfinite(b) || b <= 0.0) return -1.0;
    return a / b;
  };

  // Interior maxima are stationary points of nt/nm, i.e. roots of
  // d = nt' nm - nt nm'; the boundary contributes w = 0 and the w -> inf
  // limit. d vanishing identically means the ratio is constant.
  const Polynomial d = critical_polynomial(nt, nm);
  if (d.is_zero()) {
    const double r = ratio_at(0.0);
    if (r < 0.0) throw NumericError("constant ratio is undefined at w = 0");
    res.value = r;
    res.omega_kind = GainResult::OmegaKind::kNone;
    return res;
  }

  std::vector<double> candidates{0.0};
  for (const auto& cl : cluster_roots(find_roots(d))) {
    const double re = cl.center.real();
    if (std::abs(cl.center.imag()) > 1e-7 * std::max(1.0, std::abs(re))) continue;
    if (re < -1e-9) continue;
    candidates.push_back(std::max(re, 0.0));
  }
  std::sort(candidates.begin(), candidates.end());

  double best = -1.0, best_w = 0.0;
  for (double w : candidates) {
    const double r = ratio_at(w);
    if (r > best * (1.0 + 1e-12)) {
      best = r;
      best_w = w;
    }
  }

  if (nt.degree() == nm.degree()) {
    const double lim = nt.leading() / nm.leading();
    if (lim > best * (1.0 + 1e-12)) {
      res.value = lim;
      res.omega_kind = GainResult::OmegaKind::kInfinity;
      return res;
    }
  }

  if (best < 0.0) throw NumericError("gain evaluation produced no finite candidate");
  res.value = best;
  res.omega_kind = GainResult::OmegaKind::kFinite;
  res.omega_star = std::sqrt(best_w);
  return res;
}

namespace {

constexpr double kOmegaMin = 1e-6;
constexpr double kUnderflow = 1e-280;

std::vector<double> log_grid(double omega_max, int n_points) {
  if (n_points < 2) throw ValidationError("grid oracle needs at least 2 points");
  if (!(omega_max > kOmegaMin)) {
    throw ValidationError("omega_max must exceed the grid floor 1e-6");
  }
  std::vector<double> w(n_points);
  const double a = std::log(kOmegaMin), b = std::log(omega_max);
  for (int k = 0; k < n_points; ++k) {
    w[k] = std::exp(a + (b - a) * k / (n_points - 1));
  }
  // A gain attained only in the high-frequency limit converges like 1/omega^2,
  // so a grid capped at omega_max undershoots it by ~1/omega_max^2. A few far
  // tail samples keep the oracle tight for those cases without shifting the
  // grid's resolution near finite peaks.
  for (double tail : {1e6, 1e8}) {
    if (tail > omega_max) w.push_back(tail);
  }
  return w;
}

MatC shifted_laplacian(const MatD& l, double omega) {
  const int n = l.rows();
  MatC a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = std::complex<double>(l(i, j), i == j ? omega : 0.0);
  return a;
}

}  // namespace

double grid_gain_oracle(const AttackScenario& sc, double omega_max, int n_points) {
  const MatD l = laplacian(sc.graph);
  const int n = l.rows();
  double best = 0.0;
  long skipped = 0;
  for (double omega : log_grid(omega_max, n_points)) {
    const ComplexLU lu(shifted_laplacian(l, omega));
    std::vector<std::complex<double>> rhs(n);
    rhs[sc.roles.attack] = 1.0;
    const auto x = lu.solve(std::move(rhs));
    const double pt = std::norm(x[sc.roles.target]);
    const double pm = std::norm(x[sc.roles.monitor]);
    if (pm < kUnderflow) {
      ++skipped;
      continue;
    }
    best = std::max(best, pt / pm);
  }
  if (skipped > 0) {
    std::cerr << "grid_gain_oracle: skipped " << skipped
              << " grid points with vanishing monitor response\n";
  }
  return best;
}

std::vector<MatD> grid_gain_tables(const Graph& g, double omega_max, int n_points) {
  const MatD l = laplacian(g);
  const int n = g.size();
  std::vector<MatD> best(n, MatD(n, n, 0.0));
  std::vector<double> p(n), inv(n);
  long skipped = 0;
  for (double omega : log_grid(omega_max, n_points)) {
    const ComplexLU lu(shifted_laplacian(l, omega));
    for (int a = 0; a < n; ++a) {
      std::vector<std::complex<double>> rhs(n);
      rhs[a] = 1.0;
      const auto x = lu.solve(std::move(rhs));
      for (int v = 0; v < n; ++v) {
        p[v] = std::norm(x[v]);
        if (p[v] >= kUnderflow) {
          inv[v] = 1.0 / p[v];
        } else {
          inv[v] = 0.0;
          ++skipped;
        }
      }
      MatD& tab = best[a];
      for (int u = 0; u < n; ++u) {
        const double pu = p[u];
        for (int v = 0; v < n; ++v) {
          const double r = pu * inv[v];
          if (r > tab(u, v)) tab(u, v) = r;
        }
      }
    }
  }
  if (skipped > 0) {
    std::cerr << "grid_gain_tables: skipped " << skipped
              << " vanishing responses\n";
  }
  return best;
}

}  // namespace netgame
