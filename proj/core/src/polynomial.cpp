#include "netgame/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "netgame/types.hpp"

namespace netgame {

Polynomial::Polynomial(std::initializer_list<double> ascending) : c_(ascending) {
  strip();
}

Polynomial::Polynomial(std::vector<double> ascending) : c_(std::move(ascending)) {
  strip();
}

Polynomial Polynomial::constant(double c) {
  return c == 0.0 ? Polynomial{} : Polynomial{c};
}

void Polynomial::strip() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

double Polynomial::coeff(int k) const {
  return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0.0;
}

double Polynomial::inf_norm() const {
  double m = 0;
  for (double c : c_) m = std::max(m, std::abs(c));
  return m;
}

double Polynomial::operator()(double x) const {
  double v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

std::complex<double> Polynomial::operator()(std::complex<double> x) const {
  std::complex<double> v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<double> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::trimmed(double rel_tol) const {
  const double cut = rel_tol * inf_norm();
  std::vector<double> c = c_;
  while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  strip();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  strip();
  return *this;
}

Polynomial& Polynomial::operator*=(double k) {
  if (k == 0.0) {
    c_.clear();
    return *this;
  }
  for (double& c : c_) c *= k;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> c(a.c_.size() + b.c_.size() - 1, 0.0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0.0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

namespace {

// One simultaneous-iteration step for all live root estimates. Returns the
// largest relative displacement.
double aberth_step(const std::vector<std::complex<double>>& mon,
                   std::vector<std::complex<double>>& z) {
  const int n = static_cast<int>(z.size());
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    std::complex<double> p = 0, dp = 0;
    for (int k = n; k >= 0; --k) {
      dp = dp * z[i] + p;
      p = p * z[i] + (k == n ? std::complex<double>(1.0) : mon[k]);
    }
    if (std::abs(p) == 0.0) continue;
    std::complex<double> newton;
    if (std::abs(dp) == 0.0) {
      newton = std::complex<double>(1e-8, 1e-8);
    } else {
      newton = p / dp;
    }
    std::complex<double> repel = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      std::complex<double> d = z[i] - z[j];
      if (std::abs(d) < 1e-300) d = std::complex<double>(1e-12, 1e-12);
      repel += 1.0 / d;
    }
    const std::complex<double> denom = 1.0 - newton * repel;
    const std::complex<double> w =
        std::abs(denom) < 1e-300 ? newton : newton / denom;
    z[i] -= w;
    worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[i])));
  }
  return worst;
}

}  // namespace

std::vector<std::complex<double>> find_roots(const Polynomial& p) {
  if (p.degree() <= 0) return {};

  std::vector<double> c = p.coeffs();
  std::vector<std::complex<double>> roots;
  size_t shift = 0;
  while (shift < c.size() - 1 && c[shift] == 0.0) ++shift;
  roots.assign(shift, std::complex<double>(0.0, 0.0));
  c.erase(c.begin(), c.begin() + static_cast<long>(shift));

  const int n = static_cast<int>(c.size()) - 1;
  if (n == 0) return roots;

  std::vector<std::complex<double>> mon(n);
  double radius = 0;
  for (int k = 0; k < n; ++k) {
    const double m = c[k] / c[n];
    mon[k] = m;
    radius = std::max(radius, std::abs(m));
  }
  radius += 1.0;

  std::vector<std::complex<double>> z(n);
  const double tau = 6.283185307179586476925286766559;
  for (int i = 0; i < n; ++i) {
    // Deterministic seeds: spread on a circle, slightly off any axis of
    // symmetry a real polynomial's root set might have.
    const double angle = tau * i / n + 0.7 / n + 0.13;
    const double r = radius * (1.0 + 0.05 * std::cos(3.7 * i + 1.0));
    z[i] = std::polar(r, angle);
  }

  for (int iter = 0; iter < 500; ++iter) {
    if (aberth_step(mon, z) <= 1e-12) break;
  }

  const Polynomial reduced{std::vector<double>(c)};
  const Polynomial dred = reduced.derivative();
  // Residuals are judged against the evaluation scale sum |c_k| |z|^k: at a
  // root the monomials cancel, so even an exact root evaluates to rounding
  // noise of that size. A coefficient-norm bound would be unattainable for
  // roots beyond the unit circle.
  const auto eval_scale = [&c, n](double az) {
    double s = std::abs(c[n]);
    for (int k = n - 1; k >= 0; --k) s = s * az + std::abs(c[k]);
    return s;
  };
  for (auto& zi : z) {
    // Polish steps are only kept when they reduce the residual. Near a
    // multiple root both p and p' sit at the rounding floor, so a raw
    // Newton quotient can be an arbitrary jump away from the cluster.
    double best = std::abs(reduced(zi));
    for (int it = 0; it < 4 && best > 0.0; ++it) {
      const std::complex<double> dv = dred(zi);
      if (std::abs(dv) < 1e-300) break;
      const std::complex<double> step = reduced(zi) / dv;
      if (std::abs(step) > 0.1 * (1.0 + std::abs(zi))) break;
      const std::complex<double> trial = zi - step;
      const double res = std::abs(reduced(trial));
      if (res >= best) break;
      zi = trial;
      best = res;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(zi))) break;
    }
    if (best > 1e-8 * eval_scale(std::abs(zi))) {
      throw NumericError("root finder failed the residual check");
    }
  }

  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

std::vector<RootCluster> cluster_roots(const std::vector<std::complex<double>>& roots,
                                       double tol) {
  const int n = static_cast<int>(roots.size());
  std::vector<int> group(n, -1);
  std::vector<RootCluster> out;
  for (int i = 0; i < n; ++i) {
    if (group[i] >= 0) continue;
    // Grow a single-linkage component starting from root i.
    std::vector<int> members{i};
    group[i] = static_cast<int>(out.size());
    for (size_t h = 0; h < members.size(); ++h) {
      for (int j = 0; j < n; ++j) {
        if (group[j] >= 0) continue;
        if (std::abs(roots[members[h]] - roots[j]) <= tol) {
          group[j] = group[i];
          members.push_back(j);
        }
      }
    }
    std::complex<double> mean = 0;
    for (int m : members) mean += roots[m];
    mean /= static_cast<double>(members.size());
    out.push_back({mean, static_cast<int>(members.size())});
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
  });
  return out;
}

Polynomial deflate_real_root(const Polynomial& p, double root, int multiplicity) {
  std::vector<double> c = p.coeffs();
  for (int m = 0; m < multiplicity; ++m) {
    if (c.size() <= 1) throw NumericError("deflation below degree 0");
    std::vector<double> q(c.size() - 1);
    double carry = c.back();
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
      q[k] = carry;
      carry = c[k] + carry * root;
    }
    // carry is the remainder p(root); dropped by construction.
    c = std::move(q);
  }
  return Polynomial(std::move(c));
}

}  // namespace netgame
