#pragma once

// Real univariate polynomials (ascending coefficient order) and a
// self-contained simultaneous root finder.

#include <complex>
#include <initializer_list>
#include <vector>

namespace netgame {

class Polynomial {
 public:
  Polynomial() = default;  // the zero polynomial
  Polynomial(std::initializer_list<double> ascending);
  explicit Polynomial(std::vector<double> ascending);

  static Polynomial constant(double c);

  // Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  // Coefficient of x^k; 0 beyond the degree.
  double coeff(int k) const;
  const std::vector<double>& coeffs() const { return c_; }
  double leading() const { return c_.empty() ? 0.0 : c_.back(); }
  double inf_norm() const;  // max |coeff|

  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> x) const;

  Polynomial derivative() const;

  // Copy with leading coefficients of magnitude <= rel_tol * max|coeff|
  // dropped. Construction already strips exact zeros; this is for
  // coefficients that are only zero up to floating-point noise.
  Polynomial trimmed(double rel_tol) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(double k);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double k) { return a *= k; }
  friend Polynomial operator*(double k, Polynomial a) { return a *= k; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

 private:
  void strip();  // drop exact-zero leading coefficients
  std::vector<double> c_;
};

// All complex roots, multiplicity included, by Aberth-Ehrlich iteration with
// deterministic circle seeding; exact zero roots at the origin are split off
// beforehand and every root gets a final Newton polish. Throws NumericError
// when a root fails the residual check |p(z)| <= 1e-8 * sum_k |c_k| |z|^k.
std::vector<std::complex<double>> find_roots(const Polynomial& p);

struct RootCluster {
  std::complex<double> center;
  int multiplicity = 0;
};

// Single-linkage clustering of nearby roots (multiple roots come back from
// the iteration as tight clusters).
std::vector<RootCluster> cluster_roots(const std::vector<std::complex<double>>& roots,
                                       double tol = 1e-6);

// Synthetic division by (x - root)^multiplicity.
Polynomial deflate_real_root(const Polynomial& p, double root, int multiplicity);

}  // namespace netgame
