#include "netgame/lti.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace netgame {

namespace {

void check_vertex(const Graph& g, Vertex v, const char* role) {
  if (v < 0 || v >= g.size()) {
    throw ValidationError(std::string(role) + " vertex outside 1.." +
                          std::to_string(g.size()));
  }
}

}  // namespace

AdjugateTable::AdjugateTable(const Graph& g) : n_(g.size()), unit_(g.unit_weights()) {
  // Faddeev-LeVerrier on M = -L:
  //   B_0 = I,  A_k = M B_{k-1},  c_k = -tr(A_k)/k,  B_k = A_k + c_k I,
  // giving det(sI - M) = s^n + c_1 s^{n-1} + ... + c_n and
  // adj(sI - M) = sum_{k=0}^{n-1} B_k s^{n-1-k}. With integer L every c_k
  // and B_k is an integer matrix, so the divisions by k are exact in
  // doubles as long as nothing exceeds 2^53.
  MatD m = laplacian(g);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = -m(i, j);

  b_.reserve(n_);
  b_.push_back(MatD::identity(n_));
  std::vector<double> q(n_ + 1, 0.0);
  q[n_] = 1.0;
  MatD ak;
  for (int k = 1; k <= n_; ++k) {
    ak = matmul(m, b_.back());
    const double ck = -trace(ak) / k;
    q[n_ - k] = ck;
    if (k == n_) {
      // B_n = A_n + c_n I must vanish; a noticeable residue means the
      // coefficients outgrew double precision.
      double resid = 0, scale = 1;
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
          resid = std::max(resid, std::abs(ak(i, j) + (i == j ? ck : 0.0)));
          scale = std::max(scale, std::abs(ak(i, j)));
        }
      if (resid > 1e-6 * scale) {
        throw NumericError("adjugate recursion lost precision (graph too large)");
      }
      break;
    }
    MatD bk = ak;
    for (int i = 0; i < n_; ++i) bk(i, i) += ck;
    b_.push_back(std::move(bk));
  }
  q_ = Polynomial(std::move(q));
}

Polynomial AdjugateTable::numerator(Vertex out, Vertex in) const {
  std::vector<double> c(n_, 0.0);
  for (int k = 0; k < n_; ++k) c[n_ - 1 - k] = b_[k](out, in);
  Polynomial p(std::move(c));
  // Unit-weight coefficients are exact, so exact-zero stripping already
  // happened; weighted graphs leave rounding dust on the leading terms.
  return unit_ ? p : p.trimmed(1e-9);
}

Polynomial characteristic_polynomial(const Graph& g) {
  return AdjugateTable(g).char_poly();
}

Polynomial numerator_polynomial(const Graph& g, Vertex out, Vertex in) {
  check_vertex(g, out, "output");
  check_vertex(g, in, "input");
  return AdjugateTable(g).numerator(out, in);
}

int relative_degree(const Graph& g, Vertex out, Vertex in) {
  check_vertex(g, out, "output");
  check_vertex(g, in, "input");
  const int n = g.size();
  if (g.unit_weights()) {
    const MatI l = g.laplacian_int();
    std::vector<std::int64_t> v(n, 0);
    v[in] = 1;
    bool overflow = false;
    for (int k = 0; k < n && !overflow; ++k) {
      if (v[out] != 0) return k + 1;
      std::vector<std::int64_t> next(n, 0);
      for (int i = 0; i < n; ++i) {
        std::int64_t acc = 0;
        for (int j = 0; j < n; ++j) acc -= l(i, j) * v[j];
        next[i] = acc;
        if (std::abs(acc) > (std::int64_t(1) << 52)) overflow = true;
      }
      v = std::move(next);
    }
    if (!overflow) {
      throw NumericError("no nonzero Markov parameter up to order n");
    }
  }
  const MatD l = laplacian(g);
  std::vector<double> v(n, 0.0);
  v[in] = 1.0;
  for (int k = 0; k < n; ++k) {
    if (std::abs(v[out]) > 1e-9 * n) return k + 1;
    std::vector<double> next(n, 0.0);
    double norm = 0;
    for (int i = 0; i < n; ++i) {
      double acc = 0;
      for (int j = 0; j < n; ++j) acc -= l(i, j) * v[j];
      next[i] = acc;
      norm = std::max(norm, std::abs(acc));
    }
    // Keep the iterate O(1) so the detection threshold stays meaningful.
    if (norm > 0) {
      for (double& x : next) x /= norm;
    }
    v = std::move(next);
  }
  throw NumericError("no nonzero Markov parameter up to order n");
}

AttackScenario AttackScenario::build(const Graph& g, VertexRole roles) {
  return build(g, AdjugateTable(g), roles);
}

AttackScenario AttackScenario::build(const Graph& g, const AdjugateTable& table,
                                     VertexRole roles) {
  check_vertex(g, roles.target, "target");
  check_vertex(g, roles.attack, "attack");
  check_vertex(g, roles.monitor, "monitor");
  if (roles.attack == roles.target) {
    throw ValidationError("attack vertex must differ from the target");
  }
  if (roles.monitor == roles.target) {
    throw ValidationError("monitor vertex must differ from the target");
  }

  AttackScenario sc{g,
                    roles,
                    table.char_poly(),
                    table.numerator(roles.target, roles.attack),
                    table.numerator(roles.monitor, roles.attack),
                    relative_degree(g, roles.target, roles.attack),
                    relative_degree(g, roles.monitor, roles.attack)};
  const int n = g.size();
  if (sc.numerator_target.degree() + sc.rel_degree_target != n ||
      sc.numerator_monitor.degree() + sc.rel_degree_monitor != n) {
    throw NumericError("numerator degree disagrees with the relative degree");
  }
  return sc;
}

ZeroSet invariant_zeros(const AttackScenario& sc, Channel ch) {
  const Polynomial& num =
      ch == Channel::kTarget ? sc.numerator_target : sc.numerator_monitor;
  const int r =
      ch == Channel::kTarget ? sc.rel_degree_target : sc.rel_degree_monitor;
  return ZeroSet{find_roots(num), r};
}

bool check_no_closed_positive_real_zeros(const ZeroSet& zeros, double tol_real,
                                         double tol_imag) {
  for (const auto& z : zeros.finite_zeros) {
    if (std::abs(z.imag()) <= tol_imag && z.real() >= -tol_real) return false;
  }
  return true;
}

}  // namespace netgame
