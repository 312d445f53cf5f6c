#pragma once

// SISO channel analysis of the consensus dynamics x' = -L x + e_a u driven
// at one vertex: the common denominator det(sI + L), per-channel numerators
// e_u^T adj(sI + L) e_a, relative degrees, and channel zeros.

#include <complex>
#include <vector>

#include "netgame/graph.hpp"
#include "netgame/linalg.hpp"
#include "netgame/polynomial.hpp"
#include "netgame/types.hpp"

namespace netgame {

// det(sI + L), monic of degree n with constant term 0 (connected graph).
Polynomial characteristic_polynomial(const Graph& g);

// One Faddeev-LeVerrier pass per graph; numerators of all n^2 channels read
// off the stored adjugate coefficient matrices. Coefficients are exact
// integers for unit weights (until they exceed 2^53).
class AdjugateTable {
 public:
  explicit AdjugateTable(const Graph& g);

  int size() const { return n_; }
  const Polynomial& char_poly() const { return q_; }

  // Numerator of the channel from input vertex `in` to output vertex `out`.
  Polynomial numerator(Vertex out, Vertex in) const;

 private:
  int n_ = 0;
  bool unit_ = true;
  Polynomial q_;
  std::vector<MatD> b_;  // adj(sI + L) = sum_k b_[k] s^{n-1-k}
};

Polynomial numerator_polynomial(const Graph& g, Vertex out, Vertex in);

// Index of the first nonzero Markov parameter e_out^T (-L)^k e_in, plus one.
// Exact integer arithmetic for unit weights (falling back to floating point
// with threshold 1e-9 * n if the iterates outgrow 2^53).
int relative_degree(const Graph& g, Vertex out, Vertex in);

// Everything the gain computation needs about one (target, attack, monitor)
// triple, derived once.
struct AttackScenario {
  Graph graph;
  VertexRole roles;
  Polynomial char_poly;
  Polynomial numerator_target;   // channel attack -> target
  Polynomial numerator_monitor;  // channel attack -> monitor
  int rel_degree_target = 0;
  int rel_degree_monitor = 0;

  static AttackScenario build(const Graph& g, VertexRole roles);
  static AttackScenario build(const Graph& g, const AdjugateTable& table,
                              VertexRole roles);
};

struct ZeroSet {
  std::vector<std::complex<double>> finite_zeros;
  int infinite_zero_degree = 0;  // the channel's relative degree
};

enum class Channel { kTarget, kMonitor };

// Finite invariant zeros of the chosen channel (numerator roots, polished,
// residual-checked) plus the degree of the zero at infinity.
ZeroSet invariant_zeros(const AttackScenario& sc, Channel ch);

// True when no finite zero lies on the closed positive real axis, i.e. no
// zero with |Im z| <= tol_imag and Re z >= -tol_real.
bool check_no_closed_positive_real_zeros(const ZeroSet& zeros,
                                         double tol_real = 1e-7,
                                         double tol_imag = 1e-7);

}  // namespace netgame
