#include "netgame/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

#include "netgame/types.hpp"

namespace netgame {

MatD matmul(const MatD& a, const MatD& b) {
  const int n = a.rows(), k = a.cols(), m = b.cols();
  MatD c(n, m);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      const double ail = a(i, l);
      if (ail == 0.0) continue;
      for (int j = 0; j < m; ++j) c(i, j) += ail * b(l, j);
    }
  return c;
}

MatI matmul(const MatI& a, const MatI& b) {
  const int n = a.rows(), k = a.cols(), m = b.cols();
  MatI c(n, m);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      const std::int64_t ail = a(i, l);
      if (ail == 0) continue;
      for (int j = 0; j < m; ++j) c(i, j) += ail * b(l, j);
    }
  return c;
}

double trace(const MatD& a) {
  double t = 0;
  for (int i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

ComplexLU::ComplexLU(MatC a) : lu(std::move(a)), perm(lu.rows()) {
  const int n = lu.rows();
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(lu(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(lu(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) throw NumericError("singular matrix in complex LU");
    if (piv != col) {
      std::swap(perm[piv], perm[col]);
      for (int j = 0; j < n; ++j) std::swap(lu(piv, j), lu(col, j));
    }
    const std::complex<double> d = lu(col, col);
    for (int r = col + 1; r < n; ++r) {
      const std::complex<double> f = lu(r, col) / d;
      lu(r, col) = f;
      if (f == std::complex<double>(0.0, 0.0)) continue;
      for (int j = col + 1; j < n; ++j) lu(r, j) -= f * lu(col, j);
    }
  }
}

std::vector<std::complex<double>> ComplexLU::solve(
    std::vector<std::complex<double>> b) const {
  const int n = lu.rows();
  std::vector<std::complex<double>> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[perm[i]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) x[i] -= lu(i, j) * x[j];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= lu(i, j) * x[j];
    x[i] /= lu(i, i);
  }
  return x;
}

std::vector<std::complex<double>> solve_complex(MatC a,
                                                std::vector<std::complex<double>> b) {
  return ComplexLU(std::move(a)).solve(std::move(b));
}

std::vector<double> symmetric_eigenvalues(MatD a) {
  const int n = a.rows();
  double off = 0, scale = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      scale = std::max(scale, std::abs(a(i, j)));
      if (i != j) off += a(i, j) * a(i, j);
    }
  const double tol = 1e-26 * std::max(scale * scale, 1e-300);
  for (int sweep = 0; sweep < 64 && off > tol; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) off += a(i, j) * a(i, j);
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

void parallel_for(int n, const std::function<void(int)>& fn, int max_threads) {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  int nt = max_threads > 0 ? std::min(max_threads, hw) : hw;
  nt = std::min(nt, n);
  if (nt <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  std::exception_ptr err;
  std::mutex err_mu;
  for (int t = 0; t < nt; ++t)
    pool.emplace_back([&, t] {
      try {
        for (int i = t; i < n; i += nt) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace netgame
