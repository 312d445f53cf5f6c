#pragma once

// Small dense matrix helpers, sized for graphs with at most a few hundred
// vertices. No blocking, no BLAS; everything is plain loops.

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace netgame {

template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, T fill = T{})
      : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * cols, fill) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  T& operator()(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const {
    return d_[static_cast<size_t>(i) * c_ + j];
  }

  T* data() { return d_.data(); }
  const T* data() const { return d_.data(); }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> d_;
};

using MatD = Mat<double>;
using MatI = Mat<std::int64_t>;
using MatC = Mat<std::complex<double>>;

MatD matmul(const MatD& a, const MatD& b);
MatI matmul(const MatI& a, const MatI& b);
double trace(const MatD& a);

// Solve A x = b by Gaussian elimination with partial pivoting. A and b are
// taken by value and consumed. Throws NumericError on a vanishing pivot.
std::vector<std::complex<double>> solve_complex(MatC a,
                                                std::vector<std::complex<double>> b);

// In-place LU with partial pivoting, for callers that reuse one
// factorization across several right-hand sides.
struct ComplexLU {
  explicit ComplexLU(MatC a);
  std::vector<std::complex<double>> solve(std::vector<std::complex<double>> b) const;

  MatC lu;
  std::vector<int> perm;
};

// All eigenvalues of a symmetric matrix, ascending (cyclic Jacobi).
std::vector<double> symmetric_eigenvalues(MatD a);

// Run fn(i) for i in [0, n), chunked over up to max_threads threads
// (hardware concurrency when max_threads == 0). Falls back to a serial loop
// on single-core hosts.
void parallel_for(int n, const std::function<void(int)>& fn, int max_threads = 0);

}  // namespace netgame
