#include <atomic>
#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "netgame/linalg.hpp"
#include "netgame/types.hpp"

using namespace netgame;

TEST_CASE("matmul double and integer") {
  MatD a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 4;
  const MatD a2 = matmul(a, a);
  CHECK(a2(0, 0) == doctest::Approx(7.0));
  CHECK(a2(0, 1) == doctest::Approx(10.0));
  CHECK(a2(1, 0) == doctest::Approx(15.0));
  CHECK(a2(1, 1) == doctest::Approx(22.0));

  MatI b(2, 2);
  b(0, 0) = 0;
  b(0, 1) = 1;
  b(1, 0) = 1;
  b(1, 1) = 0;
  const MatI b2 = matmul(b, b);
  CHECK(b2(0, 0) == 1);
  CHECK(b2(0, 1) == 0);

  CHECK(trace(a) == doctest::Approx(5.0));
  CHECK(trace(MatD::identity(4)) == doctest::Approx(4.0));
}

TEST_CASE("complex solve against a hand inverse") {
  using C = std::complex<double>;
  MatC a(2, 2);
  a(0, 0) = C(1, 1);
  a(0, 1) = C(2, 0);
  a(1, 0) = C(0, 0);
  a(1, 1) = C(3, 0);
  // x2 = 2, x1 = (3 + i - 4) / (1 + i) = i
  const auto x = solve_complex(a, {C(3, 1), C(6, 0)});
  REQUIRE(x.size() == 2);
  CHECK(std::abs(x[0] - C(0, 1)) < 1e-12);
  CHECK(std::abs(x[1] - C(2, 0)) < 1e-12);
}

TEST_CASE("LU factorization reuse matches one-shot solves") {
  using C = std::complex<double>;
  MatC a(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = C(1.0 / (i + j + 1), i == j ? 2.0 : 0.1);
  const ComplexLU lu(a);
  for (int rhs = 0; rhs < 2; ++rhs) {
    std::vector<C> b(3);
    for (int i = 0; i < 3; ++i) b[i] = C(i + 1.0, rhs ? -1.0 : 0.5);
    const auto x1 = lu.solve(b);
    const auto x2 = solve_complex(a, b);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(x1[i] - x2[i]) < 1e-12);
  }
}

TEST_CASE("singular system is rejected") {
  MatC a(2, 2);
  a(0, 0) = a(0, 1) = a(1, 0) = a(1, 1) = std::complex<double>(1.0, 0.0);
  CHECK_THROWS_AS(solve_complex(a, {std::complex<double>(1.0, 0.0),
                                    std::complex<double>(2.0, 0.0)}),
                  NumericError);
}

TEST_CASE("symmetric eigenvalues ascending") {
  MatD d(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  const auto ev = symmetric_eigenvalues(d);
  REQUIRE(ev.size() == 3);
  CHECK(ev[0] == doctest::Approx(1.0));
  CHECK(ev[1] == doctest::Approx(2.0));
  CHECK(ev[2] == doctest::Approx(3.0));

  MatD p(2, 2);
  p(0, 0) = p(1, 1) = 2.0;
  p(0, 1) = p(1, 0) = 1.0;
  const auto ev2 = symmetric_eigenvalues(p);
  CHECK(ev2[0] == doctest::Approx(1.0));
  CHECK(ev2[1] == doctest::Approx(3.0));
}

TEST_CASE("parallel_for covers every index exactly once") {
  const int n = 1000;
  std::vector<std::atomic<int>> hits(n);
  parallel_for(n, [&hits](int i) { hits[i].fetch_add(1); });
  for (int i = 0; i < n; ++i) CHECK(hits[i].load() == 1);
}
