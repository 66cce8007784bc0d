#ifndef ZSFELL_PRNG_HPP
#define ZSFELL_PRNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

#include <Eigen/Dense>
#include <Eigen/QR>

namespace zsfell {

/// Deterministic generator used for every seeded corpus instance.
///
/// The algorithm is pinned so that fixtures can be reproduced exactly from
/// the seed alone: state advances by the splitmix64 recurrence
/// (Steele/Lea/Flood), uniforms take the top 53 bits, and gaussians come
/// from the Box-Muller transform applied to consecutive uniforms.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  std::complex<double> complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  Eigen::VectorXcd complex_vector(int n) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = complex_gaussian();
    return v;
  }

  Eigen::MatrixXcd complex_matrix(int rows, int cols) {
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = complex_gaussian();
    return m;
  }

  /// Haar-like random unitary: QR of a complex gaussian matrix with the
  /// R-diagonal phases absorbed into Q.
  Eigen::MatrixXcd unitary(int n) {
    Eigen::MatrixXcd a = complex_matrix(n, n);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
      std::complex<double> d = r(i, i);
      const double mag = std::abs(d);
      q.col(i) *= (mag > 0) ? d / mag : 1.0;
    }
    return q;
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace zsfell

#endif
