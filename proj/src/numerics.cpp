#include "ampc/numerics.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace ampc {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr int kRejectionCap = 10000;

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  return e;
}
}  // namespace

std::vector<EvalPoint> roots_of_unity(int n) {
  if (n < 1) throw invalid_argument("roots_of_unity: N must be >= 1");
  std::vector<EvalPoint> points(n);
  for (int i = 1; i <= n; ++i) {
    const double angle = 2.0 * kPi * static_cast<double>(i) / n;
    points[i - 1] = EvalPoint{i, std::polar(1.0, angle)};
  }
  return points;
}

double std_normal_cdf(double x) {
  // Complementary error function keeps the tails accurate; plain
  // 0.5*(1+erf(.)) loses digits below Phi ~ 1e-15.
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double std_normal_tail(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double sample_truncated_gaussian(double sigma, double t, RngStream& rng) {
  if (sigma <= 0.0) throw invalid_argument("truncated gaussian: sigma <= 0");
  if (t <= 0.0) throw invalid_argument("truncated gaussian: t <= 0");
  for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
    const double x = sigma * rng.normal();
    if (x >= -t && x <= t) return x;
  }
  std::ostringstream msg;
  msg << "truncated gaussian: no draw in [-t, t] after " << kRejectionCap
      << " attempts (acceptance probability "
      << 2.0 * std_normal_cdf(t / sigma) - 1.0 << " with t/sigma = "
      << t / sigma << ")";
  throw Error(ErrorKind::kSamplingFailure, msg.str());
}

double truncated_gaussian_cdf(double y, double sigma, double t) {
  if (y <= -t) return 0.0;
  if (y >= t) return 1.0;
  const double mass = 2.0 * std_normal_cdf(t / sigma) - 1.0;
  return (std_normal_cdf(y / sigma) - std_normal_cdf(-t / sigma)) / mass;
}

std::vector<Complex> point_powers(const EvalPoint& point, int count) {
  std::vector<Complex> powers(count);
  Complex acc(1.0, 0.0);
  for (int k = 0; k < count; ++k) {
    acc *= point.value;
    powers[k] = acc;
  }
  return powers;
}

VandermondeInfo vandermonde_info(const std::vector<EvalPoint>& points,
                                 int t_degree) {
  const int n = t_degree + 1;
  if (static_cast<int>(points.size()) != n)
    throw invalid_argument("vandermonde_info: need exactly T+1 points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (std::abs(points[i].value - points[j].value) < 1e-12)
        throw Error(ErrorKind::kSingularMatrix,
                    "vandermonde_info: duplicate evaluation points");

  ComplexMatrix g(n, n);
  for (int r = 0; r < n; ++r) {
    Complex acc(1.0, 0.0);
    for (int c = 0; c < n; ++c) {
      g(r, c) = acc;
      acc *= points[r].value;
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(g));
  const auto& sv = svd.singularValues();
  VandermondeInfo info;
  info.matrix = std::move(g);
  info.min_singular = sv(n - 1);
  info.condition_number = sv(0) / sv(n - 1);
  return info;
}

namespace {
std::mutex g_row_cache_mutex;
std::map<std::vector<int>, std::vector<Complex>> g_row_cache;

std::vector<int> cache_key(const std::vector<EvalPoint>& points,
                           int t_degree) {
  std::vector<int> key;
  key.reserve(points.size() + 1);
  key.push_back(t_degree);
  for (const auto& p : points) key.push_back(p.index);
  return key;
}
}  // namespace

std::vector<Complex> reconstruction_row(const std::vector<EvalPoint>& points,
                                        int t_degree) {
  const int n = t_degree + 1;
  if (static_cast<int>(points.size()) != n)
    throw invalid_argument("reconstruction_row: need exactly T+1 points");

  const std::vector<int> key = cache_key(points, t_degree);
  {
    std::lock_guard<std::mutex> lock(g_row_cache_mutex);
    auto it = g_row_cache.find(key);
    if (it != g_row_cache.end()) return it->second;
  }

  // g~ G = e0^T  <=>  G^T g~^T = e0.
  Eigen::MatrixXcd gt(n, n);
  for (int r = 0; r < n; ++r) {
    Complex acc(1.0, 0.0);
    for (int c = 0; c < n; ++c) {
      gt(c, r) = acc;
      acc *= points[r].value;
    }
  }
  Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(n);
  e0(0) = Complex(1.0, 0.0);
  Eigen::VectorXcd row = gt.partialPivLu().solve(e0);

  std::vector<Complex> result(n);
  for (int i = 0; i < n; ++i) result[i] = row(i);
  {
    std::lock_guard<std::mutex> lock(g_row_cache_mutex);
    g_row_cache.emplace(key, result);
  }
  return result;
}

std::vector<Complex> solve_complex(const ComplexMatrix& a,
                                   const std::vector<Complex>& b) {
  if (a.rows() != a.cols() || a.rows() != b.size())
    throw invalid_argument("solve_complex: dimension mismatch");
  Eigen::MatrixXcd ea = to_eigen(a);
  Eigen::VectorXcd eb(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) eb(i) = b[i];
  Eigen::VectorXcd x = ea.partialPivLu().solve(eb);
  std::vector<Complex> result(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) result[i] = x(i);
  return result;
}

}  // namespace ampc
