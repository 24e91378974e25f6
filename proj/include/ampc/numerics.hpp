#ifndef AMPC_NUMERICS_HPP_
#define AMPC_NUMERICS_HPP_

#include <cstdint>
#include <vector>

#include "ampc/matrix.hpp"
#include "ampc/rng.hpp"

namespace ampc {

// One of the N public evaluation points omega_i = exp(2*pi*sqrt(-1)*i/N),
// i in 1..N. omega_N == 1.
struct EvalPoint {
  int index = 0;  // 1-based
  Complex value;
};

// Conditioning data for the (T+1)x(T+1) interpolation matrix G with rows
// [1, w, w^2, ..., w^T].
struct VandermondeInfo {
  ComplexMatrix matrix;
  double condition_number = 0.0;  // kappa_G = lambda_max / lambda_min
  double min_singular = 0.0;      // lambda_min
};

std::vector<EvalPoint> roots_of_unity(int n);

// Standard normal CDF, |error| <= 1e-12.
double std_normal_cdf(double x);

// Upper tail Q(x) = 1 - Phi(x); accurate for large x where Phi saturates.
double std_normal_tail(double x);

// One draw from TN(0, sigma^2; [-t, t]) by rejection. Throws
// ErrorKind::kSamplingFailure after 10000 rejected draws (guards against
// t << sigma misconfiguration).
double sample_truncated_gaussian(double sigma, double t, RngStream& rng);

// CDF of TN(0, sigma^2; [-t, t]); 0 below -t, 1 above t.
double truncated_gaussian_cdf(double y, double sigma, double t);

VandermondeInfo vandermonde_info(const std::vector<EvalPoint>& points, int t_degree);

// powers[k-1] = point^k for k = 1..count.
std::vector<Complex> point_powers(const EvalPoint& point, int count);

// First row of G^{-1} for the given point subset; g~ . [shares] recovers the
// constant term of a degree-T polynomial. Cached per (N-context independent)
// point-index set; points must come from one roots_of_unity(N) family for
// the cache key (index, value) to be stable.
std::vector<Complex> reconstruction_row(const std::vector<EvalPoint>& points,
                                        int t_degree);

// Solve the dense complex system A x = b (square, partial-pivot LU).
std::vector<Complex> solve_complex(const ComplexMatrix& a,
                                   const std::vector<Complex>& b);

}  // namespace ampc

#endif  // AMPC_NUMERICS_HPP_
