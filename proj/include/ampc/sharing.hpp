#ifndef AMPC_SHARING_HPP_
#define AMPC_SHARING_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ampc/matrix.hpp"
#include "ampc/numerics.hpp"
#include "ampc/rng.hpp"

namespace ampc {
namespace sharing {

// One evaluation S(omega_i) of a secret polynomial, held by client i.
struct Share {
  std::uint64_t secret_id = 0;
  int eval_index = 0;  // 1..N
  int degree = 0;      // T
  int n_clients = 0;   // N
  ComplexMatrix value;
};

// A client's secret plus T coefficient matrices defining
// S(s) = secret + sum_{k=1..T} s^k coeff[k-1].
//
// Polynomials produced by make_share_polynomial carry real coefficients
// sampled i.i.d. N(0, sigma_s^2) and jointly resampled until the combined
// noise at every evaluation point has both components in [-t, t].
// Coefficients are stored complex so that adversarial witness polynomials
// (which are genuinely complex) share the type.
struct SharePolynomial {
  std::uint64_t secret_id = 0;
  ComplexMatrix secret;
  std::vector<ComplexMatrix> coeffs;
  int degree = 0;
  int n_clients = 0;
  double trunc_t = 0.0;
  double sigma_s = 0.0;
  // Cached combined noise sum_k omega_i^k coeff_k at the N roots, index i-1.
  std::vector<ComplexMatrix> combined_noise;

  ComplexMatrix evaluate(const Complex& s) const;  // Horner
};

// sigma_s == 0 is the noise-off test hook (zero coefficient matrices).
// Throws kTruncationInfeasible after 1000 full joint redraws.
SharePolynomial make_share_polynomial(const RealMatrix& secret, int degree,
                                      int n_clients, double sigma_s,
                                      double trunc_t, RngStream& rng,
                                      std::uint64_t secret_id = 0);

// Protocol-internal variant for complex secrets (PrivateMul re-shares
// complex share values as fresh secrets). Same noise construction.
SharePolynomial make_share_polynomial_complex(const ComplexMatrix& secret,
                                              int degree, int n_clients,
                                              double sigma_s, double trunc_t,
                                              RngStream& rng,
                                              std::uint64_t secret_id = 0);

std::vector<Share> evaluate_shares(const SharePolynomial& poly);

struct Reconstruction {
  RealMatrix value;
  double max_imag_residual = 0.0;
  // Imaginary residual above 1e-6 signals an index or degree mismatch; the
  // result is still returned, flagged.
  bool degraded = false;
};

inline constexpr double kImagTolerance = 1e-6;

// Recovers the constant term from the first T+1 distinct-index shares (in
// the given arrival order), sorted ascending by evaluation index, via the
// cached first row of G^{-1}. Requires a real secret; see
// reconstruct_complex for protocol-internal complex openings.
Reconstruction reconstruct(const std::vector<Share>& shares);

ComplexMatrix reconstruct_complex(const std::vector<Share>& shares);

// Inputs to the finite-precision perturbation bound. The bound requires
// t*T + r >= 1.
struct PerturbationBoundInputs {
  double coeff_abs_sum = 0.0;  // c = sum_l |a_{i,l}|
  int degree = 0;              // T
  double trunc_t = 0.0;        // t
  double secret_bound = 0.0;   // r
  double condition_number = 0.0;
  double min_singular = 0.0;
  int precision_bits = 52;     // b_m
};

// c * sqrt(T+1) * (r + t*T) * (kappa / lambda_min) * 2^{-b_m}.
double perturbation_bound(const PerturbationBoundInputs& in);

// Security probe: given exactly T distinct-index shares, constructs a
// degree-T polynomial consistent with all of them whose constant term is
// at least 1.0 away from `reference` in Frobenius norm. Demonstrates that T
// shares leave the secret underdetermined.
SharePolynomial underdetermination_witness(const std::vector<Share>& shares,
                                           const ComplexMatrix& reference);

// Wire format. Binary layout (little-endian): secret_id u64, eval_index
// i32, degree i32, n_clients i32, rows u32, cols u32, then rows*cols
// (re, im) f64 pairs row-major. Round-trips bit-exactly.
std::string serialize_share(const Share& share);
Share deserialize_share(const std::string& bytes);

std::string share_to_json(const Share& share);
Share share_from_json(const std::string& text);

}  // namespace sharing
}  // namespace ampc

#endif  // AMPC_SHARING_HPP_
