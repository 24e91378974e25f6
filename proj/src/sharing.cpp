#include "ampc/sharing.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <sstream>

#include "json.hpp"

#include "ampc/kernels.hpp"

namespace ampc {
namespace sharing {

namespace {
constexpr int kResampleCap = 1000;

bool within_box(const std::vector<ComplexMatrix>& mats, double t) {
  for (const auto& m : mats)
    for (const Complex& v : m.entries())
      if (std::fabs(v.real()) > t || std::fabs(v.imag()) > t) return false;
  return true;
}

SharePolynomial make_polynomial_impl(ComplexMatrix secret, int degree,
                                     int n_clients, double sigma_s,
                                     double trunc_t, RngStream& rng,
                                     std::uint64_t secret_id) {
  if (degree < 1) throw invalid_argument("make_share_polynomial: T must be >= 1");
  if (n_clients < degree + 1)
    throw invalid_argument("make_share_polynomial: need N >= T+1");
  if (sigma_s < 0.0)
    throw invalid_argument("make_share_polynomial: sigma_s must be >= 0");
  if (trunc_t <= 0.0)
    throw invalid_argument("make_share_polynomial: t must be > 0");
  secret.validate();

  const std::size_t rows = secret.rows(), cols = secret.cols();
  const auto points = roots_of_unity(n_clients);
  std::vector<std::vector<Complex>> powers(n_clients);
  for (int i = 0; i < n_clients; ++i)
    powers[i] = point_powers(points[i], degree);

  std::vector<RealMatrix> coeffs(degree, RealMatrix(rows, cols));
  std::vector<ComplexMatrix> combined;
  bool accepted = false;
  for (int round = 0; round < kResampleCap; ++round) {
    if (sigma_s == 0.0) {
      // Noise-off hook: zero coefficients trivially satisfy the bound.
      combined.assign(n_clients, ComplexMatrix(rows, cols));
      accepted = true;
      break;
    }
    // One rejection redraws all T matrices together, and acceptance
    // requires the bound at all N points in both components.
    for (auto& c : coeffs)
      for (double& v : c.entries()) v = sigma_s * rng.normal();
    combined = kernels::combine_noise(powers, coeffs);
    if (within_box(combined, trunc_t)) {
      accepted = true;
      break;
    }
  }
  if (!accepted) {
    std::ostringstream msg;
    msg << "make_share_polynomial: combined noise not in [-t, t] after "
        << kResampleCap << " joint redraws (acceptance rate < "
        << 1.0 / kResampleCap << "; t = " << trunc_t
        << ", per-point noise stddev ~ " << sigma_s * std::sqrt(degree) << ")";
    throw Error(ErrorKind::kTruncationInfeasible, msg.str());
  }

  SharePolynomial poly;
  poly.secret_id = secret_id;
  poly.secret = std::move(secret);
  poly.coeffs.reserve(degree);
  for (const auto& c : coeffs) poly.coeffs.emplace_back(c);
  poly.degree = degree;
  poly.n_clients = n_clients;
  poly.trunc_t = trunc_t;
  poly.sigma_s = sigma_s;
  poly.combined_noise = std::move(combined);
  return poly;
}
}  // namespace

ComplexMatrix SharePolynomial::evaluate(const Complex& s) const {
  ComplexMatrix acc(secret.rows(), secret.cols());
  for (int k = degree - 1; k >= 0; --k) {
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc.entries()[i] = acc.entries()[i] * s + coeffs[k].entries()[i];
  }
  for (std::size_t i = 0; i < acc.size(); ++i)
    acc.entries()[i] = acc.entries()[i] * s + secret.entries()[i];
  return acc;
}

SharePolynomial make_share_polynomial(const RealMatrix& secret, int degree,
                                      int n_clients, double sigma_s,
                                      double trunc_t, RngStream& rng,
                                      std::uint64_t secret_id) {
  return make_polynomial_impl(ComplexMatrix(secret), degree, n_clients,
                              sigma_s, trunc_t, rng, secret_id);
}

SharePolynomial make_share_polynomial_complex(const ComplexMatrix& secret,
                                              int degree, int n_clients,
                                              double sigma_s, double trunc_t,
                                              RngStream& rng,
                                              std::uint64_t secret_id) {
  return make_polynomial_impl(secret, degree, n_clients, sigma_s, trunc_t,
                              rng, secret_id);
}

std::vector<Share> evaluate_shares(const SharePolynomial& poly) {
  std::vector<Share> shares(poly.n_clients);
  for (int i = 0; i < poly.n_clients; ++i) {
    Share& s = shares[i];
    s.secret_id = poly.secret_id;
    s.eval_index = i + 1;
    s.degree = poly.degree;
    s.n_clients = poly.n_clients;
    s.value = poly.secret + poly.combined_noise[i];
  }
  return shares;
}

namespace {
// First T+1 distinct-index shares in arrival order, then ascending index.
std::vector<const Share*> select_for_reconstruction(
    const std::vector<Share>& shares) {
  if (shares.empty())
    throw Error(ErrorKind::kInsufficientShares, "reconstruct: no shares");
  const Share& first = shares.front();
  const int needed = first.degree + 1;

  std::vector<const Share*> picked;
  std::vector<int> seen;
  for (const Share& s : shares) {
    if (s.degree != first.degree || s.n_clients != first.n_clients ||
        !s.value.same_shape(first.value))
      throw invalid_argument("reconstruct: inconsistent shares");
    if (s.eval_index < 1 || s.eval_index > s.n_clients)
      throw invalid_argument("reconstruct: evaluation index out of range");
    if (std::find(seen.begin(), seen.end(), s.eval_index) != seen.end())
      continue;
    seen.push_back(s.eval_index);
    picked.push_back(&s);
    if (static_cast<int>(picked.size()) == needed) break;
  }
  if (static_cast<int>(picked.size()) < needed) {
    std::ostringstream msg;
    msg << "reconstruct: need " << needed << " distinct-index shares, got "
        << picked.size();
    throw Error(ErrorKind::kInsufficientShares, msg.str());
  }
  std::sort(picked.begin(), picked.end(),
            [](const Share* a, const Share* b) {
              return a->eval_index < b->eval_index;
            });
  return picked;
}
}  // namespace

ComplexMatrix reconstruct_complex(const std::vector<Share>& shares) {
  const auto picked = select_for_reconstruction(shares);
  const int n_clients = picked.front()->n_clients;
  const int degree = picked.front()->degree;

  const auto all_points = roots_of_unity(n_clients);
  std::vector<EvalPoint> points;
  points.reserve(picked.size());
  for (const Share* s : picked) points.push_back(all_points[s->eval_index - 1]);
  const std::vector<Complex> row = reconstruction_row(points, degree);

  ComplexMatrix out(picked.front()->value.rows(), picked.front()->value.cols());
  for (std::size_t k = 0; k < picked.size(); ++k) {
    const Complex w = row[k];
    const auto& v = picked[k]->value.entries();
    for (std::size_t e = 0; e < out.size(); ++e) out.entries()[e] += w * v[e];
  }
  return out;
}

Reconstruction reconstruct(const std::vector<Share>& shares) {
  const ComplexMatrix z0 = reconstruct_complex(shares);
  Reconstruction result;
  result.value = z0.real_part();
  result.max_imag_residual = z0.max_abs_imag();
  result.degraded = result.max_imag_residual > kImagTolerance;
  return result;
}

double perturbation_bound(const PerturbationBoundInputs& in) {
  if (in.coeff_abs_sum <= 0.0 || in.degree < 1 || in.trunc_t <= 0.0 ||
      in.secret_bound <= 0.0 || in.condition_number < 1.0 ||
      in.min_singular <= 0.0 || in.precision_bits < 1)
    throw invalid_argument("perturbation_bound: inputs must be positive");
  if (in.trunc_t * in.degree + in.secret_bound < 1.0)
    throw invalid_argument("perturbation_bound: requires t*T + r >= 1");
  const double magnitude = in.secret_bound + in.trunc_t * in.degree;
  const double factor = std::sqrt(static_cast<double>(in.degree) + 1.0) *
                        in.condition_number / in.min_singular;
  return std::ldexp(in.coeff_abs_sum * factor * magnitude, -in.precision_bits);
}

SharePolynomial underdetermination_witness(const std::vector<Share>& shares,
                                           const ComplexMatrix& reference) {
  if (shares.empty())
    throw invalid_argument("witness: need exactly T shares");
  const int degree = shares.front().degree;
  if (static_cast<int>(shares.size()) != degree)
    throw invalid_argument("witness: need exactly T shares");
  std::vector<int> seen;
  for (const Share& s : shares) {
    if (std::find(seen.begin(), seen.end(), s.eval_index) != seen.end())
      throw invalid_argument("witness: duplicate evaluation index");
    seen.push_back(s.eval_index);
  }

  const std::size_t rows = reference.rows(), cols = reference.cols();
  const double mn = static_cast<double>(rows * cols);
  // Constant term shifted by an all-ones direction of Frobenius norm
  // slightly above 1 (the margin absorbs rounding in the norm).
  const double shift = (1.0 + 1e-7) / std::sqrt(mn);
  ComplexMatrix constant = reference;
  for (Complex& v : constant.entries()) v += shift;

  // Solve sum_{k=1..T} omega_i^k c_k = share_i - constant, entrywise. The
  // T x T system matrix M[s][k] = omega_{i_s}^{k+1} is a Vandermonde times a
  // nonzero diagonal, hence invertible for distinct unit-circle points.
  const auto all_points = roots_of_unity(shares.front().n_clients);
  ComplexMatrix system(degree, degree);
  for (int s = 0; s < degree; ++s) {
    const auto powers =
        point_powers(all_points[shares[s].eval_index - 1], degree);
    for (int k = 0; k < degree; ++k) system(s, k) = powers[k];
  }

  std::vector<ComplexMatrix> coeffs(degree, ComplexMatrix(rows, cols));
  std::vector<Complex> rhs(degree);
  for (std::size_t e = 0; e < rows * cols; ++e) {
    for (int s = 0; s < degree; ++s)
      rhs[s] = shares[s].value.entries()[e] - constant.entries()[e];
    const std::vector<Complex> sol = solve_complex(system, rhs);
    for (int k = 0; k < degree; ++k) coeffs[k].entries()[e] = sol[k];
  }

  SharePolynomial poly;
  poly.secret_id = shares.front().secret_id;
  poly.secret = std::move(constant);
  poly.coeffs = std::move(coeffs);
  poly.degree = degree;
  poly.n_clients = shares.front().n_clients;
  poly.trunc_t = 0.0;
  poly.sigma_s = 0.0;
  const auto points = roots_of_unity(poly.n_clients);
  poly.combined_noise.reserve(poly.n_clients);
  for (int i = 0; i < poly.n_clients; ++i) {
    ComplexMatrix noise = poly.evaluate(points[i].value);
    noise -= poly.secret;
    poly.combined_noise.push_back(std::move(noise));
  }
  return poly;
}

namespace {
template <typename T>
void append_raw(std::string& out, const T& v) {
  const char* p = reinterpret_cast<const char*>(&v);
  out.append(p, sizeof(T));
}

template <typename T>
T read_raw(const std::string& in, std::size_t& offset) {
  if (offset + sizeof(T) > in.size())
    throw invalid_argument("deserialize_share: truncated record");
  T v;
  std::memcpy(&v, in.data() + offset, sizeof(T));
  offset += sizeof(T);
  return v;
}
}  // namespace

std::string serialize_share(const Share& share) {
  std::string out;
  out.reserve(32 + share.value.size() * 16);
  append_raw(out, share.secret_id);
  append_raw(out, static_cast<std::int32_t>(share.eval_index));
  append_raw(out, static_cast<std::int32_t>(share.degree));
  append_raw(out, static_cast<std::int32_t>(share.n_clients));
  append_raw(out, static_cast<std::uint32_t>(share.value.rows()));
  append_raw(out, static_cast<std::uint32_t>(share.value.cols()));
  for (const Complex& v : share.value.entries()) {
    append_raw(out, v.real());
    append_raw(out, v.imag());
  }
  return out;
}

Share deserialize_share(const std::string& bytes) {
  std::size_t offset = 0;
  Share share;
  share.secret_id = read_raw<std::uint64_t>(bytes, offset);
  share.eval_index = read_raw<std::int32_t>(bytes, offset);
  share.degree = read_raw<std::int32_t>(bytes, offset);
  share.n_clients = read_raw<std::int32_t>(bytes, offset);
  const auto rows = read_raw<std::uint32_t>(bytes, offset);
  const auto cols = read_raw<std::uint32_t>(bytes, offset);
  share.value = ComplexMatrix(rows, cols);
  for (Complex& v : share.value.entries()) {
    const double re = read_raw<double>(bytes, offset);
    const double im = read_raw<double>(bytes, offset);
    v = Complex(re, im);
  }
  if (offset != bytes.size())
    throw invalid_argument("deserialize_share: trailing bytes");
  return share;
}

std::string share_to_json(const Share& share) {
  nlohmann::json j;
  j["secret_id"] = share.secret_id;
  j["eval_index"] = share.eval_index;
  j["T"] = share.degree;
  j["N"] = share.n_clients;
  j["rows"] = share.value.rows();
  j["cols"] = share.value.cols();
  std::vector<double> interleaved;
  interleaved.reserve(share.value.size() * 2);
  for (const Complex& v : share.value.entries()) {
    interleaved.push_back(v.real());
    interleaved.push_back(v.imag());
  }
  j["re_im"] = interleaved;
  return j.dump();
}

Share share_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  Share share;
  share.secret_id = j.at("secret_id").get<std::uint64_t>();
  share.eval_index = j.at("eval_index").get<int>();
  share.degree = j.at("T").get<int>();
  share.n_clients = j.at("N").get<int>();
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto interleaved = j.at("re_im").get<std::vector<double>>();
  if (interleaved.size() != rows * cols * 2)
    throw invalid_argument("share_from_json: entry count mismatch");
  share.value = ComplexMatrix(rows, cols);
  for (std::size_t e = 0; e < rows * cols; ++e)
    share.value.entries()[e] =
        Complex(interleaved[2 * e], interleaved[2 * e + 1]);
  return share;
}

}  // namespace sharing
}  // namespace ampc
