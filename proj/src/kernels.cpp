#include "ampc/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ampc {
namespace kernels {

namespace {
std::atomic<bool> g_parallel{true};

void check_mul_dims(std::size_t an, std::size_t bm) {
  if (an != bm)
    throw invalid_argument("matmul: inner dimensions do not match");
}
}  // namespace

void set_parallel(bool enabled) { g_parallel.store(enabled); }

bool parallel_enabled() {
#ifdef _OPENMP
  return g_parallel.load();
#else
  return false;
#endif
}

int thread_count() {
#ifdef _OPENMP
  return parallel_enabled() ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

RealMatrix matmul_serial(const RealMatrix& a, const RealMatrix& b) {
  check_mul_dims(a.cols(), b.rows());
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  RealMatrix c(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c.data() + i * n;
    const double* ai = a.data() + i * k;
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = ai[p];
      const double* bp = b.data() + p * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += aip * bp[j];
    }
  }
  return c;
}

RealMatrix matmul_omp(const RealMatrix& a, const RealMatrix& b) {
  check_mul_dims(a.cols(), b.rows());
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  RealMatrix c(m, n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i) {
    double* ci = c.data() + i * n;
    const double* ai = a.data() + i * k;
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = ai[p];
      const double* bp = b.data() + p * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += aip * bp[j];
    }
  }
  return c;
}

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
  return parallel_enabled() ? matmul_omp(a, b) : matmul_serial(a, b);
}

ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_mul_dims(a.cols(), b.rows());
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  ComplexMatrix c(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    Complex* ci = c.data() + i * n;
    const Complex* ai = a.data() + i * k;
    for (std::size_t p = 0; p < k; ++p) {
      const Complex aip = ai[p];
      const Complex* bp = b.data() + p * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += aip * bp[j];
    }
  }
  return c;
}

ComplexMatrix matmul_omp(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_mul_dims(a.cols(), b.rows());
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  ComplexMatrix c(m, n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i) {
    Complex* ci = c.data() + i * n;
    const Complex* ai = a.data() + i * k;
    for (std::size_t p = 0; p < k; ++p) {
      const Complex aip = ai[p];
      const Complex* bp = b.data() + p * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += aip * bp[j];
    }
  }
  return c;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  return parallel_enabled() ? matmul_omp(a, b) : matmul_serial(a, b);
}

namespace {
void combine_one(const std::vector<Complex>& powers,
                 const std::vector<RealMatrix>& coeffs, ComplexMatrix& out) {
  const std::size_t entries = out.size();
  for (std::size_t e = 0; e < entries; ++e) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      acc += powers[k] * coeffs[k].entries()[e];
    out.entries()[e] = acc;
  }
}
}  // namespace

std::vector<ComplexMatrix> combine_noise_serial(
    const std::vector<std::vector<Complex>>& point_powers,
    const std::vector<RealMatrix>& coeffs) {
  if (coeffs.empty())
    throw invalid_argument("combine_noise: no coefficient matrices");
  std::vector<ComplexMatrix> out(
      point_powers.size(), ComplexMatrix(coeffs[0].rows(), coeffs[0].cols()));
  for (std::size_t p = 0; p < point_powers.size(); ++p)
    combine_one(point_powers[p], coeffs, out[p]);
  return out;
}

std::vector<ComplexMatrix> combine_noise_omp(
    const std::vector<std::vector<Complex>>& point_powers,
    const std::vector<RealMatrix>& coeffs) {
  if (coeffs.empty())
    throw invalid_argument("combine_noise: no coefficient matrices");
  std::vector<ComplexMatrix> out(
      point_powers.size(), ComplexMatrix(coeffs[0].rows(), coeffs[0].cols()));
#pragma omp parallel for schedule(static)
  for (std::int64_t p = 0; p < static_cast<std::int64_t>(point_powers.size());
       ++p)
    combine_one(point_powers[p], coeffs, out[p]);
  return out;
}

std::vector<ComplexMatrix> combine_noise(
    const std::vector<std::vector<Complex>>& point_powers,
    const std::vector<RealMatrix>& coeffs) {
  return parallel_enabled() ? combine_noise_omp(point_powers, coeffs)
                            : combine_noise_serial(point_powers, coeffs);
}

namespace {
std::uint64_t shard_samples(std::uint64_t total, int shards, int shard) {
  const std::uint64_t base = total / shards;
  const std::uint64_t extra = total % shards;
  return base + (static_cast<std::uint64_t>(shard) < extra ? 1 : 0);
}
}  // namespace

std::uint64_t sharded_count_serial(std::uint64_t total_samples, int shards,
                                   const RngStream& base,
                                   const ShardCounter& counter) {
  if (shards < 1) throw invalid_argument("sharded_count: shards < 1");
  std::uint64_t hits = 0;
  for (int s = 0; s < shards; ++s) {
    RngStream rng = base.split(static_cast<std::uint64_t>(s));
    hits += counter(rng, shard_samples(total_samples, shards, s));
  }
  return hits;
}

std::uint64_t sharded_count_omp(std::uint64_t total_samples, int shards,
                                const RngStream& base,
                                const ShardCounter& counter) {
  if (shards < 1) throw invalid_argument("sharded_count: shards < 1");
  std::uint64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits)
  for (int s = 0; s < shards; ++s) {
    RngStream rng = base.split(static_cast<std::uint64_t>(s));
    hits += counter(rng, shard_samples(total_samples, shards, s));
  }
  return hits;
}

std::uint64_t sharded_count(std::uint64_t total_samples, int shards,
                            const RngStream& base,
                            const ShardCounter& counter) {
  return parallel_enabled()
             ? sharded_count_omp(total_samples, shards, base, counter)
             : sharded_count_serial(total_samples, shards, base, counter);
}

}  // namespace kernels
}  // namespace ampc
