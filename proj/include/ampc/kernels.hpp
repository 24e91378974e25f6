#ifndef AMPC_KERNELS_HPP_
#define AMPC_KERNELS_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "ampc/matrix.hpp"
#include "ampc/rng.hpp"

namespace ampc {
namespace kernels {

// Data-parallel inner loops, each with a serial reference and an OpenMP
// variant. Both variants accumulate every output entry in the same order,
// so results are bitwise identical; the unit tests assert this and the
// bench target compares wall times. The runtime switch applies process-wide.

void set_parallel(bool enabled);
bool parallel_enabled();
int thread_count();

// C = A * B, row-major. Parallelized over output rows.
RealMatrix matmul_serial(const RealMatrix& a, const RealMatrix& b);
RealMatrix matmul_omp(const RealMatrix& a, const RealMatrix& b);
RealMatrix matmul(const RealMatrix& a, const RealMatrix& b);

ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul_omp(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// Combined share noise at a set of unit-circle points: for each point p,
// out[p] = sum_{k=1..T} point_powers[p][k-1] * coeffs[k-1]. point_powers[p]
// holds the first T powers of the point. Parallelized over (point, entry).
std::vector<ComplexMatrix> combine_noise_serial(
    const std::vector<std::vector<Complex>>& point_powers,
    const std::vector<RealMatrix>& coeffs);
std::vector<ComplexMatrix> combine_noise_omp(
    const std::vector<std::vector<Complex>>& point_powers,
    const std::vector<RealMatrix>& coeffs);
std::vector<ComplexMatrix> combine_noise(
    const std::vector<std::vector<Complex>>& point_powers,
    const std::vector<RealMatrix>& coeffs);

// Sharded Monte-Carlo counter: runs `shards` independent counting jobs and
// sums the integer hit counts. Each shard owns the RNG stream
// base.split(shard_index), so the reduction is order-independent and the
// serial and OpenMP paths agree exactly.
using ShardCounter =
    std::function<std::uint64_t(RngStream&, std::uint64_t samples)>;

std::uint64_t sharded_count_serial(std::uint64_t total_samples, int shards,
                                   const RngStream& base,
                                   const ShardCounter& counter);
std::uint64_t sharded_count_omp(std::uint64_t total_samples, int shards,
                                const RngStream& base,
                                const ShardCounter& counter);
std::uint64_t sharded_count(std::uint64_t total_samples, int shards,
                            const RngStream& base, const ShardCounter& counter);

}  // namespace kernels
}  // namespace ampc

#endif  // AMPC_KERNELS_HPP_
