#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace banditlab {

// Deterministic random stream keyed by (master_seed, replication, purpose).
// The same triple always yields the same draw sequence, independent of thread
// count and of any other stream, so replications replay bit-identically.
//
// All distributions are generated in-house on top of a mt19937_64 engine; a
// stream's output is a pure function of its key and the call sequence.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);
  static RandomStream derive(std::uint64_t master_seed, std::uint64_t replication,
                             std::string_view purpose);

  std::uint64_t next_u64();
  // Uniform on [0,1) with 53-bit resolution.
  double next_unit();
  double uniform(double lo, double hi);
  // Uniform on {0,...,bound-1}, bound >= 1; rejection sampling, unbiased.
  std::uint64_t next_below(std::uint64_t bound);
  double normal();  // standard normal, Marsaglia polar method
  double normal(double mean, double stddev);
  double exponential(double rate = 1.0);
  long poisson(double mean);  // inversion by products; intended for modest means
  double gamma(double shape);  // unit scale, Marsaglia-Tsang
  double beta(double a, double b);
  void shuffle(std::vector<int>& values);

 private:
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_normal_ = false;
};

}  // namespace banditlab
