#include "banditlab/rng.hpp"

#include <cassert>
#include <cmath>

namespace banditlab {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : engine_(seed) {}

RandomStream RandomStream::derive(std::uint64_t master_seed, std::uint64_t replication,
                                  std::string_view purpose) {
  std::uint64_t h = splitmix64(master_seed);
  h = splitmix64(h ^ splitmix64(replication + 0x51ed2701a3c5e491ULL));
  h = splitmix64(h ^ fnv1a(purpose));
  return RandomStream(h);
}

std::uint64_t RandomStream::next_u64() { return engine_(); }

double RandomStream::next_unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
  assert(lo <= hi);
  return lo + (hi - lo) * next_unit();
}

std::uint64_t RandomStream::next_below(std::uint64_t bound) {
  assert(bound >= 1);
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % bound;
}

double RandomStream::normal() {
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return spare_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_unit() - 1.0;
    v = 2.0 * next_unit() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * m;
  has_spare_normal_ = true;
  return u * m;
}

double RandomStream::normal(double mean, double stddev) {
  return mean + stddev * normal();
}

double RandomStream::exponential(double rate) {
  assert(rate > 0.0);
  return -std::log(1.0 - next_unit()) / rate;
}

long RandomStream::poisson(double mean) {
  assert(mean >= 0.0);
  const double floor = std::exp(-mean);
  long k = 0;
  double p = 1.0;
  for (;;) {
    p *= next_unit();
    if (p <= floor) return k;
    ++k;
  }
}

double RandomStream::gamma(double shape) {
  assert(shape > 0.0);
  if (shape < 1.0) {
    const double u = next_unit();
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = next_unit();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double RandomStream::beta(double a, double b) {
  const double x = gamma(a);
  const double y = gamma(b);
  return x / (x + y);
}

void RandomStream::shuffle(std::vector<int>& values) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(next_below(i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace banditlab
