// rng.hpp
//
// Seeded random numbers for the property suites.  The engine is
// std::mt19937_64, whose output sequence the standard pins down exactly;
// the float mapping is done by hand because the distribution classes in
// <random> are allowed to differ between standard libraries, and the
// self-test reports are required to be byte-identical for a given seed
// wherever they run.

#pragma once

#include <cstdint>
#include <random>

namespace splitcat {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace splitcat
