#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rsdlab {

// A seeded batch of i.i.d. draws. Regenerating with the same
// (generator_id, seed, count) reproduces the values bit-exactly.
struct SampleBatch {
  std::vector<double> values;
  std::uint64_t seed = 0;
  std::string generator_id;

  std::size_t count() const { return values.size(); }
};

}  // namespace rsdlab
