#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lmbeta {

/// `count` independent standard-normal draws. A fixed (seed, count) pair
/// always produces the same values, on any platform and from any thread.
std::vector<double> normal_deviates(std::uint64_t seed, std::size_t count);

}  // namespace lmbeta
