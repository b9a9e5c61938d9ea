#include "rackkit/sparse.hpp"

#include <limits>

namespace rackkit {

std::size_t checked_power(std::size_t d, std::size_t n) {
  std::size_t p = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (d != 0 && p > std::numeric_limits<std::size_t>::max() / d) {
      throw ResourceError("tensor power overflows index range");
    }
    p *= d;
  }
  return p;
}

std::vector<std::size_t> decode_multi(std::size_t index, std::size_t d, std::size_t n) {
  std::vector<std::size_t> digits(n);
  for (std::size_t k = n; k-- > 0;) {
    digits[k] = index % d;
    index /= d;
  }
  return digits;
}

std::size_t encode_multi(std::span<const std::size_t> digits, std::size_t d) {
  std::size_t idx = 0;
  for (auto x : digits) idx = idx * d + x;
  return idx;
}

}  // namespace rackkit
