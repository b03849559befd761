#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace sofic {

  namespace detail {
    template <typename Range>
    std::size_t hash_range(Range const& r, std::size_t seed = 0) {
      for (auto const& x : r) {
        seed ^= std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(x)) + 0x9e3779b97f4a7c15ULL
                + (seed << 6) + (seed >> 2);
      }
      return seed;
    }

    struct RangeHash {
      template <typename Range>
      std::size_t operator()(Range const& r) const {
        return hash_range(r);
      }
    };
  }  // namespace detail

}  // namespace sofic
