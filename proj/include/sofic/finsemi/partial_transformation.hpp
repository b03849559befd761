#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "sofic/core/error.hpp"
#include "sofic/core/hash.hpp"

namespace sofic {

  //! A partial map on {0, ..., n-1} acting on the right: x(fg) = (xf)g.
  class PartialTransformation {
   public:
    static constexpr std::uint32_t undefined = std::numeric_limits<std::uint32_t>::max();

    PartialTransformation() = default;

    explicit PartialTransformation(std::vector<std::uint32_t> images)
        : _image(std::move(images)) {
      for (auto x : _image) {
        if (x != undefined && x >= _image.size()) {
          detail::fail(ErrorCode::invalid_argument, "image point out of range");
        }
      }
    }

    static PartialTransformation identity(std::size_t n) {
      std::vector<std::uint32_t> im(n);
      for (std::size_t i = 0; i < n; ++i) {
        im[i] = static_cast<std::uint32_t>(i);
      }
      return PartialTransformation(std::move(im));
    }

    static PartialTransformation constant(std::size_t n, std::uint32_t value) {
      return PartialTransformation(std::vector<std::uint32_t>(n, value));
    }

    static PartialTransformation empty(std::size_t n) {
      return PartialTransformation(std::vector<std::uint32_t>(n, undefined));
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _image.size();
    }

    [[nodiscard]] std::uint32_t operator[](std::size_t x) const {
      return _image[x];
    }

    [[nodiscard]] bool defined_at(std::size_t x) const {
      return _image[x] != undefined;
    }

    [[nodiscard]] bool is_total() const {
      for (auto x : _image) {
        if (x == undefined) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] std::set<std::uint32_t> image_set() const {
      std::set<std::uint32_t> out;
      for (auto x : _image) {
        if (x != undefined) {
          out.insert(x);
        }
      }
      return out;
    }

    [[nodiscard]] std::size_t rank() const {
      return image_set().size();
    }

    [[nodiscard]] std::vector<std::uint32_t> const& images() const noexcept {
      return _image;
    }

    //! First this, then `other`.
    [[nodiscard]] PartialTransformation operator*(PartialTransformation const& other) const {
      if (other.degree() != degree()) {
        detail::fail(ErrorCode::dimension_mismatch,
                     "degrees " + std::to_string(degree()) + " and "
                         + std::to_string(other.degree()));
      }
      std::vector<std::uint32_t> out(_image.size(), undefined);
      for (std::size_t x = 0; x < _image.size(); ++x) {
        if (_image[x] != undefined) {
          out[x] = other._image[_image[x]];
        }
      }
      PartialTransformation result;
      result._image = std::move(out);
      return result;
    }

    bool operator==(PartialTransformation const&) const = default;
    auto operator<=>(PartialTransformation const&) const = default;

   private:
    std::vector<std::uint32_t> _image;
  };

}  // namespace sofic

template <>
struct std::hash<sofic::PartialTransformation> {
  std::size_t operator()(sofic::PartialTransformation const& f) const {
    return sofic::detail::hash_range(f.images());
  }
};
