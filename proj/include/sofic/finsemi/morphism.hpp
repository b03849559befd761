#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "sofic/finsemi/finite_semigroup.hpp"

namespace sofic {

  //! A map between finite semigroups, verified to be a homomorphism on
  //! construction.
  class SemigroupMorphism {
   public:
    SemigroupMorphism(std::shared_ptr<FiniteSemigroup const> source,
                      std::shared_ptr<FiniteSemigroup const> target,
                      std::vector<Element>                   map)
        : _source(std::move(source)), _target(std::move(target)), _map(std::move(map)) {
      if (_map.size() != _source->size()) {
        detail::fail(ErrorCode::dimension_mismatch, "morphism map has wrong length");
      }
      for (auto y : _map) {
        if (y >= _target->size()) {
          detail::fail(ErrorCode::invalid_argument, "morphism image out of range");
        }
      }
      check_homomorphism();
    }

    //! The homomorphism sending the i-th generator of `source` to images[i].
    static SemigroupMorphism from_generator_images(std::shared_ptr<FiniteSemigroup const> source,
                                                   std::shared_ptr<FiniteSemigroup const> target,
                                                   std::vector<Element> const& images) {
      if (images.size() != source->generators().size()) {
        detail::fail(ErrorCode::dimension_mismatch, "one image per generator expected");
      }
      std::vector<Element> map(source->size());
      for (Element x = 0; x < source->size(); ++x) {
        Word    w = source->witness(x);
        Element y = images.at(w[0]);
        for (std::size_t i = 1; i < w.size(); ++i) {
          y = (*target)(y, images.at(w[i]));
        }
        map[x] = y;
      }
      return SemigroupMorphism(std::move(source), std::move(target), std::move(map));
    }

    static SemigroupMorphism identity(std::shared_ptr<FiniteSemigroup const> s) {
      std::vector<Element> map(s->size());
      for (Element x = 0; x < s->size(); ++x) {
        map[x] = x;
      }
      return SemigroupMorphism(s, s, std::move(map));
    }

    [[nodiscard]] FiniteSemigroup const& source() const noexcept {
      return *_source;
    }

    [[nodiscard]] FiniteSemigroup const& target() const noexcept {
      return *_target;
    }

    [[nodiscard]] std::vector<Element> const& map() const noexcept {
      return _map;
    }

    [[nodiscard]] Element operator()(Element x) const {
      return _map.at(x);
    }

    [[nodiscard]] bool is_surjective() const {
      std::vector<bool> hit(_target->size(), false);
      for (auto y : _map) {
        hit[y] = true;
      }
      return std::find(hit.begin(), hit.end(), false) == hit.end();
    }

    //! Generators of the source map onto the generators of the target, in order.
    [[nodiscard]] bool respects_generators() const {
      auto const& a = _source->generators();
      auto const& b = _target->generators();
      if (a.size() != b.size()) {
        return false;
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (_map[a[i]] != b[i]) {
          return false;
        }
      }
      return true;
    }

   private:
    void check_homomorphism() const {
      auto const& s = *_source;
      auto const& t = *_target;
      for (Element x = 0; x < s.size(); ++x) {
        for (Element y = 0; y < s.size(); ++y) {
          if (_map[s(x, y)] != t(_map[x], _map[y])) {
            detail::fail(ErrorCode::not_homomorphism,
                         "fails at (" + std::to_string(x) + "," + std::to_string(y) + ")");
          }
        }
      }
    }

    std::shared_ptr<FiniteSemigroup const> _source;
    std::shared_ptr<FiniteSemigroup const> _target;
    std::vector<Element>                   _map;
  };

}  // namespace sofic
