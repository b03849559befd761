#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sofic/core/error.hpp"
#include "sofic/core/word.hpp"
#include "sofic/finsemi/group.hpp"

namespace sofic {

  //! Elements of a semigroup generated by concrete objects (transformations,
  //! matrices, ...), numbered in shortlex order of their least generator word,
  //! together with the right and left Cayley graphs.
  template <typename T>
  struct Enumeration {
    std::vector<T>       elements;
    std::size_t          generator_count = 0;
    std::vector<Element> generator_index;  // element index of each generator
    std::vector<Element> parent;           // witness(i) = witness(parent[i]) + last[i]
    std::vector<Letter>  last;
    std::vector<Element> right;            // right[i * k + a] = elements[i] * gen[a]
    std::vector<Element> left;             // left[i * k + a] = gen[a] * elements[i]

    static constexpr Element root = std::numeric_limits<Element>::max();

    [[nodiscard]] std::size_t size() const noexcept {
      return elements.size();
    }

    [[nodiscard]] Word witness(Element i) const {
      Word w;
      while (i != root) {
        w.push_back(last[i]);
        i = parent[i];
      }
      std::reverse(w.begin(), w.end());
      return w;
    }

    [[nodiscard]] Element right_mult(Element i, Letter a) const {
      return right[i * generator_count + a];
    }

    [[nodiscard]] Element left_mult(Element i, Letter a) const {
      return left[i * generator_count + a];
    }

    //! Index of the value of a non-empty generator word.
    [[nodiscard]] Element evaluate(Word const& w) const {
      if (w.empty()) {
        detail::fail(ErrorCode::invalid_argument, "cannot evaluate the empty word");
      }
      Element x = generator_index.at(w[0]);
      for (std::size_t i = 1; i < w.size(); ++i) {
        x = right_mult(x, w[i]);
      }
      return x;
    }
  };

  //! Breadth-first closure of `gens` under `mul`. Ties are broken by the
  //! generator order, so numbering is reproducible. Throws CapExceeded once
  //! more than `cap` elements are found.
  template <typename T, typename Multiply, typename Hash = std::hash<T>>
  Enumeration<T> enumerate_semigroup(std::span<T const> gens,
                                     Multiply&&         mul,
                                     std::size_t        cap,
                                     bool               with_left = true) {
    if (gens.empty()) {
      detail::fail(ErrorCode::invalid_argument, "no generators");
    }
    Enumeration<T> e;
    std::size_t const k = gens.size();
    e.generator_count   = k;
    std::unordered_map<T, Element, Hash> index;

    auto add = [&](T&& x, Element parent, Letter a) -> Element {
      auto [it, inserted] = index.try_emplace(x, static_cast<Element>(e.elements.size()));
      if (inserted) {
        if (e.elements.size() >= cap) {
          detail::fail(ErrorCode::cap_exceeded,
                       "closure exceeds cap " + std::to_string(cap));
        }
        e.elements.push_back(std::move(x));
        e.parent.push_back(parent);
        e.last.push_back(a);
      }
      return it->second;
    };

    for (Letter a = 0; a < k; ++a) {
      e.generator_index.push_back(add(T(gens[a]), Enumeration<T>::root, a));
    }
    for (std::size_t i = 0; i < e.elements.size(); ++i) {
      for (Letter a = 0; a < k; ++a) {
        T   prod = mul(e.elements[i], gens[a]);
        auto j   = add(std::move(prod), static_cast<Element>(i), a);
        e.right.push_back(j);
      }
    }
    if (with_left) {
      e.left.resize(e.elements.size() * k);
      for (std::size_t i = 0; i < e.elements.size(); ++i) {
        for (Letter a = 0; a < k; ++a) {
          auto it = index.find(mul(gens[a], e.elements[i]));
          if (it == index.end()) {
            detail::fail(ErrorCode::check_failed, "left product escaped the closure");
          }
          e.left[i * k + a] = it->second;
        }
      }
    }
    return e;
  }

  template <typename T>
  Enumeration<T> enumerate_semigroup(std::vector<T> const& gens, std::size_t cap) {
    return enumerate_semigroup<T>(std::span<T const>(gens),
                                  [](T const& x, T const& y) { return x * y; },
                                  cap);
  }

}  // namespace sofic
