#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "sofic/finsemi/finite_semigroup.hpp"
#include "sofic/finsemi/green.hpp"
#include "sofic/finsemi/group.hpp"

namespace sofic {

  inline std::vector<Element> idempotents(FiniteSemigroup const& s) {
    std::vector<Element> out;
    for (Element x = 0; x < s.size(); ++x) {
      if (s.is_idempotent(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  //! s^index = s^(index + period), both minimal.
  struct IndexPeriod {
    std::size_t index;
    std::size_t period;
  };

  //! Index and period of x in the monogenic semigroup generated by x, for
  //! any associative `mul` over hashable values.
  template <typename T, typename Multiply, typename Hash = std::hash<T>>
  IndexPeriod index_period_of(T const& x, Multiply&& mul) {
    std::unordered_map<T, std::size_t, Hash> seen;
    T                                        p = x;
    for (std::size_t k = 1;; ++k) {
      auto [it, inserted] = seen.try_emplace(p, k);
      if (!inserted) {
        return {it->second, k - it->second};
      }
      p = mul(p, x);
    }
  }

  inline IndexPeriod index_period(FiniteSemigroup const& s, Element x) {
    return index_period_of<Element>(x, [&](Element a, Element b) { return s(a, b); });
  }

  //! x^k for k >= 1 by repeated squaring.
  template <typename T, typename Multiply>
  T power_of(T const& x, std::uint64_t k, Multiply&& mul) {
    if (k == 0) {
      detail::fail(ErrorCode::invalid_argument, "power exponent must be positive");
    }
    T    result = x;
    T    base   = x;
    bool have   = false;
    while (k > 0) {
      if (k & 1U) {
        result = have ? mul(result, base) : base;
        have   = true;
      }
      k >>= 1U;
      if (k > 0) {
        base = mul(base, base);
      }
    }
    return result;
  }

  inline Element power(FiniteSemigroup const& s, Element x, std::uint64_t k) {
    return power_of<Element>(x, k, [&](Element a, Element b) { return s(a, b); });
  }

  //! The unique idempotent power of x: x^m where m is the least multiple of
  //! the period that is at least the index.
  template <typename T, typename Multiply, typename Hash = std::hash<T>>
  T omega_power_of(T const& x, Multiply&& mul) {
    auto [index, period] = index_period_of<T, Multiply&, Hash>(x, mul);
    std::uint64_t m      = ((index + period - 1) / period) * period;
    return power_of<T>(x, m, mul);
  }

  inline Element omega_power(FiniteSemigroup const& s, Element x) {
    return omega_power_of<Element>(x, [&](Element a, Element b) { return s(a, b); });
  }

  //! The H-class of an idempotent as a group, with the inclusion into S.
  struct MaximalSubgroup {
    Element              idempotent;
    Group                group;
    std::vector<Element> elements;  // group index -> element of S
    std::unordered_map<Element, Element> index_of;  // element of S -> group index

    [[nodiscard]] Element to_group(Element s) const {
      auto it = index_of.find(s);
      if (it == index_of.end()) {
        detail::fail(ErrorCode::invalid_argument,
                     "element " + std::to_string(s) + " is not in the subgroup");
      }
      return it->second;
    }
  };

  //! Maximal subgroup at e; the identity e receives group index 0 and the
  //! remaining elements follow in increasing order.
  inline MaximalSubgroup maximal_subgroup(FiniteSemigroup const& s,
                                          GreenStructure const&  g,
                                          Element                e) {
    if (!s.is_idempotent(e)) {
      detail::fail(ErrorCode::not_idempotent, std::to_string(e));
    }
    MaximalSubgroup out;
    out.idempotent = e;
    out.elements.push_back(e);
    for (Element x = 0; x < s.size(); ++x) {
      if (x != e && g.h_class[x] == g.h_class[e]) {
        out.elements.push_back(x);
      }
    }
    std::size_t const n = out.elements.size();
    for (Element i = 0; i < n; ++i) {
      out.index_of[out.elements[i]] = i;
    }
    std::vector<Element> table(n * n);
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        auto p = s(out.elements[i], out.elements[j]);
        auto it = out.index_of.find(p);
        if (it == out.index_of.end()) {
          detail::fail(ErrorCode::check_failed, "H-class of an idempotent is not closed");
        }
        table[i * n + j] = it->second;
      }
    }
    std::vector<std::string> names;
    for (auto x : out.elements) {
      names.push_back(std::to_string(x));
    }
    out.group = Group(n, std::move(table), std::move(names));
    return out;
  }

  inline MaximalSubgroup maximal_subgroup(FiniteSemigroup const& s, Element e) {
    return maximal_subgroup(s, green_structure(s, false), e);
  }

}  // namespace sofic
