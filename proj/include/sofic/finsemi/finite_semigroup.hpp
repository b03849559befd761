#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sofic/core/error.hpp"
#include "sofic/core/word.hpp"
#include "sofic/finsemi/enumerate.hpp"
#include "sofic/finsemi/group.hpp"

namespace sofic {

  //! A finite semigroup given by its full multiplication table, a list of
  //! generators and, for every element, the shortlex-least generator word
  //! evaluating to it.
  struct SemigroupOptions {
    bool          check_associativity = true;
    std::uint64_t seed                = 0x5eed;
  };

  class FiniteSemigroup {
   public:
    using Options = SemigroupOptions;

    FiniteSemigroup() = default;

    FiniteSemigroup(std::size_t              n,
                    std::vector<Element>     table,
                    std::vector<Element>     generators,
                    std::optional<Element>   zero     = std::nullopt,
                    std::optional<Element>   identity = std::nullopt,
                    Options                  opts     = {})
        : _n(n), _table(std::move(table)), _generators(std::move(generators)) {
      if (_n == 0) {
        detail::fail(ErrorCode::invalid_argument, "empty semigroup");
      }
      if (_table.size() != _n * _n) {
        detail::fail(ErrorCode::dimension_mismatch,
                     "table has " + std::to_string(_table.size()) + " entries, expected "
                         + std::to_string(_n * _n));
      }
      for (auto x : _table) {
        if (x >= _n) {
          detail::fail(ErrorCode::invalid_argument, "table entry out of range");
        }
      }
      if (_generators.empty()) {
        detail::fail(ErrorCode::invalid_argument, "no generators");
      }
      for (auto g : _generators) {
        if (g >= _n) {
          detail::fail(ErrorCode::invalid_argument, "generator out of range");
        }
      }
      if (opts.check_associativity) {
        check_associative(opts.seed);
      }
      compute_witnesses();
      _zero     = find_zero();
      _identity = find_identity();
      if (zero && zero != _zero) {
        detail::fail(ErrorCode::invalid_argument,
                     "declared zero " + std::to_string(*zero) + " is not a zero");
      }
      if (identity && identity != _identity) {
        detail::fail(ErrorCode::invalid_argument,
                     "declared identity " + std::to_string(*identity) + " is not an identity");
      }
    }

    //! Table-backed copy of an enumeration; generators keep their order.
    template <typename T>
    static FiniteSemigroup from_enumeration(Enumeration<T> const& e) {
      std::size_t const    n = e.size();
      std::size_t const    k = e.generator_count;
      std::vector<Element> table(n * n);
      // elements are numbered so that parent[j] < j.
      for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
          Element p = e.parent[j];
          table[i * n + j] = p == Enumeration<T>::root
                                 ? e.right[i * k + e.last[j]]
                                 : e.right[table[i * n + p] * k + e.last[j]];
        }
      }
      FiniteSemigroup s;
      s._n          = n;
      s._table      = std::move(table);
      s._generators = e.generator_index;
      s._parent     = e.parent;
      s._last       = e.last;
      s._zero       = s.find_zero();
      s._identity   = s.find_identity();
      return s;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }

    [[nodiscard]] Element operator()(Element x, Element y) const {
      return _table[x * _n + y];
    }

    [[nodiscard]] std::vector<Element> const& table() const noexcept {
      return _table;
    }

    [[nodiscard]] std::vector<Element> const& generators() const noexcept {
      return _generators;
    }

    [[nodiscard]] std::optional<Element> zero() const noexcept {
      return _zero;
    }

    [[nodiscard]] std::optional<Element> identity() const noexcept {
      return _identity;
    }

    [[nodiscard]] Word witness(Element x) const {
      Word w;
      while (x != Enumeration<int>::root) {
        w.push_back(_last[x]);
        x = _parent[x];
      }
      std::reverse(w.begin(), w.end());
      return w;
    }

    [[nodiscard]] Element evaluate(Word const& w) const {
      if (w.empty()) {
        detail::fail(ErrorCode::invalid_argument, "cannot evaluate the empty word");
      }
      Element x = _generators.at(w[0]);
      for (std::size_t i = 1; i < w.size(); ++i) {
        x = (*this)(x, _generators.at(w[i]));
      }
      return x;
    }

    [[nodiscard]] bool is_idempotent(Element x) const {
      return (*this)(x, x) == x;
    }

    //! Same table, different generator list (witnesses recomputed).
    [[nodiscard]] FiniteSemigroup with_generators(std::vector<Element> gens) const {
      return FiniteSemigroup(_n, _table, std::move(gens), std::nullopt, std::nullopt,
                             {.check_associativity = false});
    }

    //! Exhaustive for n <= 200, otherwise 10 n^2 seeded random triples.
    void check_associative(std::uint64_t seed = 0x5eed) const {
      auto check = [&](Element x, Element y, Element z) {
        if ((*this)((*this)(x, y), z) != (*this)(x, (*this)(y, z))) {
          detail::fail(ErrorCode::not_associative,
                       "(" + std::to_string(x) + "," + std::to_string(y) + ","
                           + std::to_string(z) + ")");
        }
      };
      if (_n <= 200) {
        for (Element x = 0; x < _n; ++x) {
          for (Element y = 0; y < _n; ++y) {
            for (Element z = 0; z < _n; ++z) {
              check(x, y, z);
            }
          }
        }
        return;
      }
      std::mt19937_64                        rng(seed);
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(_n - 1));
      for (std::size_t t = 0; t < 10 * _n * _n; ++t) {
        check(pick(rng), pick(rng), pick(rng));
      }
    }

   private:
    void compute_witnesses() {
      constexpr Element unset = Enumeration<int>::root;
      _parent.assign(_n, unset);
      _last.assign(_n, 0);
      std::vector<bool>    seen(_n, false);
      std::vector<Element> order;
      for (Letter a = 0; a < _generators.size(); ++a) {
        auto g = _generators[a];
        if (!seen[g]) {
          seen[g]  = true;
          _last[g] = a;
          order.push_back(g);
        }
      }
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (Letter a = 0; a < _generators.size(); ++a) {
          auto y = (*this)(order[i], _generators[a]);
          if (!seen[y]) {
            seen[y]    = true;
            _parent[y] = order[i];
            _last[y]   = a;
            order.push_back(y);
          }
        }
      }
      if (order.size() != _n) {
        detail::fail(ErrorCode::not_generated,
                     std::to_string(_n - order.size()) + " elements not generated");
      }
    }

    [[nodiscard]] std::optional<Element> find_zero() const {
      for (Element z = 0; z < _n; ++z) {
        bool ok = true;
        for (Element s = 0; s < _n && ok; ++s) {
          ok = (*this)(z, s) == z && (*this)(s, z) == z;
        }
        if (ok) {
          return z;
        }
      }
      return std::nullopt;
    }

    [[nodiscard]] std::optional<Element> find_identity() const {
      for (Element u = 0; u < _n; ++u) {
        bool ok = true;
        for (Element s = 0; s < _n && ok; ++s) {
          ok = (*this)(u, s) == s && (*this)(s, u) == s;
        }
        if (ok) {
          return u;
        }
      }
      return std::nullopt;
    }

    std::size_t            _n = 0;
    std::vector<Element>   _table;
    std::vector<Element>   _generators;
    std::vector<Element>   _parent;
    std::vector<Letter>    _last;
    std::optional<Element> _zero;
    std::optional<Element> _identity;
  };

  //! Generates a table-backed semigroup from concrete generators.
  template <typename T>
  FiniteSemigroup close_generators(std::vector<T> const& gens, std::size_t cap) {
    return FiniteSemigroup::from_enumeration(enumerate_semigroup(gens, cap));
  }

  template <typename T, typename Multiply>
  FiniteSemigroup close_generators(std::vector<T> const& gens, Multiply&& mul, std::size_t cap) {
    return FiniteSemigroup::from_enumeration(
        enumerate_semigroup<T>(std::span<T const>(gens), std::forward<Multiply>(mul), cap));
  }

  //! The group as a semigroup generated by all its elements.
  inline FiniteSemigroup as_semigroup(Group const& g) {
    std::vector<Element> gens(g.size());
    for (Element x = 0; x < g.size(); ++x) {
      gens[x] = x;
    }
    return FiniteSemigroup(g.size(), g.table(), gens, std::nullopt, std::nullopt,
                           {.check_associativity = false});
  }

}  // namespace sofic
