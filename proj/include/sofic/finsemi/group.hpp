#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sofic/core/error.hpp"

namespace sofic {

  using Element = std::uint32_t;

  //! A finite group by its Cayley table, with elements 0..n-1.
  class Group {
   public:
    Group() : Group(1, {0}, {"1"}) {}

    Group(std::size_t n, std::vector<Element> table, std::vector<std::string> names = {})
        : _n(n), _table(std::move(table)), _names(std::move(names)) {
      if (_n == 0 || _table.size() != _n * _n) {
        detail::fail(ErrorCode::dimension_mismatch, "group table has wrong size");
      }
      for (auto x : _table) {
        if (x >= _n) {
          detail::fail(ErrorCode::invalid_argument, "group table entry out of range");
        }
      }
      bool found = false;
      for (Element e = 0; e < _n && !found; ++e) {
        bool ok = true;
        for (Element x = 0; x < _n && ok; ++x) {
          ok = (*this)(e, x) == x && (*this)(x, e) == x;
        }
        if (ok) {
          _identity = e;
          found     = true;
        }
      }
      if (!found) {
        detail::fail(ErrorCode::not_a_group, "no identity element");
      }
      _inverse.assign(_n, _n);
      for (Element x = 0; x < _n; ++x) {
        for (Element y = 0; y < _n; ++y) {
          if ((*this)(x, y) == _identity && (*this)(y, x) == _identity) {
            _inverse[x] = y;
            break;
          }
        }
        if (_inverse[x] == _n) {
          detail::fail(ErrorCode::not_a_group,
                       "element " + std::to_string(x) + " has no inverse");
        }
      }
      for (Element x = 0; x < _n; ++x) {
        for (Element y = 0; y < _n; ++y) {
          for (Element z = 0; z < _n; ++z) {
            if ((*this)((*this)(x, y), z) != (*this)(x, (*this)(y, z))) {
              detail::fail(ErrorCode::not_a_group, "table is not associative");
            }
          }
        }
      }
      if (_names.empty()) {
        for (Element x = 0; x < _n; ++x) {
          _names.push_back(std::to_string(x));
        }
      }
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }

    [[nodiscard]] Element operator()(Element x, Element y) const {
      return _table[x * _n + y];
    }

    [[nodiscard]] Element identity() const noexcept {
      return _identity;
    }

    [[nodiscard]] Element inverse(Element x) const {
      return _inverse[x];
    }

    [[nodiscard]] std::string const& name(Element x) const {
      return _names[x];
    }

    [[nodiscard]] std::vector<Element> const& table() const noexcept {
      return _table;
    }

    [[nodiscard]] bool is_trivial() const noexcept {
      return _n == 1;
    }

    static Group trivial() {
      return Group();
    }

    static Group cyclic(std::size_t n) {
      std::vector<Element> t(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          t[i * n + j] = static_cast<Element>((i + j) % n);
        }
      }
      return Group(n, std::move(t));
    }

    static Group direct_product(Group const& a, Group const& b) {
      std::size_t const    n = a.size() * b.size();
      std::vector<Element> t(n * n);
      std::vector<std::string> names;
      for (std::size_t x = 0; x < n; ++x) {
        names.push_back("(" + a.name(x / b.size()) + "," + b.name(x % b.size()) + ")");
        for (std::size_t y = 0; y < n; ++y) {
          auto p = a(x / b.size(), y / b.size());
          auto q = b(x % b.size(), y % b.size());
          t[x * n + y] = static_cast<Element>(p * b.size() + q);
        }
      }
      return Group(n, std::move(t), std::move(names));
    }

    //! Symmetric group on k points, elements in lexicographic order of
    //! their image lists (so the identity is element 0).
    static Group symmetric(std::size_t k) {
      std::vector<std::vector<std::size_t>> perms;
      std::vector<std::size_t>              p(k);
      std::iota(p.begin(), p.end(), 0);
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      std::size_t const    n = perms.size();
      std::vector<Element> t(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          std::vector<std::size_t> c(k);
          for (std::size_t i = 0; i < k; ++i) {
            c[i] = perms[y][perms[x][i]];
          }
          auto it = std::find(perms.begin(), perms.end(), c);
          t[x * n + y] = static_cast<Element>(it - perms.begin());
        }
      }
      return Group(n, std::move(t));
    }

    //! Parses "1", "Z<n>", "S<k>" and products joined by 'x'.
    static Group parse(std::string const& spec) {
      std::vector<std::string> parts;
      std::size_t              start = 0;
      while (true) {
        auto pos = spec.find('x', start);
        parts.push_back(spec.substr(start, pos - start));
        if (pos == std::string::npos) {
          break;
        }
        start = pos + 1;
      }
      Group result;
      bool  first = true;
      for (auto const& part : parts) {
        Group g;
        if (part == "1" || part == "trivial") {
          g = trivial();
        } else if (part.size() >= 2 && (part[0] == 'Z' || part[0] == 'C' || part[0] == 'S')) {
          std::size_t n = 0;
          try {
            n = std::stoul(part.substr(1));
          } catch (...) {
            detail::fail(ErrorCode::parse_error, "bad group spec '" + part + "'");
          }
          if (n == 0 || (part[0] == 'S' && n > 5) || n > 64) {
            detail::fail(ErrorCode::parse_error, "unsupported group '" + part + "'");
          }
          g = part[0] == 'S' ? symmetric(n) : cyclic(n);
        } else {
          detail::fail(ErrorCode::parse_error, "bad group spec '" + part + "'");
        }
        result = first ? g : direct_product(result, g);
        first  = false;
      }
      return result;
    }

   private:
    std::size_t              _n = 1;
    std::vector<Element>     _table;
    std::vector<std::string> _names;
    Element                  _identity = 0;
    std::vector<Element>     _inverse;
  };

}  // namespace sofic
