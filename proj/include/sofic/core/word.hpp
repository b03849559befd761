#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sofic/core/error.hpp"

namespace sofic {

  using Letter = std::uint32_t;
  using Word   = std::vector<Letter>;

  //! Ordered set of letter names. The order is the order used by shortlex.
  class Alphabet {
   public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> names) : _names(std::move(names)) {
      std::set<std::string> seen;
      for (auto const& n : _names) {
        if (n.empty() || !seen.insert(n).second) {
          detail::fail(ErrorCode::invalid_argument,
                       "duplicate or empty letter name '" + n + "'");
        }
      }
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _names.size();
    }

    [[nodiscard]] std::string const& name(Letter a) const {
      return _names.at(a);
    }

    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    [[nodiscard]] std::optional<Letter> find(std::string_view n) const {
      auto it = std::find(_names.begin(), _names.end(), n);
      if (it == _names.end()) {
        return std::nullopt;
      }
      return static_cast<Letter>(it - _names.begin());
    }

    [[nodiscard]] Letter index(std::string_view n) const {
      auto a = find(n);
      if (!a) {
        detail::fail(ErrorCode::parse_error,
                     "unknown letter '" + std::string(n) + "'");
      }
      return *a;
    }

    // Single-character and bracketed names concatenate unambiguously.
    [[nodiscard]] bool concatenable() const {
      return std::all_of(_names.begin(), _names.end(), [](auto const& n) {
        return n.size() == 1 || (n.front() == '[' && n.back() == ']');
      });
    }

    [[nodiscard]] std::string format(Word const& w) const {
      std::string out;
      bool const  glue = concatenable();
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !glue) {
          out += ' ';
        }
        out += name(w[i]);
      }
      return out;
    }

    //! Greedy longest-match tokenisation; whitespace separates tokens.
    [[nodiscard]] Word parse(std::string_view text) const {
      Word        w;
      std::size_t i = 0;
      while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t') {
          ++i;
          continue;
        }
        std::size_t best = 0;
        Letter      which = 0;
        for (Letter a = 0; a < _names.size(); ++a) {
          auto const& n = _names[a];
          if (n.size() > best && text.substr(i, n.size()) == n) {
            best  = n.size();
            which = a;
          }
        }
        if (best == 0) {
          detail::fail(ErrorCode::parse_error,
                       "cannot tokenise '" + std::string(text.substr(i)) + "'");
        }
        w.push_back(which);
        i += best;
      }
      return w;
    }

    bool operator==(Alphabet const&) const = default;

   private:
    std::vector<std::string> _names;
  };

  namespace words {

    inline bool shortlex_less(Word const& u, Word const& v) {
      if (u.size() != v.size()) {
        return u.size() < v.size();
      }
      return u < v;
    }

    inline Word power(Word const& u, std::size_t k) {
      Word out;
      out.reserve(u.size() * k);
      for (std::size_t i = 0; i < k; ++i) {
        out.insert(out.end(), u.begin(), u.end());
      }
      return out;
    }

    inline Word rotate(Word const& u, std::size_t k) {
      Word out(u);
      if (!out.empty()) {
        std::rotate(out.begin(), out.begin() + (k % out.size()), out.end());
      }
      return out;
    }

    //! u is primitive if it is not w^k for k >= 2.
    inline bool is_primitive(Word const& u) {
      std::size_t const n = u.size();
      if (n == 0) {
        return false;
      }
      for (std::size_t d = 1; d < n; ++d) {
        if (n % d == 0 && rotate(u, d) == u) {
          return false;
        }
      }
      return true;
    }

    inline bool is_cyclic_conjugate(Word const& u, Word const& v) {
      if (u.size() != v.size()) {
        return false;
      }
      for (std::size_t k = 0; k < u.size(); ++k) {
        if (rotate(u, k) == v) {
          return true;
        }
      }
      return u.empty();
    }

    inline Word least_rotation(Word const& u) {
      Word best = u;
      for (std::size_t k = 1; k < u.size(); ++k) {
        best = std::min(best, rotate(u, k));
      }
      return best;
    }

    //! Membership of w in u^+ (or u^* when allow_empty is set).
    inline bool in_plus(Word const& w, Word const& u, bool allow_empty = false) {
      if (w.empty()) {
        return allow_empty;
      }
      if (u.empty() || w.size() % u.size() != 0) {
        return false;
      }
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != u[i % u.size()]) {
          return false;
        }
      }
      return true;
    }

    inline std::set<Letter> alph(Word const& w) {
      return {w.begin(), w.end()};
    }

    inline std::size_t count(Word const& w, Letter a) {
      return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
    }

    inline Word concat(Word u, Word const& v) {
      u.insert(u.end(), v.begin(), v.end());
      return u;
    }

    //! Calls f(word) for every word of length lo..hi over k letters, in
    //! shortlex order.
    template <typename F>
    void for_each_word(std::size_t k, std::size_t lo, std::size_t hi, F&& f) {
      if (k == 0) {
        if (lo == 0) {
          f(Word{});
        }
        return;
      }
      for (std::size_t len = lo; len <= hi; ++len) {
        Word w(len, 0);
        while (true) {
          f(static_cast<Word const&>(w));
          std::size_t i = len;
          while (i > 0 && w[i - 1] + 1 == k) {
            w[i - 1] = 0;
            --i;
          }
          if (i == 0) {
            break;
          }
          ++w[i - 1];
        }
      }
    }

  }  // namespace words

}  // namespace sofic
