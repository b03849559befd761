#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sofic/finsemi/finite_semigroup.hpp"
#include "sofic/finsemi/subgroup.hpp"
#include "sofic/idempotent/loop_language.hpp"

namespace sofic {

  //! x^{n!} for any associative `mul`, from the index i and period q of x:
  //! the exponent n! is replaced by i + ((n! - i) mod q) once n! >= i.
  template <typename T, typename Multiply, typename Hash = std::hash<T>>
  T power_factorial_of(T const& x, std::uint64_t n, Multiply&& mul) {
    if (n == 0) {
      detail::fail(ErrorCode::invalid_argument, "n must be positive");
    }
    auto [index, period] = index_period_of<T, Multiply&, Hash>(x, mul);
    std::uint64_t fact_mod  = 1;  // n! mod period
    std::uint64_t fact_sat  = 1;  // n!, saturated at index
    for (std::uint64_t k = 2; k <= n; ++k) {
      fact_mod = fact_mod * (k % period) % period;
      fact_sat = fact_sat >= index ? fact_sat : std::min<std::uint64_t>(fact_sat * k, index);
    }
    std::uint64_t e = fact_sat < index ? fact_sat
                                       : index + (fact_mod + period - index % period) % period;
    T out = x;
    for (std::uint64_t k = 1; k < e; ++k) {
      out = mul(out, x);
    }
    return out;
  }

  inline Element power_factorial(FiniteSemigroup const& s, Element x, std::uint64_t n) {
    return power_factorial_of<Element>(x, n, [&](Element a, Element b) { return s(a, b); });
  }

  //! w_1 = v_1 and w_{n+1} = (w_n v_{n+1} w_n)^{(n+1)!}, kept symbolically.
  struct ZiminTerm {
    std::vector<Word> v;  // v_1 .. v_n

    [[nodiscard]] std::size_t depth() const {
      return v.size();
    }

    //! |w_n|, or nullopt if it overflows 128 bits.
    [[nodiscard]] std::optional<Count> length() const {
      if (v.empty()) {
        return Count{0};
      }
      Count const max = std::numeric_limits<Count>::max();
      Count       len = v[0].size();
      for (std::size_t i = 1; i < v.size(); ++i) {
        if (len > (max - v[i].size()) / 2) {
          return std::nullopt;
        }
        Count inner = 2 * len + v[i].size();
        for (std::size_t k = 2; k <= i + 1; ++k) {
          if (inner > max / k) {
            return std::nullopt;
          }
          inner *= k;
        }
        len = inner;
      }
      return len;
    }

    //! The word w_n, if its length is at most `limit`.
    [[nodiscard]] std::optional<Word> expand(std::size_t limit) const {
      auto len = length();
      if (!len || *len > limit || v.empty()) {
        return std::nullopt;
      }
      Word w = v[0];
      for (std::size_t i = 1; i < v.size(); ++i) {
        Word inner = w;
        inner.insert(inner.end(), v[i].begin(), v[i].end());
        inner.insert(inner.end(), w.begin(), w.end());
        std::size_t f = 1;
        for (std::size_t k = 2; k <= i + 1; ++k) {
          f *= k;
        }
        w.clear();
        for (std::size_t k = 0; k < f; ++k) {
          w.insert(w.end(), inner.begin(), inner.end());
        }
      }
      return w;
    }

    //! One let-binding per level.
    [[nodiscard]] std::string to_string(Alphabet const& a) const {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        std::string vi = a.format(v[i]);
        if (i == 0) {
          out += "w1 = " + vi + "\n";
        } else {
          std::string prev = "w" + std::to_string(i);
          out += "w" + std::to_string(i + 1) + " = (" + prev + " " + vi + " " + prev + ")^("
                 + std::to_string(i + 1) + "!)\n";
        }
      }
      return out;
    }
  };

  //! phi(T) for the non-empty words of a DFA: BFS over (state, element of S^1).
  //! Returns, per element of S, the length of a shortest word of T reaching it.
  inline std::vector<std::optional<std::size_t>> image_of_language(Dfa const&                  d,
                                                                   FiniteSemigroup const&      s,
                                                                   std::vector<Element> const& letters) {
    std::size_t const n   = s.size();
    std::size_t const one = n;  // adjoined identity
    std::vector<bool> seen(d.states * (n + 1), false);
    std::vector<std::optional<std::size_t>> out(n);
    std::vector<std::pair<State, std::size_t>> layer{{d.initial, one}};
    seen[d.initial * (n + 1) + one] = true;
    for (std::size_t len = 0; !layer.empty(); ++len) {
      std::vector<std::pair<State, std::size_t>> next;
      for (auto [q, x] : layer) {
        if (x != one && d.accepting[q] && !out[x]) {
          out[x] = len;
        }
        for (Letter a = 0; a < d.letters; ++a) {
          State       r = d.next(q, a);
          std::size_t y = x == one ? letters[a] : s(static_cast<Element>(x), letters[a]);
          if (!seen[r * (n + 1) + y]) {
            seen[r * (n + 1) + y] = true;
            next.emplace_back(r, y);
          }
        }
      }
      layer = std::move(next);
    }
    return out;
  }

  struct ZiminResult {
    Element              rho    = 0;
    std::size_t          n_star = 0;
    std::optional<Count> bound;         // N, nullopt if it overflows
    std::string          bound_text;    // N, symbolic on overflow
    ZiminTerm            term;          // w_{n*}
    std::vector<Element> chain;         // phi(w_1) .. phi(w_{n*})
    std::vector<Element> image;         // phi(T)
  };

  //! Evaluates phi(w_n) until the certificate holds: n >= |S|, the value is
  //! idempotent and every element of phi(T) is a factor of it in phi(T)^1.
  inline ZiminResult evaluate_zimin(LoopLanguage const&          t,
                                    FiniteSemigroup const&       s,
                                    std::vector<Element> const&  letters,
                                    std::size_t                  max_steps = 1'000'000) {
    if (letters.size() != t.dfa.letters) {
      detail::fail(ErrorCode::invalid_argument, "letter map must cover the alphabet");
    }
    for (auto x : letters) {
      if (x >= s.size()) {
        detail::fail(ErrorCode::invalid_argument, "letter image out of range");
      }
    }
    ZiminResult out;
    auto        reach = image_of_language(t.dfa, s, letters);
    std::vector<bool> in_image(s.size(), false);
    for (Element x = 0; x < s.size(); ++x) {
      if (reach[x]) {
        out.image.push_back(x);
        in_image[x] = true;
      }
    }
    if (out.image.empty()) {
      detail::fail(ErrorCode::invalid_argument, "the loop language is empty");
    }
    // ideal[i]: the ideal of phi(T) generated by image[i]
    std::vector<std::vector<bool>> ideal;
    for (auto x : out.image) {
      std::vector<bool>    mem(s.size(), false);
      std::vector<Element> todo{x};
      mem[x] = true;
      while (!todo.empty()) {
        Element y = todo.back();
        todo.pop_back();
        for (auto u : out.image) {
          for (Element z : {s(u, y), s(y, u)}) {
            if (!mem[z]) {
              mem[z] = true;
              todo.push_back(z);
            }
          }
        }
      }
      ideal.push_back(std::move(mem));
    }

    // N = |X| + ... + |X|^r with r = m(k+1) - 1
    std::size_t const r     = t.m * (s.size() + 1) - 1;
    Count const       max   = std::numeric_limits<Count>::max();
    Count             bound = 0;
    Count             pw    = 1;
    bool              over  = false;
    for (std::size_t i = 1; i <= r && !over; ++i) {
      if (pw > max / t.dfa.letters) {
        over = true;
        break;
      }
      pw *= t.dfa.letters;
      if (bound > max - pw) {
        over = true;
        break;
      }
      bound += pw;
    }
    if (over) {
      out.bound_text = "sum_{i=1}^{" + std::to_string(r) + "} " + std::to_string(t.dfa.letters) + "^i";
    } else {
      out.bound      = bound;
      out.bound_text = to_string(bound);
    }

    auto phi = [&](Word const& w) {
      Element x = letters[w[0]];
      for (std::size_t i = 1; i < w.size(); ++i) {
        x = s(x, letters[w[i]]);
      }
      return x;
    };
    auto stream = shortlex_stream(t);
    auto first  = stream.next();
    if (!first) {
      detail::fail(ErrorCode::invalid_argument, "the loop language is empty");
    }
    out.term.v.push_back(*first);
    Element w = phi(*first);
    out.chain.push_back(w);
    for (std::size_t n = 1;; ++n) {
      if (n >= s.size() && s.is_idempotent(w)) {
        bool bottom = true;
        for (std::size_t i = 0; i < ideal.size() && bottom; ++i) {
          bottom = ideal[i][w];
        }
        if (bottom) {
          out.n_star = n;
          break;
        }
      }
      if (n >= max_steps || (out.bound && Count{n} > *out.bound)) {
        detail::fail(ErrorCode::check_failed,
                     "no certificate after " + std::to_string(n) + " steps (N = " + out.bound_text + ")");
      }
      auto v = stream.next();
      if (!v) {
        detail::fail(ErrorCode::check_failed, "the loop language is finite");
      }
      out.term.v.push_back(*v);
      w = power_factorial(s, s(s(w, phi(*v)), w), n + 1);
      out.chain.push_back(w);
    }
    out.rho = w;
    if (!in_image[out.rho]) {
      detail::fail(ErrorCode::check_failed, "rho is not in phi(T)");
    }
    return out;
  }

  //! Outcome of the length bound for phi(L) with L rational.
  struct RationalBound {
    std::size_t bound      = 0;  // m(|S| + 1) - 1
    std::size_t max_length = 0;  // longest shortest witness
    std::size_t elements   = 0;  // |phi(L)|
    bool        holds      = false;
  };

  //! Checks that every element of phi(L), L given by a DFA with m states,
  //! is the image of a word of L of length at most m(|S|+1)-1.
  inline RationalBound rational_bound_check(Dfa const&                  l,
                                            FiniteSemigroup const&      s,
                                            std::vector<Element> const& letters) {
    if (letters.size() != l.letters) {
      detail::fail(ErrorCode::invalid_argument, "letter map must cover the alphabet");
    }
    RationalBound out;
    out.bound = l.states * (s.size() + 1) - 1;
    for (auto const& len : image_of_language(l, s, letters)) {
      if (len) {
        ++out.elements;
        out.max_length = std::max(out.max_length, *len);
      }
    }
    out.holds = out.max_length <= out.bound;
    return out;
  }

}  // namespace sofic
