#pragma once

#include <optional>
#include <set>
#include <vector>

#include "sofic/core/word.hpp"
#include "sofic/shift/dfa.hpp"
#include "sofic/shift/presentation.hpp"

namespace sofic {

  //! Minimal complete DFA of the non-empty factors of the shift presented
  //! by P: subset construction from the set of all states, every non-empty
  //! subset accepting. The empty word is accepted as well; it plays no
  //! role in the syntactic semigroup.
  inline Dfa factor_dfa(Presentation const& p) {
    p.require_irreducible();
    std::vector<State> all(p.states());
    for (State q = 0; q < p.states(); ++q) {
      all[q] = q;
    }
    auto d = determinize(
        p.states(),
        p.alphabet().size(),
        all,
        [&](State q, Letter a, auto&& visit) {
          for (auto i : p.out_edges(q)) {
            if (p.edges()[i].label == a) {
              visit(p.edges()[i].dst);
            }
          }
        },
        [](std::vector<State> const& subset) { return !subset.empty(); });
    return minimize(d);
  }

  //! q(n): the number of factors of length n.
  inline Count complexity(Dfa const& factors, std::size_t n) {
    return count_accepted(factors, n);
  }

  //! Shortlex-least accepted word of length n in a prolongable language.
  inline Word first_word(Dfa const& d, std::size_t n) {
    auto  live = d.live();
    Word  w;
    State q = d.initial;
    for (std::size_t i = 0; i < n; ++i) {
      Letter a = 0;
      while (a < d.letters && !live[d.next(q, a)]) {
        ++a;
      }
      if (a == d.letters) {
        detail::fail(ErrorCode::invalid_argument, "language is not prolongable");
      }
      w.push_back(a);
      q = d.next(q, a);
    }
    return w;
  }

  namespace detail {
    inline std::set<Word> factors_of_power(Word const& u, std::size_t len) {
      std::set<Word> out;
      Word           big = words::power(u, len / u.size() + 2);
      for (std::size_t i = 0; i < u.size(); ++i) {
        out.insert(Word(big.begin() + i, big.begin() + i + len));
      }
      return out;
    }
  }  // namespace detail

  //! If the shift is the orbit of a single periodic point u^∞, returns the
  //! least rotation of the primitive word u. Decided by q(n) = q(n+1) for
  //! some n <= 2|D|, then confirmed against the factors of u^∞ up to
  //! length 3|u|.
  inline std::optional<Word> is_periodic(Dfa const& factors) {
    std::size_t const bound = 2 * factors.states + 1;
    std::optional<std::size_t> flat;
    Count                      prev = complexity(factors, 1);
    for (std::size_t n = 1; n <= bound && !flat; ++n) {
      Count next = complexity(factors, n + 1);
      if (next == prev) {
        flat = n;
      }
      prev = next;
    }
    if (!flat) {
      return std::nullopt;
    }
    auto const period = static_cast<std::size_t>(complexity(factors, bound));
    Word       sample = first_word(factors, std::max(bound, period));
    Word       u(sample.begin(), sample.begin() + static_cast<std::ptrdiff_t>(period));
    u = words::least_rotation(u);
    if (!words::is_primitive(u)) {
      detail::fail(ErrorCode::check_failed, "extracted period word is not primitive");
    }
    for (std::size_t len = 1; len <= 3 * u.size(); ++len) {
      std::set<Word> accepted;
      for_each_accepted(factors, len, len, [&](Word const& w) { accepted.insert(w); });
      if (accepted != detail::factors_of_power(u, len)) {
        detail::fail(ErrorCode::check_failed,
                     "factors of length " + std::to_string(len) + " differ from the period word");
      }
    }
    return u;
  }

  inline std::optional<Word> is_periodic(Presentation const& p) {
    return is_periodic(factor_dfa(p));
  }

}  // namespace sofic
