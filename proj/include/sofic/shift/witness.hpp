#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sofic/core/word.hpp"
#include "sofic/shift/factor.hpp"
#include "sofic/shift/higher_block.hpp"

namespace sofic {

  //! Whether w^+ is contained in the language of d: the states reached by
  //! w, w^2, ... are all live; they repeat after at most |d| steps.
  inline bool powers_accepted(Dfa const& d, Word const& w) {
    if (w.empty()) {
      return true;
    }
    auto              live = d.live();
    std::vector<bool> seen(d.states, false);
    State             q = d.initial;
    while (!seen[q]) {
      seen[q] = true;
      q       = d.run(q, w);
      if (!live[q] || !d.accepting[q]) {
        return false;
      }
    }
    return true;
  }

  //! A pair (w, v) of equal-length words of L with w^+ in L and v not a
  //! cyclic conjugate of w.
  struct NonMinimalWitness {
    Word w;
    Word v;
  };

  namespace detail {
    inline Word extend_right(Dfa const& d, Word v, std::size_t len) {
      auto  live = d.live();
      State q    = d.run(d.initial, v);
      while (v.size() < len) {
        Letter a = 0;
        while (a < d.letters && !live[d.next(q, a)]) {
          ++a;
        }
        if (a == d.letters) {
          fail(ErrorCode::invalid_argument, "language is not prolongable");
        }
        v.push_back(a);
        q = d.next(q, a);
      }
      return v;
    }

    inline bool is_factor_of_power(Word const& v, Word const& w) {
      Word big = words::power(w, v.size() / w.size() + 2);
      return std::search(big.begin(), big.end(), v.begin(), v.end()) != big.end();
    }

    inline void check_witness(Dfa const& d, NonMinimalWitness const& x) {
      if (x.w.empty() || x.w.size() != x.v.size()) {
        fail(ErrorCode::check_failed, "witness words must be non-empty of equal length");
      }
      if (!powers_accepted(d, x.w)) {
        fail(ErrorCode::check_failed, "w^+ is not contained in the language");
      }
      if (!d.accepts(x.v)) {
        fail(ErrorCode::check_failed, "v is not in the language");
      }
      if (words::is_cyclic_conjugate(x.w, x.v)) {
        fail(ErrorCode::check_failed, "v is a cyclic conjugate of w");
      }
    }
  }  // namespace detail

  //! Shortest-first witness that the shift is not minimal: w is the first
  //! word in shortlex order with w^+ in L, v the first word of L that is
  //! not a factor of w^∞. Lengths are then equalised by replacing w with
  //! a power and padding v on the right with the smallest viable letters.
  inline NonMinimalWitness non_minimal_witness(Dfa const& d) {
    if (is_periodic(d)) {
      detail::fail(ErrorCode::shift_is_minimal, "the shift is a single periodic orbit");
    }
    std::optional<Word> w;
    for (std::size_t len = 1; !w; ++len) {
      if (len > d.states) {
        detail::fail(ErrorCode::check_failed, "no cycle word found");
      }
      for_each_accepted(d, len, len, [&](Word const& x) {
        if (!w && powers_accepted(d, x)) {
          w = x;
        }
      });
    }
    std::optional<Word> v;
    for (std::size_t len = 1; !v; ++len) {
      if (len > 2 * d.states + w->size()) {
        detail::fail(ErrorCode::check_failed, "no word outside the orbit of w");
      }
      for_each_accepted(d, len, len, [&](Word const& x) {
        if (!v && !detail::is_factor_of_power(x, *w)) {
          v = x;
        }
      });
    }
    NonMinimalWitness out{*w, *v};
    if (out.v.size() > out.w.size()) {
      out.w = words::power(out.w, (out.v.size() + out.w.size() - 1) / out.w.size());
    }
    out.v = detail::extend_right(d, out.v, out.w.size());
    detail::check_witness(d, out);
    return out;
  }

  inline NonMinimalWitness non_minimal_witness(Presentation const& p) {
    return non_minimal_witness(factor_dfa(p));
  }

  //! Recoding into N-blocks, N = |w|, in which the block word z reading the
  //! rotations of w avoids the letter [v].
  struct PartialAlphabetConjugate {
    std::size_t       n;
    Presentation      blocks;
    Word              z;
    NonMinimalWitness witness;
  };

  inline PartialAlphabetConjugate conjugate_with_partial_alphabet(Presentation const&      p,
                                                                  NonMinimalWitness const& x) {
    auto d = factor_dfa(p);
    detail::check_witness(d, x);
    std::size_t const n      = x.w.size();
    Presentation      blocks = higher_block(p, n);
    Word              z;
    for (std::size_t i = 0; i < n; ++i) {
      z.push_back(blocks.alphabet().index(block_name(p.alphabet(), words::rotate(x.w, i))));
    }
    auto dz = factor_dfa(blocks);
    if (!powers_accepted(dz, z)) {
      detail::fail(ErrorCode::check_failed, "z^+ is not contained in the block language");
    }
    auto used = words::alph(z);
    if (used.size() >= blocks.alphabet().size()) {
      detail::fail(ErrorCode::check_failed, "alph(z) is not a proper subset");
    }
    Letter vb = blocks.alphabet().index(block_name(p.alphabet(), x.v));
    if (used.count(vb) != 0) {
      detail::fail(ErrorCode::check_failed, "[v] occurs in z");
    }
    return {n, std::move(blocks), std::move(z), x};
  }

  inline PartialAlphabetConjugate conjugate_with_partial_alphabet(Presentation const& p) {
    return conjugate_with_partial_alphabet(p, non_minimal_witness(p));
  }

  //! Brute-force check that for all x, y with |x|, |y| <= bound over an
  //! alphabet of `letters` letters: x u^m y in u^+ iff x, y in u^*.
  inline bool check_sync_delay(Word const& u, std::size_t m, std::size_t bound, std::size_t letters) {
    if (u.empty() || !words::is_primitive(u)) {
      detail::fail(ErrorCode::not_primitive, "period word must be primitive");
    }
    if (m == 0) {
      detail::fail(ErrorCode::invalid_argument, "m must be positive");
    }
    Word const um = words::power(u, m);
    bool       ok = true;
    words::for_each_word(letters, 0, bound, [&](Word const& x) {
      if (!ok) {
        return;
      }
      bool const x_in = words::in_plus(x, u, true);
      words::for_each_word(letters, 0, bound, [&](Word const& y) {
        if (!ok) {
          return;
        }
        Word const xy = words::concat(words::concat(x, um), y);
        bool const lhs = words::in_plus(xy, u);
        bool const rhs = x_in && words::in_plus(y, u, true);
        ok             = lhs == rhs;
      });
    });
    return ok;
  }

}  // namespace sofic
