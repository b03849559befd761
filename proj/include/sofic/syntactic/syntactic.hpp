#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "sofic/finsemi/finite_semigroup.hpp"
#include "sofic/finsemi/partial_transformation.hpp"
#include "sofic/shift/dfa.hpp"
#include "sofic/shift/factor.hpp"
#include "sofic/shift/presentation.hpp"

namespace sofic {

  //! The transition semigroup of a complete DFA, generated by the letter
  //! actions in letter order, together with the actions themselves.
  struct TransitionSemigroup {
    std::shared_ptr<FiniteSemigroup const> semigroup;
    std::vector<PartialTransformation>     actions;  // element -> map on DFA states
  };

  inline PartialTransformation letter_action(Dfa const& d, Letter a) {
    std::vector<std::uint32_t> im(d.states);
    for (State q = 0; q < d.states; ++q) {
      im[q] = d.next(q, a);
    }
    return PartialTransformation(std::move(im));
  }

  inline TransitionSemigroup transition_semigroup(Dfa const& d, std::size_t cap = 1'000'000) {
    std::vector<PartialTransformation> gens;
    for (Letter a = 0; a < d.letters; ++a) {
      gens.push_back(letter_action(d, a));
    }
    auto e = enumerate_semigroup(gens, cap);
    TransitionSemigroup out;
    out.semigroup = std::make_shared<FiniteSemigroup const>(FiniteSemigroup::from_enumeration(e));
    out.actions   = std::move(e.elements);
    return out;
  }

  //! Syntactic semigroup S_X of the factor language of an irreducible
  //! sofic shift, with the syntactic morphism on letters.
  struct SyntacticData {
    std::shared_ptr<FiniteSemigroup const> semigroup;
    std::vector<Element>                   letter_map;
    std::optional<Element>                 zero;  // set iff the shift is proper
    Presentation                           source;
    Dfa                                    dfa;      // minimal factor automaton
    std::vector<PartialTransformation>     actions;  // element -> map on dfa states

    [[nodiscard]] Element evaluate(Word const& w) const {
      return semigroup->evaluate(w);
    }

    //! w in L(X) iff lambda(w) is not the zero.
    [[nodiscard]] bool in_language(Element s) const {
      return !zero || s != *zero;
    }

    [[nodiscard]] Alphabet const& alphabet() const {
      return source.alphabet();
    }
  };

  inline SyntacticData syntactic_semigroup(Presentation const& p, std::size_t cap = 1'000'000) {
    SyntacticData out;
    out.source = p;
    out.dfa    = factor_dfa(p);
    auto t     = transition_semigroup(out.dfa, cap);
    out.semigroup  = t.semigroup;
    out.actions    = std::move(t.actions);
    out.letter_map = out.semigroup->generators();
    if (auto sink = out.dfa.sink()) {
      auto z = PartialTransformation::constant(out.dfa.states, *sink);
      for (Element x = 0; x < out.actions.size(); ++x) {
        if (out.actions[x] == z) {
          out.zero = x;
        }
      }
      if (!out.zero || out.semigroup->zero() != out.zero) {
        detail::fail(ErrorCode::check_failed, "sink map is not the zero of S_X");
      }
    }
    return out;
  }

  //! A context (x, y) with x s y in L and x t y not in L, or vice versa.
  struct SeparatingContext {
    Word x;
    Word y;
  };

  namespace detail {
    //! Shortest access word for every DFA state.
    inline std::vector<Word> access_words(Dfa const& d) {
      std::vector<std::optional<Word>> w(d.states);
      std::vector<State>               queue{d.initial};
      w[d.initial] = Word{};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Letter a = 0; a < d.letters; ++a) {
          State r = d.next(queue[i], a);
          if (!w[r]) {
            w[r] = words::concat(*w[queue[i]], Word{a});
            queue.push_back(r);
          }
        }
      }
      std::vector<Word> out;
      for (auto& x : w) {
        out.push_back(x.value_or(Word{}));
      }
      return out;
    }

    //! Shortest word accepted from exactly one of p, q (p != q, d minimal).
    inline Word distinguishing_word(Dfa const& d, State p, State q) {
      Dfa a = d, b = d;
      a.initial = p;
      b.initial = q;
      if (auto w = inclusion_counterexample(a, b)) {
        return *w;
      }
      if (auto w = inclusion_counterexample(b, a)) {
        return *w;
      }
      fail(ErrorCode::check_failed, "states are equivalent; automaton not minimal");
    }
  }  // namespace detail

  //! Contexts separating every pair s < t of distinct elements of S_X,
  //! each verified on the language; row-major over pairs (s, t), s < t.
  inline std::vector<SeparatingContext> separating_contexts(SyntacticData const& d) {
    auto const&                    s      = *d.semigroup;
    auto                           access = detail::access_words(d.dfa);
    std::vector<SeparatingContext> out;
    for (Element x = 0; x < s.size(); ++x) {
      for (Element y = x + 1; y < s.size(); ++y) {
        auto const& fx = d.actions[x];
        auto const& fy = d.actions[y];
        State       q  = 0;
        while (fx[q] == fy[q]) {
          ++q;
        }
        SeparatingContext c{access[q], detail::distinguishing_word(d.dfa, fx[q], fy[q])};
        Word              wx = words::concat(words::concat(c.x, s.witness(x)), c.y);
        Word              wy = words::concat(words::concat(c.x, s.witness(y)), c.y);
        if (d.dfa.accepts(wx) == d.dfa.accepts(wy)) {
          detail::fail(ErrorCode::check_failed, "context does not separate");
        }
        out.push_back(std::move(c));
      }
    }
    return out;
  }

}  // namespace sofic
