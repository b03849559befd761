#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sofic/finsemi/apex.hpp"
#include "sofic/finsemi/green.hpp"
#include "sofic/finsemi/morphism.hpp"
#include "sofic/shift/dfa.hpp"
#include "sofic/syntactic/syntactic.hpp"

namespace sofic {

  struct AggmReport {
    bool                   aggm = false;
    bool                   trivial = false;
    //! Generalized group mapping: faithful on both sides of the ideal.
    bool                   ggm = false;
    bool                   subgroup_trivial = false;
    std::optional<ClassId> distinguished;
    std::string            reason;
  };

  namespace detail {
    //! Whether s != t always implies s x != t x (right) or x s != x t
    //! (left) for some x in `ideal`.
    inline bool faithful_on(FiniteSemigroup const& s, std::vector<Element> const& ideal, bool right) {
      std::set<std::vector<Element>>    rows;
      for (Element a = 0; a < s.size(); ++a) {
        std::vector<Element> row;
        row.reserve(ideal.size());
        for (auto x : ideal) {
          row.push_back(right ? s(a, x) : s(x, a));
        }
        if (!rows.insert(std::move(row)).second) {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  //! Decides whether S is an AGGM-semigroup: trivial, or with a regular
  //! minimal (resp. 0-minimal) ideal on which S acts faithfully on both
  //! sides and whose non-zero H-classes are trivial.
  inline AggmReport is_aggm(FiniteSemigroup const& s, GreenStructure const& g) {
    detail::need_order(g);
    AggmReport r;
    if (s.size() == 1) {
      r.aggm = r.trivial = r.ggm = r.subgroup_trivial = true;
      r.distinguished = 0;
      return r;
    }
    auto const zero = s.zero();
    std::vector<bool> mask(g.j_count, true);
    if (zero) {
      mask[g.j_class[*zero]] = false;
    }
    for (auto j : g.minimal_classes(mask)) {
      if (!g.regular[j]) {
        continue;
      }
      auto ideal = g.j_elements(j);
      if (zero) {
        ideal.push_back(*zero);
      }
      if (!detail::faithful_on(s, ideal, true) || !detail::faithful_on(s, ideal, false)) {
        continue;
      }
      r.ggm           = true;
      r.distinguished = j;
      r.subgroup_trivial = true;
      for (auto x : g.j_elements(j)) {
        for (auto y : g.j_elements(j)) {
          if (x != y && g.h_class[x] == g.h_class[y]) {
            r.subgroup_trivial = false;
          }
        }
      }
      r.aggm = r.subgroup_trivial;
      if (!r.aggm) {
        r.reason = "distinguished ideal has a non-trivial subgroup";
      }
      return r;
    }
    r.reason = "no regular (0-)minimal ideal acts faithfully on both sides";
    return r;
  }

  inline AggmReport is_aggm(FiniteSemigroup const& s) {
    return is_aggm(s, green_structure(s));
  }

  //! Result of the backward direction: the language pi^{-1}(S \ {0}).
  struct AggmLanguage {
    Dfa                 dfa;      // minimal, over the generator alphabet
    TransitionSemigroup syntactic;
    std::vector<Element> iso;     // S -> syntactic semigroup of the language
  };

  //! Forward direction: the syntactic semigroup of the presented shift is AGGM.
  inline AggmReport aggm_forward_check(Presentation const& p) {
    auto d = syntactic_semigroup(p);
    auto r = is_aggm(*d.semigroup);
    if (!r.aggm) {
      detail::fail(ErrorCode::check_failed, "syntactic semigroup is not AGGM: " + r.reason);
    }
    return r;
  }

  //! Backward direction for S generated by its generator list (one letter
  //! per generator): builds the automaton of pi^{-1}(S \ {0}) over S^1,
  //! checks S \ {0} is factorial and irreducible, and that S is the
  //! syntactic semigroup of the language.
  inline AggmLanguage aggm_backward_check(std::shared_ptr<FiniteSemigroup const> sp) {
    auto const& s = *sp;
    auto        g = green_structure(s);
    auto        r = is_aggm(s, g);
    if (!r.aggm) {
      detail::fail(ErrorCode::not_aggm, r.reason.empty() ? "input" : r.reason);
    }
    std::vector<bool> nonzero(s.size(), true);
    if (s.zero() && s.size() > 1) {
      nonzero[*s.zero()] = false;
    }
    check_factorial(s, g, nonzero);
    check_irreducible(s, nonzero);

    // States 0..n-1 are elements, n is the adjoined identity. The empty
    // word is accepted, matching factor_dfa.
    std::size_t const n = s.size();
    std::size_t const k = s.generators().size();
    Dfa               d;
    d.states  = n + 1;
    d.letters = k;
    d.initial = static_cast<State>(n);
    d.delta.resize((n + 1) * k);
    d.accepting.assign(n + 1, false);
    for (Element x = 0; x <= n; ++x) {
      for (Letter a = 0; a < k; ++a) {
        d.delta[x * k + a] = x == n ? s.generators()[a] : s(x, s.generators()[a]);
      }
      d.accepting[x] = x == n || nonzero[x];
    }
    AggmLanguage out;
    out.dfa       = minimize(d);
    out.syntactic = transition_semigroup(out.dfa);
    auto phi      = SemigroupMorphism::from_generator_images(
        sp, out.syntactic.semigroup, out.syntactic.semigroup->generators());
    if (!phi.is_surjective() || out.syntactic.semigroup->size() != n) {
      detail::fail(ErrorCode::check_failed,
                   "S is not the syntactic semigroup of its language (sizes "
                       + std::to_string(n) + " vs "
                       + std::to_string(out.syntactic.semigroup->size()) + ")");
    }
    out.iso = phi.map();
    return out;
  }

}  // namespace sofic
