#pragma once

#include <string>
#include <vector>

#include "sofic/finsemi/apex.hpp"
#include "sofic/finsemi/morphism.hpp"
#include "sofic/shift/factor.hpp"
#include "sofic/syntactic/aggm.hpp"

namespace sofic {

  //! Idempotent of least index in the distinguished J-class.
  inline Element distinguished_idempotent(GreenStructure const& g, ClassId j) {
    for (auto x : g.j_elements(j)) {
      if (g.idempotent[x]) {
        return x;
      }
    }
    detail::fail(ErrorCode::not_regular, "distinguished class has no idempotent");
  }

  //! The Schützenberger graph of the right action of S_X on the R-class of
  //! the least idempotent of the distinguished J-class: vertices are the
  //! elements of that R-class, with an edge r -x-> r lambda(x) whenever the
  //! product stays in the R-class. The full shift gets one vertex with a
  //! loop per letter. The result is checked to be right-resolving,
  //! strongly connected and to present the same factor language.
  inline Presentation fischer_cover(SyntacticData const& d) {
    auto const& s = *d.semigroup;
    auto const& alphabet = d.alphabet();
    if (s.size() == 1) {
      return presentations::full_shift(alphabet);
    }
    auto g = green_structure(s);
    auto r = is_aggm(s, g);
    if (!r.aggm) {
      detail::fail(ErrorCode::not_aggm, r.reason);
    }
    Element const        e   = distinguished_idempotent(g, *r.distinguished);
    std::vector<Element> row = g.r_elements(g.r_class[e]);
    std::vector<State>   index(s.size(), static_cast<State>(-1));
    std::vector<std::string> names;
    for (State i = 0; i < row.size(); ++i) {
      index[row[i]] = i;
      names.push_back(std::to_string(row[i]));
    }
    std::vector<Edge> edges;
    for (State i = 0; i < row.size(); ++i) {
      for (Letter a = 0; a < alphabet.size(); ++a) {
        Element t = s(row[i], d.letter_map[a]);
        if (g.r_class[t] == g.r_class[e]) {
          edges.push_back({i, a, index[t]});
        }
      }
    }
    Presentation cover(row.size(), alphabet, std::move(edges), std::move(names));
    if (!cover.is_right_resolving()) {
      detail::fail(ErrorCode::check_failed, "cover is not right-resolving");
    }
    cover.require_irreducible();
    if (!same_language(factor_dfa(cover), d.dfa)) {
      detail::fail(ErrorCode::check_failed, "cover presents a different language");
    }
    return cover;
  }

  //! Distinguished J-class of S_X (the unique class when S_X is trivial).
  inline ClassId distinguished_class(SyntacticData const& d, GreenStructure const& g) {
    auto r = is_aggm(*d.semigroup, g);
    if (!r.aggm) {
      detail::fail(ErrorCode::not_aggm, r.reason);
    }
    return *r.distinguished;
  }

  //! For psi: S -> S_X compatible with the generators (psi maps the i-th
  //! generator of S to lambda of the i-th letter), the unique minimal
  //! J-class of S mapping into the distinguished class of S_X, with the
  //! conclusions of the lifting lemma asserted.
  inline ClassId image_apex(SemigroupMorphism const& psi, SyntacticData const& d) {
    if (&psi.target() != d.semigroup.get() && psi.target().table() != d.semigroup->table()) {
      detail::fail(ErrorCode::no_compatible_triangle, "target is not S_X");
    }
    auto const& gens = psi.source().generators();
    if (gens.size() != d.letter_map.size()) {
      detail::fail(ErrorCode::no_compatible_triangle, "generator count differs from the alphabet");
    }
    for (Letter a = 0; a < gens.size(); ++a) {
      if (psi(gens[a]) != d.letter_map[a]) {
        detail::fail(ErrorCode::no_compatible_triangle,
                     "letter " + d.alphabet().name(a) + " is not mapped compatibly");
      }
    }
    auto gt = green_structure(*d.semigroup);
    auto gs = green_structure(psi.source());
    return lift_jclass(psi, gs, gt, distinguished_class(d, gt));
  }

}  // namespace sofic
