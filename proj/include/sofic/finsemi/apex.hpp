#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "sofic/finsemi/green.hpp"
#include "sofic/finsemi/morphism.hpp"

namespace sofic {

  namespace detail {
    inline std::string pair_string(Element a, Element b) {
      return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }

    inline void need_order(GreenStructure const& g) {
      if (!g.has_order()) {
        fail(ErrorCode::invalid_argument, "Green structure lacks the J-order");
      }
    }
  }  // namespace detail

  //! Elements of S^1 t S^1 that lie in S, i.e. all y with y <=_J t.
  inline std::vector<bool> ideal_of(FiniteSemigroup const& s, GreenStructure const& g, Element t) {
    detail::need_order(g);
    std::vector<bool> out(s.size());
    for (Element y = 0; y < s.size(); ++y) {
      out[y] = g.leq(g.j_class[y], g.j_class[t]);
    }
    return out;
  }

  //! The set of all factors of elements of `a` (everything J-above some member).
  inline std::vector<bool> factors_of(FiniteSemigroup const& s,
                                      GreenStructure const&  g,
                                      std::vector<bool> const& a) {
    detail::need_order(g);
    std::vector<bool> out(s.size(), false);
    for (Element x = 0; x < s.size(); ++x) {
      if (!a[x]) {
        continue;
      }
      for (Element y = 0; y < s.size(); ++y) {
        if (g.leq(g.j_class[x], g.j_class[y])) {
          out[y] = true;
        }
      }
    }
    return out;
  }

  //! Throws NotFactorial with a pair (a, y): a in A, y a factor of a, y not in A.
  inline void check_factorial(FiniteSemigroup const&   s,
                              GreenStructure const&    g,
                              std::vector<bool> const& a) {
    auto f = factors_of(s, g, a);
    for (Element y = 0; y < s.size(); ++y) {
      if (f[y] && !a[y]) {
        for (Element x = 0; x < s.size(); ++x) {
          if (a[x] && g.leq(g.j_class[x], g.j_class[y])) {
            detail::fail(ErrorCode::not_factorial, detail::pair_string(x, y));
          }
        }
      }
    }
  }

  //! Throws NotIrreducible with a pair (u, v) for which no w in S^1 has uwv in A.
  inline void check_irreducible(FiniteSemigroup const&   s,
                                std::vector<bool> const& a) {
    std::size_t const n = s.size();
    for (Element u = 0; u < n; ++u) {
      if (!a[u]) {
        continue;
      }
      // u S^1 by closure under the generators.
      std::vector<bool>    in(n, false);
      std::vector<Element> orbit{u};
      in[u] = true;
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (auto gen : s.generators()) {
          auto y = s(orbit[i], gen);
          if (!in[y]) {
            in[y] = true;
            orbit.push_back(y);
          }
        }
      }
      for (Element v = 0; v < n; ++v) {
        if (!a[v]) {
          continue;
        }
        bool found = false;
        for (auto t : orbit) {
          if (a[s(t, v)]) {
            found = true;
            break;
          }
        }
        if (!found) {
          detail::fail(ErrorCode::not_irreducible, detail::pair_string(u, v));
        }
      }
    }
  }

  //! The unique minimal J-class contained in a non-empty factorial
  //! irreducible set A. Verifies the hypotheses and that the result is
  //! regular with set of factors equal to A.
  inline ClassId apex(FiniteSemigroup const& s, GreenStructure const& g, std::vector<bool> const& a) {
    detail::need_order(g);
    if (a.size() != s.size()) {
      detail::fail(ErrorCode::dimension_mismatch, "subset mask has wrong length");
    }
    if (std::find(a.begin(), a.end(), true) == a.end()) {
      detail::fail(ErrorCode::invalid_argument, "A is empty");
    }
    check_factorial(s, g, a);
    check_irreducible(s, a);
    std::vector<bool> mask(g.j_count, false);
    for (Element x = 0; x < s.size(); ++x) {
      if (a[x]) {
        mask[g.j_class[x]] = true;
      }
    }
    auto mins = g.minimal_classes(mask);
    if (mins.size() != 1) {
      detail::fail(ErrorCode::check_failed,
                   std::to_string(mins.size()) + " minimal J-classes in A");
    }
    ClassId j = mins[0];
    if (!g.regular[j]) {
      detail::fail(ErrorCode::check_failed, "apex is not regular");
    }
    std::vector<bool> jm(s.size(), false);
    for (auto x : g.j_elements(j)) {
      jm[x] = true;
    }
    auto top = factors_of(s, g, jm);
    if (top != a) {
      detail::fail(ErrorCode::check_failed, "factors of the apex differ from A");
    }
    return j;
  }

  inline ClassId apex(FiniteSemigroup const& s, std::vector<bool> const& a) {
    return apex(s, green_structure(s), a);
  }

  //! Result of lifting a regular J-class along a surjective morphism.
  struct LiftedClass {
    ClassId source_class;
    ClassId target_class;
  };

  //! The unique minimal J-class J' of the source with phi(J') inside J, for
  //! J a regular J-class of the target. Asserts: J' regular, phi(J') = J,
  //! phi(E(J')) = E(J), and each maximal subgroup of J' maps onto a maximal
  //! subgroup of J.
  inline ClassId lift_jclass(SemigroupMorphism const& phi,
                             GreenStructure const&    gs,
                             GreenStructure const&    gt,
                             ClassId                  j) {
    detail::need_order(gs);
    auto const& s = phi.source();
    if (!phi.is_surjective()) {
      detail::fail(ErrorCode::not_surjective, "morphism is not onto");
    }
    if (j >= gt.j_count || !gt.regular[j]) {
      detail::fail(ErrorCode::not_regular, "J-class " + std::to_string(j));
    }
    std::vector<bool> mask(gs.j_count, false);
    for (Element x = 0; x < s.size(); ++x) {
      if (gt.j_class[phi(x)] == j) {
        mask[gs.j_class[x]] = true;
      }
    }
    auto mins = gs.minimal_classes(mask);
    if (mins.size() != 1) {
      detail::fail(ErrorCode::check_failed,
                   std::to_string(mins.size()) + " minimal J-classes above J");
    }
    ClassId lifted = mins[0];
    auto    members = gs.j_elements(lifted);

    if (!gs.regular[lifted]) {
      detail::fail(ErrorCode::check_failed, "lifted class is not regular");
    }
    std::set<Element> image, image_idem, target_idem;
    for (auto x : members) {
      image.insert(phi(x));
      if (gs.idempotent[x]) {
        image_idem.insert(phi(x));
      }
    }
    auto jt = gt.j_elements(j);
    for (auto y : jt) {
      if (gt.idempotent[y]) {
        target_idem.insert(y);
      }
    }
    if (image != std::set<Element>(jt.begin(), jt.end())) {
      detail::fail(ErrorCode::check_failed, "image of lifted class is not J");
    }
    if (image_idem != target_idem) {
      detail::fail(ErrorCode::check_failed, "idempotents do not map onto idempotents of J");
    }
    for (auto e : members) {
      if (!gs.idempotent[e]) {
        continue;
      }
      std::set<Element> hs, ht;
      for (auto x : members) {
        if (gs.h_class[x] == gs.h_class[e]) {
          hs.insert(phi(x));
        }
      }
      for (auto y : jt) {
        if (gt.h_class[y] == gt.h_class[phi(e)]) {
          ht.insert(y);
        }
      }
      if (hs != ht) {
        detail::fail(ErrorCode::check_failed,
                     "maximal subgroup at " + std::to_string(e) + " is not mapped onto");
      }
    }
    return lifted;
  }

  inline ClassId lift_jclass(SemigroupMorphism const& phi, ClassId j) {
    return lift_jclass(phi, green_structure(phi.source()), green_structure(phi.target()), j);
  }

}  // namespace sofic
