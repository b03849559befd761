#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "sofic/finsemi/enumerate.hpp"
#include "sofic/finsemi/green.hpp"
#include "sofic/finsemi/morphism.hpp"
#include "sofic/finsemi/partial_transformation.hpp"

namespace sofic {

  //! A right action of S by partial maps on a finite set of points, and the
  //! quotient morphism onto the semigroup of those maps.
  struct ActionRepresentation {
    ClassId                                j_class;
    std::vector<Element>                   points;   // representative element per point
    std::vector<PartialTransformation>     action;   // per element of S
    std::shared_ptr<FiniteSemigroup const> image;
    std::vector<PartialTransformation>     image_maps;  // per element of the image
    std::vector<Element>                   quotient;    // S -> image

    [[nodiscard]] bool injective() const {
      return std::set<Element>(quotient.begin(), quotient.end()).size() == quotient.size();
    }
  };

  namespace detail {
    inline void require_regular(GreenStructure const& g, ClassId j) {
      if (j >= g.j_count) {
        fail(ErrorCode::invalid_argument, "no J-class " + std::to_string(j));
      }
      if (!g.regular[j]) {
        fail(ErrorCode::not_regular, "J-class " + std::to_string(j));
      }
    }

    inline Element least_idempotent(GreenStructure const& g, ClassId j) {
      for (auto x : g.j_elements(j)) {
        if (g.idempotent[x]) {
          return x;
        }
      }
      fail(ErrorCode::not_regular, "J-class " + std::to_string(j));
    }

    //! Fills image, image_maps and quotient from `action`.
    inline void close_action(FiniteSemigroup const& s, ActionRepresentation& r) {
      std::vector<PartialTransformation> gens;
      for (auto g : s.generators()) {
        gens.push_back(r.action[g]);
      }
      auto e = enumerate_semigroup(gens, s.size() + 1);
      r.image = std::make_shared<FiniteSemigroup const>(FiniteSemigroup::from_enumeration(e));
      r.quotient.resize(s.size());
      for (Element x = 0; x < s.size(); ++x) {
        r.quotient[x] = e.evaluate(s.witness(x));
        if (e.elements[r.quotient[x]] != r.action[x]) {
          fail(ErrorCode::check_failed, "action is not a homomorphism");
        }
      }
      r.image_maps = std::move(e.elements);
    }

    //! Right action of S on the elements `row` of an R-class of J:
    //! r . s = rs if rs stays in the class, else undefined.
    inline std::vector<PartialTransformation> action_on_row(FiniteSemigroup const&      s,
                                                            GreenStructure const&       g,
                                                            std::vector<Element> const& row) {
      std::vector<std::uint32_t> index(s.size(), PartialTransformation::undefined);
      for (std::uint32_t i = 0; i < row.size(); ++i) {
        index[row[i]] = i;
      }
      std::vector<PartialTransformation> out;
      for (Element x = 0; x < s.size(); ++x) {
        std::vector<std::uint32_t> im(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) {
          auto y = s(row[i], x);
          im[i]  = g.r_class[y] == g.r_class[row[i]] ? index[y] : PartialTransformation::undefined;
        }
        out.emplace_back(std::move(im));
      }
      return out;
    }
  }  // namespace detail

  //! Right Schützenberger representation of S on a regular J-class, acting
  //! on the R-class of the least idempotent of J. Asserts that it is
  //! injective on each maximal subgroup of J and that the image acts
  //! faithfully on the R-class of its image class.
  inline ActionRepresentation rm_representation(FiniteSemigroup const& s,
                                                GreenStructure const&  g,
                                                ClassId                j) {
    detail::require_regular(g, j);
    ActionRepresentation r;
    r.j_class = j;
    Element e = detail::least_idempotent(g, j);
    r.points  = g.r_elements(g.r_class[e]);
    r.action  = detail::action_on_row(s, g, r.points);
    detail::close_action(s, r);

    for (auto f : g.j_elements(j)) {
      if (!g.idempotent[f]) {
        continue;
      }
      std::set<Element> seen;
      auto              h = g.h_elements(g.h_class[f]);
      for (auto x : h) {
        seen.insert(r.quotient[x]);
      }
      if (seen.size() != h.size()) {
        detail::fail(ErrorCode::check_failed,
                     "representation not injective on the subgroup at " + std::to_string(f));
      }
    }

    auto const& t  = *r.image;
    auto        gt = green_structure(t, false);
    auto        re = r.quotient[e];
    auto        row = gt.r_elements(gt.r_class[re]);
    auto        act = detail::action_on_row(t, gt, row);
    if (std::set<PartialTransformation>(act.begin(), act.end()).size() != t.size()) {
      detail::fail(ErrorCode::check_failed, "image does not act faithfully on its class");
    }
    return r;
  }

  //! Right letter mapping representation: S acts on the L-classes of J by
  //! L_x s = L_{xs} when xs is in J. Point 0 is the L-class of `first`
  //! (default: the least idempotent of J); the others follow by least
  //! element. When J is a minimal non-zero class, elements of J are
  //! asserted to act with rank at most 1.
  inline ActionRepresentation rlm_representation(FiniteSemigroup const& s,
                                                 GreenStructure const&  g,
                                                 ClassId                j,
                                                 std::optional<Element> first = std::nullopt) {
    detail::require_regular(g, j);
    Element f = first.value_or(detail::least_idempotent(g, j));
    if (g.j_class[f] != j) {
      detail::fail(ErrorCode::invalid_argument, "first point is not in the J-class");
    }
    ActionRepresentation r;
    r.j_class = j;
    r.points.push_back(g.l_elements(g.l_class[f]).front());
    for (auto l : g.l_classes_in(j)) {
      if (l != g.l_class[f]) {
        r.points.push_back(g.l_elements(l).front());
      }
    }
    std::vector<std::uint32_t> index(g.l_count, PartialTransformation::undefined);
    for (std::uint32_t i = 0; i < r.points.size(); ++i) {
      index[g.l_class[r.points[i]]] = i;
    }
    for (Element x = 0; x < s.size(); ++x) {
      std::vector<std::uint32_t> im(r.points.size());
      for (std::size_t i = 0; i < r.points.size(); ++i) {
        auto y = s(r.points[i], x);
        im[i]  = g.j_class[y] == j ? index[g.l_class[y]] : PartialTransformation::undefined;
      }
      r.action.emplace_back(std::move(im));
    }
    detail::close_action(s, r);

    if (g.has_order()) {
      std::vector<bool> mask(g.j_count, true);
      if (s.zero()) {
        mask[g.j_class[*s.zero()]] = false;
      }
      auto mins = g.minimal_classes(mask);
      if (mins.size() == 1 && mins[0] == j) {
        for (auto x : g.j_elements(j)) {
          if (r.action[x].rank() > 1) {
            detail::fail(ErrorCode::check_failed,
                         "element " + std::to_string(x) + " acts with rank above 1");
          }
        }
      }
    }
    return r;
  }

}  // namespace sofic
