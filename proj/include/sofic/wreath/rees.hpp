#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "sofic/finsemi/green.hpp"
#include "sofic/finsemi/row_monomial.hpp"
#include "sofic/finsemi/subgroup.hpp"
#include "sofic/wreath/representation.hpp"

namespace sofic {

  //! An element (a, g, b) of a Rees matrix semigroup M^0(G, A, B, C).
  struct ReesTriple {
    std::uint32_t a;
    Element       g;
    std::uint32_t b;

    bool operator==(ReesTriple const&) const = default;
  };

  //! Rees coordinates of J^0 for a regular J-class J: A indexes the
  //! R-classes and B the L-classes of J, with a0 = b0 = 0 the classes of
  //! the chosen idempotent e. Every element of J is q_a g r_b for unique
  //! g in G = H_e, where q_a is in L_e and R_a, and r_b in R_e and L_b.
  //! The sandwich matrix is C[b][a] = r_b q_a (zero when outside J); the
  //! representatives are normalised so that every non-zero entry in row b0
  //! and column a0 of C is the identity.
  struct ReesCoordinates {
    static constexpr Element zero = RowMonomialMatrix::none;

    ClassId              j_class = 0;
    Element              e       = 0;
    MaximalSubgroup      group;
    std::vector<ClassId> a_classes;  // R-class ids
    std::vector<ClassId> b_classes;  // L-class ids
    std::vector<Element> q;          // per a
    std::vector<Element> r;          // per b
    std::vector<Element> sandwich;   // C[b * |A| + a], group index or zero

    [[nodiscard]] std::size_t a_size() const {
      return a_classes.size();
    }

    [[nodiscard]] std::size_t b_size() const {
      return b_classes.size();
    }

    [[nodiscard]] Element c(std::uint32_t b, std::uint32_t a) const {
      return sandwich[b * a_size() + a];
    }

    //! Product in M^0(G, A, B, C); nullopt is zero.
    [[nodiscard]] std::optional<ReesTriple> multiply(ReesTriple const& x, ReesTriple const& y) const {
      Element m = c(x.b, y.a);
      if (m == zero) {
        return std::nullopt;
      }
      auto const& gp = group.group;
      return ReesTriple{x.a, gp(gp(x.g, m), y.g), y.b};
    }

    std::unordered_map<Element, ReesTriple> coords;  // element of J -> triple
    std::vector<Element>                    elements;  // (a, g, b) -> element

    [[nodiscard]] ReesTriple coordinatize(Element s) const {
      auto it = coords.find(s);
      if (it == coords.end()) {
        detail::fail(ErrorCode::invalid_argument, std::to_string(s) + " is not in J");
      }
      return it->second;
    }

    [[nodiscard]] Element decoordinatize(ReesTriple const& t) const {
      return elements.at((t.a * group.group.size() + t.g) * b_size() + t.b);
    }
  };

  inline ReesCoordinates rees_coordinates(FiniteSemigroup const& s,
                                          GreenStructure const&  g,
                                          ClassId                j,
                                          std::optional<Element> idempotent = std::nullopt) {
    detail::require_regular(g, j);
    ReesCoordinates rc;
    rc.j_class = j;
    rc.e       = idempotent.value_or(detail::least_idempotent(g, j));
    if (g.j_class[rc.e] != j || !s.is_idempotent(rc.e)) {
      detail::fail(ErrorCode::not_idempotent, "chosen element is not an idempotent of J");
    }
    Element const e = rc.e;
    rc.group        = maximal_subgroup(s, g, e);
    auto const& gp  = rc.group.group;

    auto ordered = [&](std::vector<ClassId> all, ClassId first) {
      std::vector<ClassId> out{first};
      for (auto c : all) {
        if (c != first) {
          out.push_back(c);
        }
      }
      return out;
    };
    rc.a_classes = ordered(g.r_classes_in(j), g.r_class[e]);
    rc.b_classes = ordered(g.l_classes_in(j), g.l_class[e]);
    auto in_h    = [&](Element x) { return g.h_class[x] == g.h_class[e]; };

    for (auto a : rc.a_classes) {
      // least element of L_e cap R_a, then normalised so that e q_a = e
      Element qa = s.size();
      for (auto x : g.r_elements(a)) {
        if (g.l_class[x] == g.l_class[e]) {
          qa = x;
          break;
        }
      }
      Element h = s(e, qa);
      if (in_h(h)) {
        qa = s(qa, rc.group.elements[gp.inverse(rc.group.to_group(h))]);
      }
      rc.q.push_back(qa);
    }
    for (auto b : rc.b_classes) {
      Element rb = s.size();
      for (auto x : g.l_elements(b)) {
        if (g.r_class[x] == g.r_class[e]) {
          rb = x;
          break;
        }
      }
      Element h = s(rb, e);
      if (in_h(h)) {
        rb = s(rc.group.elements[gp.inverse(rc.group.to_group(h))], rb);
      }
      rc.r.push_back(rb);
    }
    rc.sandwich.resize(rc.a_size() * rc.b_size());
    for (std::uint32_t b = 0; b < rc.b_size(); ++b) {
      for (std::uint32_t a = 0; a < rc.a_size(); ++a) {
        Element p                          = s(rc.r[b], rc.q[a]);
        rc.sandwich[b * rc.a_size() + a] = in_h(p) ? rc.group.to_group(p) : ReesCoordinates::zero;
      }
    }

    std::size_t const n = gp.size();
    rc.elements.assign(rc.a_size() * n * rc.b_size(), s.size());
    for (std::uint32_t a = 0; a < rc.a_size(); ++a) {
      for (Element x = 0; x < n; ++x) {
        for (std::uint32_t b = 0; b < rc.b_size(); ++b) {
          Element y = s(s(rc.q[a], rc.group.elements[x]), rc.r[b]);
          if (g.r_class[y] != rc.a_classes[a] || g.l_class[y] != rc.b_classes[b]) {
            detail::fail(ErrorCode::check_failed, "q_a g r_b left its H-class");
          }
          if (rc.coords.count(y) != 0) {
            detail::fail(ErrorCode::check_failed, "Rees coordinates are not unique");
          }
          rc.coords[y]                             = {a, x, b};
          rc.elements[(a * n + x) * rc.b_size() + b] = y;
        }
      }
    }
    if (rc.coords.size() != g.j_elements(j).size()) {
      detail::fail(ErrorCode::check_failed, "Rees coordinates do not cover J");
    }
    for (std::uint32_t a = 0; a < rc.a_size(); ++a) {
      auto c0 = rc.c(0, a);
      if (c0 != ReesCoordinates::zero && c0 != 0) {
        detail::fail(ErrorCode::check_failed, "row b0 of C is not normalised");
      }
    }
    for (std::uint32_t b = 0; b < rc.b_size(); ++b) {
      auto c0 = rc.c(b, 0);
      if (c0 != ReesCoordinates::zero && c0 != 0) {
        detail::fail(ErrorCode::check_failed, "column a0 of C is not normalised");
      }
    }
    return rc;
  }

  //! Exhaustive check that coordinatize is an isomorphism J^0 -> M^0.
  inline void check_rees_isomorphism(FiniteSemigroup const& s,
                                     GreenStructure const&  g,
                                     ReesCoordinates const& rc) {
    auto members = g.j_elements(rc.j_class);
    for (auto x : members) {
      if (rc.decoordinatize(rc.coordinatize(x)) != x) {
        detail::fail(ErrorCode::check_failed, "Rees round trip fails at " + std::to_string(x));
      }
      for (auto y : members) {
        Element xy  = s(x, y);
        auto    mxy = rc.multiply(rc.coordinatize(x), rc.coordinatize(y));
        bool    in  = g.j_class[xy] == rc.j_class;
        if (in != mxy.has_value() || (in && rc.coordinatize(xy) != *mxy)) {
          detail::fail(ErrorCode::check_failed,
                       "Rees product differs at (" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
      }
    }
  }

  //! S embedded in G wr (B, RLM_J(S)) through its Schützenberger action on
  //! R_e = { g r_b }: M_s[b][b'] = g whenever r_b s = g r_{b'}.
  struct WreathEmbedding {
    ReesCoordinates                rees;
    std::vector<RowMonomialMatrix> matrices;  // per element of S
    std::unordered_map<RowMonomialMatrix, Element> lookup;

    [[nodiscard]] Group const& group() const {
      return rees.group.group;
    }

    //! The element of S with matrix m, if any.
    [[nodiscard]] std::optional<Element> find(RowMonomialMatrix const& m) const {
      auto it = lookup.find(m);
      if (it == lookup.end()) {
        return std::nullopt;
      }
      return it->second;
    }
  };

  inline WreathEmbedding wreath_embed(FiniteSemigroup const& s,
                                      GreenStructure const&  g,
                                      ClassId                j,
                                      std::optional<Element> idempotent = std::nullopt) {
    WreathEmbedding w;
    w.rees         = rees_coordinates(s, g, j, idempotent);
    auto const& rc = w.rees;
    std::size_t const b = rc.b_size();
    for (Element x = 0; x < s.size(); ++x) {
      RowMonomialMatrix m(b);
      for (std::uint32_t i = 0; i < b; ++i) {
        Element y = s(rc.r[i], x);
        if (g.j_class[y] == j) {
          auto t = rc.coordinatize(y);
          if (t.a != 0) {
            detail::fail(ErrorCode::check_failed, "r_b s left the R-class of e");
          }
          m.set(i, t.b, t.g);
        }
      }
      if (!w.lookup.emplace(m, x).second) {
        detail::fail(ErrorCode::not_faithful,
                     "elements " + std::to_string(w.lookup.at(m)) + " and " + std::to_string(x)
                         + " act identically on J");
      }
      w.matrices.push_back(std::move(m));
    }
    auto const& gp = w.group();
    for (Element k = 0; k < gp.size(); ++k) {
      auto const& mk = w.matrices[rc.group.elements[k]];
      if (mk.at(0, 0) != std::optional<Element>(k)) {
        detail::fail(ErrorCode::check_failed, "1,1-entry of a subgroup element differs");
      }
      for (std::uint32_t i = 0; i < b; ++i) {
        if (!mk.row_is_zero(i) && (mk.col(i) != 0 || mk.val(i) != k)) {
          detail::fail(ErrorCode::check_failed, "subgroup matrix is not supported on column b0");
        }
      }
    }
    return w;
  }

  //! Exhaustive multiplicativity check of an embedding.
  inline void check_embedding(FiniteSemigroup const& s, WreathEmbedding const& w) {
    for (Element x = 0; x < s.size(); ++x) {
      for (Element y = 0; y < s.size(); ++y) {
        if (multiply(w.matrices[x], w.matrices[y], w.group()) != w.matrices[s(x, y)]) {
          detail::fail(ErrorCode::check_failed,
                       "embedding not multiplicative at (" + std::to_string(x) + ","
                           + std::to_string(y) + ")");
        }
      }
    }
  }

}  // namespace sofic
