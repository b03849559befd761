#pragma once

#include <string>
#include <vector>

#include "sofic/finsemi/enumerate.hpp"
#include "sofic/finsemi/green.hpp"
#include "sofic/finsemi/row_monomial.hpp"
#include "sofic/finsemi/subgroup.hpp"

namespace sofic {

  struct WreathStructureReport {
    bool                   simple       = false;  // one J-class
    bool                   zero_simple  = false;  // a zero and one regular non-zero J-class
    std::size_t            size         = 0;
    Element                idempotent   = 0;      // the chosen e, as an element of the product
    std::uint32_t          point        = 0;      // b with image of pi(e) = {b}
    std::vector<Element>   subgroup;              // G_e
    std::vector<Element>   psi;                   // psi(s) = s_bb, parallel to subgroup
    std::shared_ptr<FiniteSemigroup const> product;
    std::vector<RowMonomialMatrix>         matrices;  // element -> matrix
  };

  //! Builds G wr (B, T) for a transitive semigroup T of partial maps of
  //! rank at most 1 (given by generators), classifies it as simple or
  //! 0-simple, and checks that s -> s_bb is an isomorphism G_e -> G for the
  //! least non-zero idempotent e, where {b} is the image of pi(e).
  inline WreathStructureReport wreath_product_0simple_check(Group const&                              g,
                                                            std::vector<PartialTransformation> const& t_gens,
                                                            std::size_t cap = 200'000) {
    auto te = enumerate_semigroup(t_gens, cap);
    auto const& t = te.elements;
    std::size_t const b = t.front().degree();
    for (auto const& f : t) {
      if (f.rank() > 1) {
        detail::fail(ErrorCode::rank_too_high, "a map in T has rank " + std::to_string(f.rank()));
      }
    }
    for (std::uint32_t x = 0; x < b; ++x) {
      for (std::uint32_t y = 0; y < b; ++y) {
        bool found = false;
        for (auto const& f : t) {
          found = found || f[x] == y;
        }
        if (!found) {
          detail::fail(ErrorCode::not_transitive,
                       "no map sends " + std::to_string(x) + " to " + std::to_string(y));
        }
      }
    }

    // All matrices over G^0 projecting into T.
    std::vector<RowMonomialMatrix> all;
    for (auto const& f : t) {
      std::vector<std::uint32_t> rows;
      for (std::uint32_t i = 0; i < b; ++i) {
        if (f.defined_at(i)) {
          rows.push_back(i);
        }
      }
      std::vector<Element> vals(rows.size(), 0);
      while (true) {
        RowMonomialMatrix m(b);
        for (std::size_t i = 0; i < rows.size(); ++i) {
          m.set(rows[i], f[rows[i]], vals[i]);
        }
        all.push_back(std::move(m));
        if (all.size() > cap) {
          detail::fail(ErrorCode::cap_exceeded, "wreath product larger than " + std::to_string(cap));
        }
        std::size_t i = 0;
        while (i < vals.size() && ++vals[i] == g.size()) {
          vals[i++] = 0;
        }
        if (i == vals.size()) {
          break;
        }
      }
    }
    auto e = enumerate_semigroup<RowMonomialMatrix>(std::span<RowMonomialMatrix const>(all),
                                                    RowMonomialProduct{&g}, cap);
    if (e.size() != all.size()) {
      detail::fail(ErrorCode::check_failed, "wreath product is not closed");
    }
    WreathStructureReport r;
    r.product  = std::make_shared<FiniteSemigroup const>(FiniteSemigroup::from_enumeration(e));
    r.matrices = e.elements;
    r.size     = e.size();
    auto const& s  = *r.product;
    auto        gs = green_structure(s);
    auto        z  = s.zero();
    std::size_t nonzero_classes = gs.j_count - (z ? 1 : 0);
    if (nonzero_classes != 1) {
      detail::fail(ErrorCode::check_failed,
                   std::to_string(nonzero_classes) + " non-zero J-classes");
    }
    r.simple      = gs.j_count == 1;
    r.zero_simple = !r.simple;
    bool found    = false;
    for (Element x = 0; x < s.size() && !found; ++x) {
      if (s.is_idempotent(x) && (!z || x != *z)) {
        r.idempotent = x;
        found        = true;
      }
    }
    if (!found || (r.zero_simple && !gs.regular[gs.j_class[r.idempotent]])) {
      detail::fail(ErrorCode::check_failed, "non-zero J-class is not regular");
    }
    auto img = r.matrices[r.idempotent].projection().image_set();
    if (img.size() != 1) {
      detail::fail(ErrorCode::check_failed, "idempotent does not project to rank 1");
    }
    r.point = *img.begin();
    auto sub = maximal_subgroup(s, gs, r.idempotent);
    r.subgroup = sub.elements;
    std::vector<bool> hit(g.size(), false);
    for (auto x : r.subgroup) {
      auto v = r.matrices[x].at(r.point, r.point);
      if (!v || hit[*v]) {
        detail::fail(ErrorCode::check_failed, "psi is not injective");
      }
      hit[*v] = true;
      r.psi.push_back(*v);
    }
    if (r.subgroup.size() != g.size()) {
      detail::fail(ErrorCode::check_failed, "psi is not onto G");
    }
    for (std::size_t i = 0; i < r.subgroup.size(); ++i) {
      for (std::size_t j = 0; j < r.subgroup.size(); ++j) {
        auto xy = sub.to_group(s(r.subgroup[i], r.subgroup[j]));
        if (r.psi[xy] != g(r.psi[i], r.psi[j])) {
          detail::fail(ErrorCode::check_failed, "psi is not a homomorphism");
        }
      }
    }
    return r;
  }

}  // namespace sofic
