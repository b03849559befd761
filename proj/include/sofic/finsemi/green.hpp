#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sofic/core/graph.hpp"
#include "sofic/finsemi/finite_semigroup.hpp"

namespace sofic {

  using ClassId = std::uint32_t;

  //! Green's R, L, J and H relations as class ids per element, plus the
  //! partial order on J-classes and the regularity of each J-class.
  //! Class ids are numbered in order of their least element.
  struct GreenStructure {
    std::vector<ClassId> r_class, l_class, j_class, h_class;
    std::size_t          r_count = 0, l_count = 0, j_count = 0, h_count = 0;
    std::vector<bool>    regular;      // per J-class
    std::vector<bool>    idempotent;   // per element
    std::vector<bool>    j_leq;        // j_leq[a * j_count + b]: J_a <= J_b; empty if not computed

    [[nodiscard]] bool has_order() const noexcept {
      return !j_leq.empty();
    }

    [[nodiscard]] bool leq(ClassId a, ClassId b) const {
      return j_leq[a * j_count + b];
    }

    [[nodiscard]] bool less(ClassId a, ClassId b) const {
      return a != b && leq(a, b);
    }

    [[nodiscard]] std::vector<Element> j_elements(ClassId j) const {
      return members(j_class, j);
    }

    [[nodiscard]] std::vector<Element> r_elements(ClassId r) const {
      return members(r_class, r);
    }

    [[nodiscard]] std::vector<Element> l_elements(ClassId l) const {
      return members(l_class, l);
    }

    [[nodiscard]] std::vector<Element> h_elements(ClassId h) const {
      return members(h_class, h);
    }

    //! R-classes (resp. L-classes) contained in J-class j, by least element.
    [[nodiscard]] std::vector<ClassId> r_classes_in(ClassId j) const {
      return classes_in(r_class, j);
    }

    [[nodiscard]] std::vector<ClassId> l_classes_in(ClassId j) const {
      return classes_in(l_class, j);
    }

    //! J-classes with no strictly smaller J-class, among those in `mask`
    //! (all if mask is empty).
    [[nodiscard]] std::vector<ClassId> minimal_classes(std::vector<bool> const& mask = {}) const {
      std::vector<ClassId> out;
      for (ClassId a = 0; a < j_count; ++a) {
        if (!mask.empty() && !mask[a]) {
          continue;
        }
        bool minimal = true;
        for (ClassId b = 0; b < j_count && minimal; ++b) {
          if ((mask.empty() || mask[b]) && less(b, a)) {
            minimal = false;
          }
        }
        if (minimal) {
          out.push_back(a);
        }
      }
      return out;
    }

   private:
    [[nodiscard]] std::vector<Element> members(std::vector<ClassId> const& cls, ClassId c) const {
      std::vector<Element> out;
      for (Element x = 0; x < cls.size(); ++x) {
        if (cls[x] == c) {
          out.push_back(x);
        }
      }
      return out;
    }

    [[nodiscard]] std::vector<ClassId> classes_in(std::vector<ClassId> const& cls, ClassId j) const {
      std::vector<ClassId> out;
      std::vector<bool>    seen;
      for (Element x = 0; x < cls.size(); ++x) {
        if (j_class[x] != j) {
          continue;
        }
        if (seen.size() <= cls[x]) {
          seen.resize(cls[x] + 1, false);
        }
        if (!seen[cls[x]]) {
          seen[cls[x]] = true;
          out.push_back(cls[x]);
        }
      }
      return out;
    }
  };

  //! Green structure from Cayley graphs: `right(i, a)` and `left(i, a)` give
  //! the products with generator a; `idem(i)` tells whether i is idempotent.
  //! The J-order is computed only when `with_order` is set.
  template <typename Right, typename Left, typename Idem>
  GreenStructure green_from_cayley(std::size_t n,
                                   std::size_t k,
                                   Right&&     right,
                                   Left&&      left,
                                   Idem&&      idem,
                                   bool        with_order = true) {
    GreenStructure g;
    g.r_class = graph::strongly_connected_components(n, [&](std::uint32_t v, auto&& visit) {
      for (Letter a = 0; a < k; ++a) {
        visit(right(v, a));
      }
    });
    g.l_class = graph::strongly_connected_components(n, [&](std::uint32_t v, auto&& visit) {
      for (Letter a = 0; a < k; ++a) {
        visit(left(v, a));
      }
    });
    auto both = [&](std::uint32_t v, auto&& visit) {
      for (Letter a = 0; a < k; ++a) {
        visit(right(v, a));
        visit(left(v, a));
      }
    };
    g.j_class = graph::strongly_connected_components(n, both);
    g.r_count = graph::count_components(g.r_class);
    g.l_count = graph::count_components(g.l_class);
    g.j_count = graph::count_components(g.j_class);

    std::map<std::pair<ClassId, ClassId>, ClassId> h_ids;
    g.h_class.resize(n);
    for (Element x = 0; x < n; ++x) {
      auto [it, _] = h_ids.try_emplace({g.r_class[x], g.l_class[x]},
                                       static_cast<ClassId>(h_ids.size()));
      g.h_class[x] = it->second;
    }
    g.h_count = h_ids.size();

    g.idempotent.resize(n);
    g.regular.assign(g.j_count, false);
    for (Element x = 0; x < n; ++x) {
      g.idempotent[x] = idem(x);
      if (g.idempotent[x]) {
        g.regular[g.j_class[x]] = true;
      }
    }

    if (with_order) {
      // Edges between J-classes; a -> b means J_b <= J_a.
      std::size_t const             m = g.j_count;
      std::vector<std::vector<ClassId>> down(m);
      for (Element x = 0; x < n; ++x) {
        both(x, [&](std::uint32_t y) {
          if (g.j_class[y] != g.j_class[x]) {
            down[g.j_class[x]].push_back(g.j_class[y]);
          }
        });
      }
      g.j_leq.assign(m * m, false);
      // Tarjan numbering gives no topological guarantee after renumbering,
      // so propagate with a memoised DFS.
      std::vector<int> state(m, 0);
      std::vector<std::pair<ClassId, std::size_t>> stack;
      for (ClassId s = 0; s < m; ++s) {
        if (state[s] == 2) {
          continue;
        }
        stack.push_back({s, 0});
        state[s] = 1;
        while (!stack.empty()) {
          auto& [v, i] = stack.back();
          if (i < down[v].size()) {
            ClassId w = down[v][i++];
            if (state[w] == 0) {
              state[w] = 1;
              stack.push_back({w, 0});
            }
            continue;
          }
          g.j_leq[v * m + v] = true;
          for (ClassId w : down[v]) {
            for (ClassId u = 0; u < m; ++u) {
              if (g.j_leq[u * m + w]) {
                g.j_leq[u * m + v] = true;
              }
            }
          }
          state[v] = 2;
          stack.pop_back();
        }
      }
    }
    return g;
  }

  inline GreenStructure green_structure(FiniteSemigroup const& s, bool with_order = true) {
    auto const& gens = s.generators();
    return green_from_cayley(
        s.size(),
        gens.size(),
        [&](Element x, Letter a) { return s(x, gens[a]); },
        [&](Element x, Letter a) { return s(gens[a], x); },
        [&](Element x) { return s.is_idempotent(x); },
        with_order);
  }

  //! Egg-box picture: one block per J-class, rows are R-classes, columns
  //! L-classes, each cell lists its H-class.
  inline std::string eggbox(FiniteSemigroup const& s, GreenStructure const& g) {
    std::string out;
    for (ClassId j = 0; j < g.j_count; ++j) {
      out += "J" + std::to_string(j) + (g.regular[j] ? " regular" : " non-regular") + "\n";
      auto rs = g.r_classes_in(j);
      auto ls = g.l_classes_in(j);
      for (auto r : rs) {
        out += "  |";
        for (auto l : ls) {
          std::string cell;
          for (Element x = 0; x < s.size(); ++x) {
            if (g.r_class[x] == r && g.l_class[x] == l) {
              if (!cell.empty()) {
                cell += ',';
              }
              cell += std::to_string(x);
              if (g.idempotent[x]) {
                cell += '*';
              }
            }
          }
          out += ' ' + (cell.empty() ? std::string("-") : cell) + " |";
        }
        out += '\n';
      }
    }
    return out;
  }

}  // namespace sofic
