#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace sofic::graph {

  //! Iterative Tarjan. `neighbours(v, visit)` must call visit(w) for every
  //! edge v -> w. Returns a component id per vertex; ids are renumbered so
  //! that components appear in order of their least vertex.
  template <typename Neighbours>
  std::vector<std::uint32_t> strongly_connected_components(std::size_t n,
                                                           Neighbours&& neighbours) {
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(n, unset), low(n, 0), comp(n, unset);
    std::vector<bool>          on_stack(n, false);
    std::vector<std::uint32_t> stack;
    std::uint32_t              counter = 0, ncomp = 0;

    // Adjacency is materialised per vertex on first visit.
    struct Frame {
      std::uint32_t              v;
      std::vector<std::uint32_t> out;
      std::size_t                next;
    };
    std::vector<Frame> call;

    for (std::uint32_t root = 0; root < n; ++root) {
      if (index[root] != unset) {
        continue;
      }
      auto push = [&](std::uint32_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        Frame f{v, {}, 0};
        neighbours(v, [&f](std::uint32_t w) { f.out.push_back(w); });
        call.push_back(std::move(f));
      };
      push(root);
      while (!call.empty()) {
        Frame& f = call.back();
        if (f.next < f.out.size()) {
          std::uint32_t w = f.out[f.next++];
          if (index[w] == unset) {
            push(w);
          } else if (on_stack[w]) {
            low[f.v] = std::min(low[f.v], index[w]);
          }
          continue;
        }
        std::uint32_t v = f.v;
        if (low[v] == index[v]) {
          std::uint32_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w]     = ncomp;
          } while (w != v);
          ++ncomp;
        }
        call.pop_back();
        if (!call.empty()) {
          auto& parent = call.back();
          low[parent.v] = std::min(low[parent.v], low[v]);
        }
      }
    }
    // Canonical renumbering.
    std::vector<std::uint32_t> rename(ncomp, unset);
    std::uint32_t              next = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (rename[comp[v]] == unset) {
        rename[comp[v]] = next++;
      }
      comp[v] = rename[comp[v]];
    }
    return comp;
  }

  inline std::size_t count_components(std::vector<std::uint32_t> const& comp) {
    std::uint32_t m = 0;
    for (auto c : comp) {
      m = std::max(m, c + 1);
    }
    return m;
  }

  //! Vertices reachable from `sources` (inclusive).
  template <typename Neighbours>
  std::vector<bool> reachable(std::size_t                        n,
                              std::vector<std::uint32_t> const& sources,
                              Neighbours&&                       neighbours) {
    std::vector<bool>          seen(n, false);
    std::vector<std::uint32_t> todo;
    for (auto s : sources) {
      if (!seen[s]) {
        seen[s] = true;
        todo.push_back(s);
      }
    }
    while (!todo.empty()) {
      auto v = todo.back();
      todo.pop_back();
      neighbours(v, [&](std::uint32_t w) {
        if (!seen[w]) {
          seen[w] = true;
          todo.push_back(w);
        }
      });
    }
    return seen;
  }

}  // namespace sofic::graph
