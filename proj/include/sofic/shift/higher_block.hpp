#pragma once

#include <map>
#include <string>
#include <vector>

#include "sofic/shift/presentation.hpp"

namespace sofic {

  //! Name of the N-block letter reading w, e.g. "[ab]".
  inline std::string block_name(Alphabet const& alphabet, Word const& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0 && !alphabet.concatenable()) {
        out += ' ';
      }
      out += alphabet.name(w[i]);
    }
    return out + "]";
  }

  //! A presentation of the N-th higher block shift: states are the paths
  //! of N-1 edges, and each path of N edges becomes an edge labelled by
  //! the N-block it reads. Block letters are ordered lexicographically by
  //! the words they read.
  inline Presentation higher_block(Presentation const& p, std::size_t n) {
    if (n == 0) {
      detail::fail(ErrorCode::invalid_argument, "block length must be at least 1");
    }
    p.require_irreducible();
    using Path = std::vector<std::size_t>;  // edge indices
    auto const& edges = p.edges();

    // All paths with n-1 edges; for n = 1 these are the bare states,
    // represented by the empty path anchored at a state.
    std::vector<std::pair<State, Path>> paths;
    for (State q = 0; q < p.states(); ++q) {
      paths.push_back({q, {}});
    }
    for (std::size_t len = 1; len < n; ++len) {
      std::vector<std::pair<State, Path>> longer;
      for (auto const& [start, path] : paths) {
        State end = path.empty() ? start : edges[path.back()].dst;
        for (auto i : p.out_edges(end)) {
          Path ext = path;
          ext.push_back(i);
          longer.push_back({start, std::move(ext)});
        }
      }
      paths = std::move(longer);
    }
    std::map<std::pair<State, Path>, State> index;
    for (auto const& sp : paths) {
      index.emplace(sp, static_cast<State>(index.size()));
    }

    struct Raw {
      State src;
      Word  block;
      State dst;
    };
    std::vector<Raw>      raw;
    std::map<Word, Letter> blocks;
    for (auto const& [start, path] : paths) {
      State end = path.empty() ? start : edges[path.back()].dst;
      for (auto i : p.out_edges(end)) {
        Word block;
        for (auto j : path) {
          block.push_back(edges[j].label);
        }
        block.push_back(edges[i].label);
        std::pair<State, Path> target;
        if (n == 1) {
          target = {edges[i].dst, {}};
        } else {
          Path tail(path.begin() + 1, path.end());
          tail.push_back(i);
          target = {edges[tail.front()].src, std::move(tail)};
        }
        raw.push_back({index.at({start, path}), block, index.at(target)});
        blocks.emplace(block, 0);
      }
    }
    std::vector<std::string> names;
    for (auto& [block, letter] : blocks) {
      letter = static_cast<Letter>(names.size());
      names.push_back(block_name(p.alphabet(), block));
    }
    std::vector<Edge> out;
    for (auto const& r : raw) {
      out.push_back({r.src, blocks.at(r.block), r.dst});
    }
    std::vector<std::string> state_names;
    for (auto const& [start, path] : paths) {
      std::string name = p.state_name(start);
      for (auto j : path) {
        name += "-" + p.alphabet().name(edges[j].label) + "-" + p.state_name(edges[j].dst);
      }
      state_names.push_back(name);
    }
    return Presentation(paths.size(), Alphabet(names), std::move(out), std::move(state_names));
  }

  //! The N-block code beta_N on finite words: the |w|-N+1 blocks of w.
  inline Word block_code(Presentation const& blocks_of, Alphabet const& base, Word const& w, std::size_t n) {
    Word out;
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
      out.push_back(blocks_of.alphabet().index(
          block_name(base, Word(w.begin() + static_cast<std::ptrdiff_t>(i),
                                w.begin() + static_cast<std::ptrdiff_t>(i + n)))));
    }
    return out;
  }

}  // namespace sofic
