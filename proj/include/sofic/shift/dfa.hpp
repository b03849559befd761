#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sofic/core/error.hpp"
#include "sofic/core/hash.hpp"
#include "sofic/core/word.hpp"
#include "sofic/shift/presentation.hpp"

namespace sofic {

  using Count = unsigned __int128;

  inline std::string to_string(Count x) {
    if (x == 0) {
      return "0";
    }
    std::string out;
    while (x > 0) {
      out.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
      x /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  //! Complete deterministic automaton; delta[q * letters + a].
  struct Dfa {
    std::size_t        states  = 0;
    std::size_t        letters = 0;
    std::vector<State> delta;
    State              initial = 0;
    std::vector<bool>  accepting;

    [[nodiscard]] State next(State q, Letter a) const {
      return delta[q * letters + a];
    }

    [[nodiscard]] State run(State q, Word const& w) const {
      for (auto a : w) {
        q = next(q, a);
      }
      return q;
    }

    [[nodiscard]] bool accepts(Word const& w) const {
      return accepting[run(initial, w)];
    }

    //! States from which some accepting state is reachable.
    [[nodiscard]] std::vector<bool> live() const {
      std::vector<std::vector<State>> pre(states);
      for (State q = 0; q < states; ++q) {
        for (Letter a = 0; a < letters; ++a) {
          pre[next(q, a)].push_back(q);
        }
      }
      std::vector<bool>  out(accepting);
      std::vector<State> todo;
      for (State q = 0; q < states; ++q) {
        if (out[q]) {
          todo.push_back(q);
        }
      }
      while (!todo.empty()) {
        State q = todo.back();
        todo.pop_back();
        for (auto p : pre[q]) {
          if (!out[p]) {
            out[p] = true;
            todo.push_back(p);
          }
        }
      }
      return out;
    }

    //! A non-live state, if there is one (unique in a minimal DFA).
    [[nodiscard]] std::optional<State> sink() const {
      auto l = live();
      for (State q = 0; q < states; ++q) {
        if (!l[q]) {
          return q;
        }
      }
      return std::nullopt;
    }

    bool operator==(Dfa const&) const = default;
  };

  //! Subset construction. `succ(q, a, visit)` calls visit(q') for every
  //! a-successor of q; `accept(subset)` decides acceptance of a subset given
  //! as a sorted state list. Subsets are numbered in BFS order from `start`.
  template <typename Successors, typename Accept>
  Dfa determinize(std::size_t               states,
                  std::size_t               letters,
                  std::vector<State> const& start,
                  Successors&&              succ,
                  Accept&&                  accept,
                  std::size_t               cap = std::numeric_limits<std::size_t>::max()) {
    std::size_t const                 words = (states + 63) / 64;
    using Bits                              = std::vector<std::uint64_t>;
    std::unordered_map<Bits, State, detail::RangeHash> index;
    std::vector<Bits>                                  subsets;
    Dfa                                                d;
    d.letters = letters;

    auto members = [&](Bits const& b) {
      std::vector<State> out;
      for (State q = 0; q < states; ++q) {
        if (b[q / 64] >> (q % 64) & 1U) {
          out.push_back(q);
        }
      }
      return out;
    };
    auto intern = [&](Bits b) {
      auto [it, inserted] = index.try_emplace(b, static_cast<State>(subsets.size()));
      if (inserted) {
        if (subsets.size() >= cap) {
          detail::fail(ErrorCode::cap_exceeded,
                       "subset construction passed " + std::to_string(cap) + " states");
        }
        subsets.push_back(std::move(b));
      }
      return it->second;
    };

    Bits init(words, 0);
    for (auto q : start) {
      init[q / 64] |= std::uint64_t{1} << (q % 64);
    }
    intern(init);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      auto current = members(subsets[i]);
      for (Letter a = 0; a < letters; ++a) {
        Bits next(words, 0);
        for (auto q : current) {
          succ(q, a, [&](State r) { next[r / 64] |= std::uint64_t{1} << (r % 64); });
        }
        d.delta.push_back(intern(std::move(next)));
      }
    }
    d.states = subsets.size();
    d.accepting.resize(d.states);
    for (State q = 0; q < d.states; ++q) {
      d.accepting[q] = accept(members(subsets[q]));
    }
    return d;
  }

  //! Renumbers the states reachable from the initial state in BFS order
  //! (letters in order); unreachable states are dropped.
  inline Dfa canonical_form(Dfa const& d) {
    std::vector<State> number(d.states, std::numeric_limits<State>::max());
    std::vector<State> order{d.initial};
    number[d.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Letter a = 0; a < d.letters; ++a) {
        State r = d.next(order[i], a);
        if (number[r] == std::numeric_limits<State>::max()) {
          number[r] = static_cast<State>(order.size());
          order.push_back(r);
        }
      }
    }
    Dfa out;
    out.states  = order.size();
    out.letters = d.letters;
    out.initial = 0;
    out.accepting.resize(out.states);
    out.delta.resize(out.states * out.letters);
    for (State i = 0; i < out.states; ++i) {
      out.accepting[i] = d.accepting[order[i]];
      for (Letter a = 0; a < d.letters; ++a) {
        out.delta[i * d.letters + a] = number[d.next(order[i], a)];
      }
    }
    return out;
  }

  //! Hopcroft's partition refinement followed by canonical renumbering.
  inline Dfa minimize(Dfa const& input) {
    Dfa const         d = canonical_form(input);
    std::size_t const n = d.states;
    std::size_t const k = d.letters;

    std::vector<std::vector<std::vector<State>>> pre(k, std::vector<std::vector<State>>(n));
    for (State q = 0; q < n; ++q) {
      for (Letter a = 0; a < k; ++a) {
        pre[a][d.next(q, a)].push_back(q);
      }
    }

    std::vector<std::vector<State>> blocks;
    std::vector<std::uint32_t>      block_of(n);
    {
      std::vector<State> acc, rej;
      for (State q = 0; q < n; ++q) {
        (d.accepting[q] ? acc : rej).push_back(q);
      }
      for (auto* b : {&acc, &rej}) {
        if (!b->empty()) {
          for (auto q : *b) {
            block_of[q] = static_cast<std::uint32_t>(blocks.size());
          }
          blocks.push_back(std::move(*b));
        }
      }
    }

    std::vector<std::vector<bool>>                     waiting_flag;
    std::deque<std::pair<std::uint32_t, Letter>>       waiting;
    auto add = [&](std::uint32_t b, Letter a) {
      if (waiting_flag.size() <= b) {
        waiting_flag.resize(b + 1, std::vector<bool>(k, false));
      }
      if (!waiting_flag[b][a]) {
        waiting_flag[b][a] = true;
        waiting.emplace_back(b, a);
      }
    };
    for (std::uint32_t b = 0; b < blocks.size(); ++b) {
      for (Letter a = 0; a < k; ++a) {
        add(b, a);
      }
    }

    std::vector<std::uint32_t> hits(n, 0);
    std::vector<bool>          marked(n, false);
    while (!waiting.empty()) {
      auto [b, a] = waiting.front();
      waiting.pop_front();
      waiting_flag[b][a] = false;

      std::vector<State>         x;
      std::vector<std::uint32_t> touched;
      for (auto q : blocks[b]) {
        for (auto p : pre[a][q]) {
          if (!marked[p]) {
            marked[p] = true;
            x.push_back(p);
            if (hits[block_of[p]]++ == 0) {
              touched.push_back(block_of[p]);
            }
          }
        }
      }
      for (auto y : touched) {
        if (hits[y] < blocks[y].size()) {
          std::vector<State> in, out;
          for (auto q : blocks[y]) {
            (marked[q] ? in : out).push_back(q);
          }
          auto fresh = static_cast<std::uint32_t>(blocks.size());
          blocks[y]  = std::move(in);
          blocks.push_back(std::move(out));
          for (auto q : blocks[fresh]) {
            block_of[q] = fresh;
          }
          for (Letter c = 0; c < k; ++c) {
            if (waiting_flag.size() > y && waiting_flag[y][c]) {
              add(fresh, c);
            } else {
              add(blocks[y].size() <= blocks[fresh].size() ? y : fresh, c);
            }
          }
        }
        hits[y] = 0;
      }
      for (auto p : x) {
        marked[p] = false;
      }
    }

    Dfa q;
    q.states  = blocks.size();
    q.letters = k;
    q.initial = block_of[d.initial];
    q.accepting.resize(q.states);
    q.delta.resize(q.states * k);
    for (std::uint32_t b = 0; b < blocks.size(); ++b) {
      State r        = blocks[b].front();
      q.accepting[b] = d.accepting[r];
      for (Letter a = 0; a < k; ++a) {
        q.delta[b * k + a] = block_of[d.next(r, a)];
      }
    }
    return canonical_form(q);
  }

  //! Number of accepted words of length n; throws Overflow past 2^128.
  inline Count count_accepted(Dfa const& d, std::size_t n) {
    std::vector<Count> cur(d.states, 0), nxt(d.states);
    cur[d.initial] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(nxt.begin(), nxt.end(), 0);
      for (State q = 0; q < d.states; ++q) {
        if (cur[q] == 0) {
          continue;
        }
        for (Letter a = 0; a < d.letters; ++a) {
          Count& t = nxt[d.next(q, a)];
          if (t + cur[q] < t) {
            detail::fail(ErrorCode::overflow, "word count at length " + std::to_string(i + 1));
          }
          t += cur[q];
        }
      }
      std::swap(cur, nxt);
    }
    Count total = 0;
    for (State q = 0; q < d.states; ++q) {
      if (d.accepting[q]) {
        if (total + cur[q] < total) {
          detail::fail(ErrorCode::overflow, "word count at length " + std::to_string(n));
        }
        total += cur[q];
      }
    }
    return total;
  }

  //! Calls f(w) for each accepted word with lo <= |w| <= hi, in shortlex
  //! order within each length. Dead branches are pruned.
  template <typename F>
  void for_each_accepted(Dfa const& d, std::size_t lo, std::size_t hi, F&& f) {
    auto live = d.live();
    Word w;
    auto walk = [&](auto&& self, State q, std::size_t len) -> void {
      if (w.size() == len) {
        if (d.accepting[q]) {
          f(std::as_const(w));
        }
        return;
      }
      for (Letter a = 0; a < d.letters; ++a) {
        State r = d.next(q, a);
        if (live[r]) {
          w.push_back(a);
          self(self, r, len);
          w.pop_back();
        }
      }
    };
    for (std::size_t len = lo; len <= hi; ++len) {
      if (live[d.initial]) {
        walk(walk, d.initial, len);
      }
    }
  }

  //! Shortest (then shortlex-least) word accepted by `a` and rejected by
  //! `b`, if any. Both automata must share the alphabet size.
  inline std::optional<Word> inclusion_counterexample(Dfa const& a, Dfa const& b) {
    if (a.letters != b.letters) {
      detail::fail(ErrorCode::dimension_mismatch, "automata over different alphabets");
    }
    std::size_t const                     nb = b.states;
    std::vector<std::size_t>              parent(a.states * nb, SIZE_MAX);
    std::vector<Letter>                   via(a.states * nb, 0);
    std::vector<std::size_t>              queue;
    std::size_t const                     root = a.initial * nb + b.initial;
    parent[root]                               = root;
    queue.push_back(root);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t pq = queue[i];
      State       qa = static_cast<State>(pq / nb);
      State       qb = static_cast<State>(pq % nb);
      if (a.accepting[qa] && !b.accepting[qb]) {
        Word w;
        for (std::size_t x = pq; x != root; x = parent[x]) {
          w.push_back(via[x]);
        }
        std::reverse(w.begin(), w.end());
        return w;
      }
      for (Letter c = 0; c < a.letters; ++c) {
        std::size_t r = a.next(qa, c) * nb + b.next(qb, c);
        if (parent[r] == SIZE_MAX) {
          parent[r] = pq;
          via[r]    = c;
          queue.push_back(r);
        }
      }
    }
    return std::nullopt;
  }

  inline bool same_language(Dfa const& a, Dfa const& b) {
    return !inclusion_counterexample(a, b) && !inclusion_counterexample(b, a);
  }

}  // namespace sofic
