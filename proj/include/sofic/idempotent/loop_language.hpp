#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "sofic/shift/dfa.hpp"
#include "sofic/shift/presentation.hpp"

namespace sofic {

  //! Labels of the paths v -> v of a presentation. The DFA also accepts the
  //! empty word (the empty path); T itself is the set of non-empty words.
  struct LoopLanguage {
    Dfa         dfa;
    State       vertex = 0;
    std::size_t m      = 0;  // states of the minimal DFA

    [[nodiscard]] bool contains(Word const& w) const {
      return !w.empty() && dfa.accepts(w);
    }
  };

  inline LoopLanguage loop_language(Presentation const& p, State v) {
    if (v >= p.states()) {
      detail::fail(ErrorCode::invalid_state, "state " + std::to_string(v) + " does not exist");
    }
    p.require_irreducible();
    auto d = determinize(
        p.states(), p.alphabet().size(), {v},
        [&](State q, Letter a, auto&& visit) {
          for (auto i : p.out_edges(q)) {
            if (p.edges()[i].label == a) {
              visit(p.edges()[i].dst);
            }
          }
        },
        [&](std::vector<State> const& subset) {
          return std::find(subset.begin(), subset.end(), v) != subset.end();
        });
    LoopLanguage t;
    t.dfa    = minimize(d);
    t.vertex = v;
    t.m      = t.dfa.states;
    return t;
  }

  //! Lazy shortlex enumeration of the non-empty words accepted by a DFA.
  class ShortlexStream {
   public:
    explicit ShortlexStream(Dfa d) : _d(std::move(d)) {
      _exact.push_back(_d.accepting);
      _reachable.assign(_d.states, false);
      std::vector<State> todo{_d.initial};
      _reachable[_d.initial] = true;
      while (!todo.empty()) {
        State q = todo.back();
        todo.pop_back();
        for (Letter a = 0; a < _d.letters; ++a) {
          if (!_reachable[_d.next(q, a)]) {
            _reachable[_d.next(q, a)] = true;
            todo.push_back(_d.next(q, a));
          }
        }
      }
    }

    //! The next word, or nullopt once the language is exhausted.
    std::optional<Word> next() {
      if (_done) {
        return std::nullopt;
      }
      if (!_word.empty() && advance()) {
        return _word;
      }
      // first word of the next non-empty length
      for (std::size_t len = _word.size() + 1;; ++len) {
        extend(len);
        bool any = false;
        for (State q = 0; q < _d.states && !any; ++q) {
          any = _reachable[q] && _exact[len][q];
        }
        if (!any) {
          // no reachable state accepts at this length, hence none at any greater length
          _done = true;
          return std::nullopt;
        }
        if (_exact[len][_d.initial]) {
          _word.clear();
          _path.assign(1, _d.initial);
          fill(len);
          return _word;
        }
      }
    }

   private:
    // _exact[r][q]: some word of length exactly r leads from q to acceptance
    void extend(std::size_t len) {
      while (_exact.size() <= len) {
        auto const&       prev = _exact.back();
        std::vector<bool> cur(_d.states, false);
        for (State q = 0; q < _d.states; ++q) {
          for (Letter a = 0; a < _d.letters && !cur[q]; ++a) {
            cur[q] = prev[_d.next(q, a)];
          }
        }
        _exact.push_back(std::move(cur));
      }
    }

    // completes _word to length len with the least letters
    void fill(std::size_t len) {
      while (_word.size() < len) {
        State       q    = _path.back();
        std::size_t rest = len - _word.size() - 1;
        for (Letter a = 0; a < _d.letters; ++a) {
          if (_exact[rest][_d.next(q, a)]) {
            _word.push_back(a);
            _path.push_back(_d.next(q, a));
            break;
          }
        }
      }
    }

    // next accepted word of the same length
    bool advance() {
      std::size_t const len = _word.size();
      while (!_word.empty()) {
        Letter      last = _word.back();
        std::size_t pos  = _word.size() - 1;
        _word.pop_back();
        _path.pop_back();
        State q = _path.back();
        for (Letter a = last + 1; a < _d.letters; ++a) {
          if (_exact[len - pos - 1][_d.next(q, a)]) {
            _word.push_back(a);
            _path.push_back(_d.next(q, a));
            fill(len);
            return true;
          }
        }
      }
      _word.assign(len, 0);  // keeps the length for the caller
      return false;
    }

    Dfa                            _d;
    std::vector<std::vector<bool>> _exact;
    std::vector<bool>              _reachable;
    Word                           _word;
    std::vector<State>             _path;
    bool                           _done = false;
  };

  inline ShortlexStream shortlex_stream(LoopLanguage const& t) {
    return ShortlexStream(t.dfa);
  }

}  // namespace sofic
