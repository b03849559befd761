#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sofic/core/error.hpp"
#include "sofic/core/graph.hpp"
#include "sofic/core/word.hpp"
#include "sofic/core/text.hpp"

namespace sofic {

  using State = std::uint32_t;

  struct Edge {
    State  src;
    Letter label;
    State  dst;

    bool operator==(Edge const&) const = default;
  };

  //! A finite labelled directed graph presenting a sofic shift. Every
  //! letter of the alphabet labels at least one edge.
  class Presentation {
   public:
    Presentation() = default;

    Presentation(std::size_t              states,
                 Alphabet                 alphabet,
                 std::vector<Edge>        edges,
                 std::vector<std::string> state_names = {})
        : _states(states),
          _alphabet(std::move(alphabet)),
          _edges(std::move(edges)),
          _state_names(std::move(state_names)) {
      if (_states == 0 || _edges.empty()) {
        detail::fail(ErrorCode::invalid_argument, "presentation needs states and edges");
      }
      if (!_state_names.empty() && _state_names.size() != _states) {
        detail::fail(ErrorCode::dimension_mismatch, "one name per state expected");
      }
      std::vector<bool> used(_alphabet.size(), false);
      _out.resize(_states);
      for (std::size_t i = 0; i < _edges.size(); ++i) {
        auto const& e = _edges[i];
        if (e.src >= _states || e.dst >= _states || e.label >= _alphabet.size()) {
          detail::fail(ErrorCode::invalid_argument, "edge " + std::to_string(i) + " out of range");
        }
        used[e.label] = true;
        _out[e.src].push_back(i);
      }
      for (Letter a = 0; a < used.size(); ++a) {
        if (!used[a]) {
          detail::fail(ErrorCode::invalid_argument,
                       "letter '" + _alphabet.name(a) + "' labels no edge");
        }
      }
    }

    [[nodiscard]] std::size_t states() const noexcept {
      return _states;
    }

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    [[nodiscard]] std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }

    //! Indices into edges() of the edges leaving q.
    [[nodiscard]] std::vector<std::size_t> const& out_edges(State q) const {
      return _out.at(q);
    }

    [[nodiscard]] std::string state_name(State q) const {
      return _state_names.empty() ? std::to_string(q) : _state_names.at(q);
    }

    //! State with the given name; a plain index is accepted when unnamed.
    [[nodiscard]] std::optional<State> find_state(std::string const& name) const {
      for (State q = 0; q < _states; ++q) {
        if (state_name(q) == name) {
          return q;
        }
      }
      return std::nullopt;
    }

    [[nodiscard]] bool is_strongly_connected() const {
      auto scc = graph::strongly_connected_components(_states, [&](std::uint32_t v, auto&& visit) {
        for (auto i : _out[v]) {
          visit(_edges[i].dst);
        }
      });
      return graph::count_components(scc) == 1;
    }

    void require_irreducible() const {
      if (!is_strongly_connected()) {
        detail::fail(ErrorCode::not_strongly_connected, "presentation graph");
      }
    }

    //! No state has two outgoing edges with the same label.
    [[nodiscard]] bool is_right_resolving() const {
      for (State q = 0; q < _states; ++q) {
        std::vector<bool> seen(_alphabet.size(), false);
        for (auto i : _out[q]) {
          if (seen[_edges[i].label]) {
            return false;
          }
          seen[_edges[i].label] = true;
        }
      }
      return true;
    }

   private:
    std::size_t                           _states = 0;
    Alphabet                              _alphabet;
    std::vector<Edge>                     _edges;
    std::vector<std::string>              _state_names;
    std::vector<std::vector<std::size_t>> _out;
  };

  //! Reads `presentation <#states> <letters...>` followed by
  //! `edge <src> <label> <dst>` lines; '#' starts a comment.
  inline Presentation read_presentation(std::istream& in) {
    auto lines = detail::content_lines(in);
    if (lines.empty()) {
      detail::fail(ErrorCode::parse_error, "empty input");
    }
    auto head = detail::tokens(lines[0].second);
    if (head.size() < 3 || head[0] != "presentation") {
      detail::parse_fail(lines[0].first, "expected 'presentation <#states> <letters...>'");
    }
    std::size_t const n = detail::parse_index(head[1], lines[0].first);
    Alphabet          alphabet(std::vector<std::string>(head.begin() + 2, head.end()));
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto const& [number, text] = lines[i];
      auto t                     = detail::tokens(text);
      if (t.size() != 4 || t[0] != "edge") {
        detail::parse_fail(number, "expected 'edge <src> <label> <dst>'");
      }
      auto label = alphabet.find(t[2]);
      if (!label) {
        detail::parse_fail(number, "unknown label '" + t[2] + "'");
      }
      auto src = detail::parse_index(t[1], number);
      auto dst = detail::parse_index(t[3], number);
      if (src >= n || dst >= n) {
        detail::parse_fail(number, "state out of range");
      }
      edges.push_back({static_cast<State>(src), *label, static_cast<State>(dst)});
    }
    return Presentation(n, std::move(alphabet), std::move(edges));
  }

  inline Presentation read_presentation(std::string const& text) {
    std::istringstream in(text);
    return read_presentation(in);
  }

  inline std::string write_presentation(Presentation const& p) {
    std::string out = "presentation " + std::to_string(p.states());
    for (auto const& n : p.alphabet().names()) {
      out += " " + n;
    }
    out += '\n';
    for (auto const& e : p.edges()) {
      out += "edge " + std::to_string(e.src) + " " + p.alphabet().name(e.label) + " "
             + std::to_string(e.dst) + "\n";
    }
    return out;
  }

  namespace presentations {

    //! One state with a loop for each letter.
    inline Presentation full_shift(Alphabet const& alphabet) {
      std::vector<Edge> edges;
      for (Letter a = 0; a < alphabet.size(); ++a) {
        edges.push_back({0, a, 0});
      }
      return Presentation(1, alphabet, std::move(edges));
    }

    //! A single cycle reading u.
    inline Presentation cycle(Alphabet const& alphabet, Word const& u) {
      if (u.empty()) {
        detail::fail(ErrorCode::invalid_argument, "empty cycle word");
      }
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < u.size(); ++i) {
        edges.push_back({static_cast<State>(i), u[i], static_cast<State>((i + 1) % u.size())});
      }
      return Presentation(u.size(), alphabet, std::move(edges));
    }

    //! Forbids bb: 0 -a-> 0, 0 -b-> 1, 1 -a-> 0.
    inline Presentation golden_mean() {
      return Presentation(2, Alphabet({"a", "b"}), {{0, 0, 0}, {0, 1, 1}, {1, 0, 0}});
    }

    //! Runs of b between a's have even length: 0 -a-> 0, 0 -b-> 1, 1 -b-> 0.
    inline Presentation even_shift() {
      return Presentation(2, Alphabet({"a", "b"}), {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}});
    }

  }  // namespace presentations

}  // namespace sofic
