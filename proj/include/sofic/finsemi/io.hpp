#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sofic/core/text.hpp"
#include "sofic/finsemi/finite_semigroup.hpp"

namespace sofic {

  //! Reads the textual semigroup format:
  //!   semigroup n k
  //!   n rows of n entries
  //!   generators g_1 ... g_k
  //!   [zero z] [identity i]
  inline FiniteSemigroup read_semigroup(std::istream& in) {
    auto lines = detail::content_lines(in);
    if (lines.empty()) {
      detail::fail(ErrorCode::parse_error, "empty input");
    }
    auto head = detail::tokens(lines[0].second);
    if (head.size() != 3 || head[0] != "semigroup") {
      detail::parse_fail(lines[0].first, "expected 'semigroup n k'");
    }
    std::size_t const n = detail::parse_index(head[1], lines[0].first);
    std::size_t const k = detail::parse_index(head[2], lines[0].first);
    if (lines.size() < n + 2) {
      detail::fail(ErrorCode::parse_error, "truncated table");
    }
    std::vector<Element> table;
    table.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      auto const& [number, text] = lines[1 + r];
      auto row                   = detail::tokens(text);
      if (row.size() != n) {
        detail::parse_fail(number, "expected " + std::to_string(n) + " entries");
      }
      for (auto const& t : row) {
        table.push_back(static_cast<Element>(detail::parse_index(t, number)));
      }
    }
    std::vector<Element>   gens;
    std::optional<Element> zero, identity;
    bool                   have_gens = false;
    for (std::size_t i = n + 1; i < lines.size(); ++i) {
      auto const& [number, text] = lines[i];
      auto t                     = detail::tokens(text);
      if (t[0] == "generators") {
        for (std::size_t j = 1; j < t.size(); ++j) {
          gens.push_back(static_cast<Element>(detail::parse_index(t[j], number)));
        }
        if (gens.size() != k) {
          detail::parse_fail(number, "expected " + std::to_string(k) + " generators");
        }
        have_gens = true;
      } else if (t[0] == "zero" && t.size() == 2) {
        zero = static_cast<Element>(detail::parse_index(t[1], number));
      } else if (t[0] == "identity" && t.size() == 2) {
        identity = static_cast<Element>(detail::parse_index(t[1], number));
      } else {
        detail::parse_fail(number, "unexpected '" + t[0] + "'");
      }
    }
    if (!have_gens) {
      detail::fail(ErrorCode::parse_error, "missing generators line");
    }
    return FiniteSemigroup(n, std::move(table), std::move(gens), zero, identity);
  }

  inline FiniteSemigroup read_semigroup(std::string const& text) {
    std::istringstream in(text);
    return read_semigroup(in);
  }

  inline std::string write_semigroup(FiniteSemigroup const& s) {
    std::string out = "semigroup " + std::to_string(s.size()) + " "
                      + std::to_string(s.generators().size()) + "\n";
    for (Element x = 0; x < s.size(); ++x) {
      for (Element y = 0; y < s.size(); ++y) {
        out += (y == 0 ? "" : " ") + std::to_string(s(x, y));
      }
      out += '\n';
    }
    out += "generators";
    for (auto g : s.generators()) {
      out += " " + std::to_string(g);
    }
    out += '\n';
    if (s.zero()) {
      out += "zero " + std::to_string(*s.zero()) + "\n";
    }
    if (s.identity()) {
      out += "identity " + std::to_string(*s.identity()) + "\n";
    }
    return out;
  }

}  // namespace sofic
