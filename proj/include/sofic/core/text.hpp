#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sofic/core/error.hpp"

namespace sofic {

  namespace detail {
    //! Non-blank lines with '#' comments stripped, paired with line numbers.
    inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
      std::vector<std::pair<std::size_t, std::string>> out;
      std::string                                      line;
      std::size_t                                      number = 0;
      while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) {
          line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
          out.emplace_back(number, line);
        }
      }
      return out;
    }

    [[noreturn]] inline void parse_fail(std::size_t line, std::string const& what) {
      fail(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
    }

    inline std::uint64_t parse_index(std::string const& token, std::size_t line) {
      if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
        parse_fail(line, "expected a non-negative integer, got '" + token + "'");
      }
      return std::stoull(token);
    }

    inline std::vector<std::string> tokens(std::string const& line) {
      std::istringstream       ss(line);
      std::vector<std::string> out;
      std::string              t;
      while (ss >> t) {
        out.push_back(t);
      }
      return out;
    }
  }  // namespace detail

}  // namespace sofic
