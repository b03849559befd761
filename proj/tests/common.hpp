#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sofic/sofic.hpp"

namespace fixture {

  inline std::string slurp(std::string const& relative) {
    std::ifstream in(std::string(SOFIC_SOURCE_DIR) + "/" + relative);
    if (!in) {
      throw std::runtime_error("cannot open " + relative);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  inline sofic::Presentation shift(std::string const& name) {
    return sofic::read_presentation(slurp("data/" + name + ".pres"));
  }

  inline std::vector<std::string> const& corpus() {
    static std::vector<std::string> const names{"full2",   "full3",   "golden",  "even",    "period1",
                                                "period2", "period3", "period4", "random3", "random4"};
    return names;
  }

  //! Semigroup generated by partial maps on a few points; "U" marks undefined.
  inline sofic::FiniteSemigroup from_maps(std::vector<std::vector<int>> const& maps) {
    std::vector<sofic::PartialTransformation> gens;
    for (auto const& m : maps) {
      std::vector<std::uint32_t> im;
      for (int x : m) {
        im.push_back(x < 0 ? sofic::PartialTransformation::undefined : static_cast<std::uint32_t>(x));
      }
      gens.emplace_back(std::move(im));
    }
    return sofic::close_generators(gens, 100'000);
  }

  constexpr int U = -1;

}  // namespace fixture
