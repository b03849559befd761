#include <catch_amalgamated.hpp>

#include <cmath>

#include "common.hpp"
#include "oracles.hpp"

using namespace sofic;
using Catch::Approx;

namespace {

  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::check_failed;
  }

  double const golden_ratio_log = std::log2((1 + std::sqrt(5.0)) / 2);

}  // namespace

TEST_CASE("entropy of the corpus", "[entropy]") {
  std::map<std::string, double> expected{
      {"full2", 1.0},   {"full3", std::log2(3.0)}, {"golden", golden_ratio_log}, {"even", golden_ratio_log},
      {"period1", 0.0}, {"period2", 0.0},          {"period3", 0.0},            {"period4", 0.0},
  };
  for (auto const& [name, h] : expected) {
    INFO(name);
    auto e = entropy_estimate(fixture::shift(name), 16, 1e-10);
    CHECK(e.value == Approx(h).margin(1e-8));
    CHECK(e.lower <= e.value + 1e-12);
    CHECK(e.value <= e.upper + 1e-12);
    CHECK(e.certificate.entropy_upper >= e.value - 1e-9);
    CHECK(e.counting == Approx(h).margin(0.05));
  }
  for (auto const& name : {"random3", "random4"}) {
    auto e = entropy_estimate(fixture::shift(name), 16, 1e-10);
    CHECK(e.value > 0);
    CHECK(e.value <= std::log2(static_cast<double>(fixture::shift(name).alphabet().size())) + 1e-12);
  }
}

TEST_CASE("complexity is submultiplicative and bounds the entropy", "[entropy][profile]") {
  for (auto const& name : fixture::corpus()) {
    INFO(name);
    auto p    = fixture::shift(name);
    auto prof = complexity_profile(p, 24);
    for (std::size_t n = 1; n <= 8; ++n) {
      CHECK(prof.q(n) == oracle::path_labels(p, n).size());
    }
    for (std::size_t a = 1; a <= 12; ++a) {
      for (std::size_t b = 1; a + b <= 24; ++b) {
        CHECK(prof.q(a + b) <= prof.q(a) * prof.q(b));
      }
    }
    for (std::size_t n = 1; n <= 24; ++n) {
      CHECK(log2_count(prof.q(n)) / static_cast<double>(n) >= prof.perron_entropy() - 1e-9);
    }
  }
  CHECK(code_of([] { (void)complexity_profile(fixture::shift("golden"), 0); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { (void)complexity_profile(fixture::shift("golden"), 65); }) == ErrorCode::invalid_argument);
}

TEST_CASE("period of the Perron component", "[entropy][period]") {
  CHECK(perron_estimate(factor_dfa(fixture::shift("period3"))).period == 3);
  CHECK(perron_estimate(factor_dfa(fixture::shift("golden"))).period == 1);
  CHECK(perron_estimate(factor_dfa(fixture::shift("period4"))).period == 4);
}

TEST_CASE("proper subshifts have strictly smaller entropy", "[entropy][gap]") {
  std::vector<std::pair<std::string, std::string>> pairs{
      {"full2", "golden"}, {"full2", "even"}, {"golden", "period2"}, {"even", "period1"}, {"full3", "full2"}};
  for (auto const& [big, small] : pairs) {
    INFO(big << " > " << small);
    auto p   = fixture::shift(big);
    auto gap = entropy_gap_check(p, fixture::shift(small));
    CHECK(gap.holds);
    CHECK(gap.h > gap.h_sub);
    CHECK(oracle::is_factor_word(p, gap.witness));
  }
  CHECK(code_of([] { (void)entropy_gap_check(fixture::shift("golden"), fixture::shift("golden")); })
        == ErrorCode::not_a_subshift);
  CHECK(code_of([] { (void)entropy_gap_check(fixture::shift("golden"), fixture::shift("even")); })
        == ErrorCode::not_a_subshift);
  CHECK(word_entropy(Word{0, 1, 0}) == 0.0);
}

TEST_CASE("a tight iteration budget reports the bracket", "[entropy][tolerance]") {
  auto d = factor_dfa(fixture::shift("random4"));
  auto e = perron_estimate(d, 1e-15, 2);
  CHECK(e.lower <= e.upper);
  CHECK_FALSE(e.converged);
}
