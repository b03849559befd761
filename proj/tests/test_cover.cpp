#include <catch_amalgamated.hpp>

#include "common.hpp"
#include "oracles.hpp"

using namespace sofic;

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

  CoverInput shift_input(std::string const& name, std::optional<std::size_t> extra) {
    auto p = fixture::shift(name);
    return shift_cover_input(syntactic_semigroup(p), Word{0},
                             Word{static_cast<Letter>(p.alphabet().size() - 1)}, extra);
  }

  //! Z2 with a zero, letters 1, g, 0, covered by Z4 -> Z2.
  CoverInput z2_zero_input() {
    CoverInput in;
    in.semigroup = std::make_shared<FiniteSemigroup const>(
        read_semigroup(fixture::slurp("samples/z2_with_zero.sg")));
    in.h = Group::cyclic(4);
    in.alpha = {0, 1, 0, 1};
    in.z     = {0};
    in.y     = {1};
    return in;
  }

  //! Properties that hold for every cover, rechecked from the outside.
  void check_cover(CoverInput const& in, CoverResult const& c) {
    auto const& s = *in.semigroup;
    CHECK(c.size() == c.closure.elements.size());
    CHECK(c.theta.size() == in.h.size());
    CHECK(c.subgroup.size() == in.h.size());
    CHECK(std::set<Element>(c.theta.begin(), c.theta.end()).size() == in.h.size());
    CHECK(c.subgroup.front() == c.eta_e);
    CHECK(c.theta.front() == in.h.identity());
    CHECK(std::find(c.j_prime.begin(), c.j_prime.end(), c.eta_e) != c.j_prime.end());
    CHECK(c.closure.elements[c.zero].is_zero());
    for (auto const& w : oracle::all_words(s.generators().size(), 1, 6)) {
      Element x = c.eta(w);
      CHECK(c.rho[x] == s.evaluate(w));
      CHECK((x == c.zero) == (s.evaluate(w) == *s.zero()));
    }
    for (std::size_t i = 0; i < c.subgroup.size(); ++i) {
      for (std::size_t j = 0; j < c.subgroup.size(); ++j) {
        auto const& els = c.closure.elements;
        auto        xy  = multiply(els[c.subgroup[i]], els[c.subgroup[j]], in.h);
        auto        k   = std::find_if(c.subgroup.begin(), c.subgroup.end(),
                                       [&](Element x) { return els[x] == xy; })
                 - c.subgroup.begin();
        REQUIRE(static_cast<std::size_t>(k) < c.subgroup.size());
        CHECK(c.theta[k] == in.h(c.theta[i], c.theta[j]));
      }
    }
  }

}  // namespace

TEST_CASE("cover of the golden mean syntactic semigroup with H = K", "[cover]") {
  auto in = shift_input("golden", std::nullopt);
  auto c  = build_cover(in);
  check_cover(in, c);
  CHECK(c.size() == 9);
  CHECK(c.shape.p == 2);
  CHECK(c.preimages_complete());
}

TEST_CASE("cover of the full shift with a zero letter, H = Z2", "[cover]") {
  auto in = shift_input("full2", 2);
  auto c  = build_cover(in);
  check_cover(in, c);
  CHECK(c.size() == 22);
  CHECK(c.kernel.size() == 2);
  CHECK(c.preimages_complete());
}

TEST_CASE("cover of Z2 with a zero by Z4", "[cover]") {
  auto in = z2_zero_input();
  auto c  = build_cover(in);
  check_cover(in, c);
  CHECK(c.size() == 40);
  CHECK(c.shape.p == 3);
  CHECK(c.preimages_complete());
}

TEST_CASE("golden mean cover with H = Z2 has fewer block entries than preimages", "[cover][gap]") {
  auto in = shift_input("golden", 2);
  auto c  = build_cover(in);
  check_cover(in, c);
  CHECK(c.size() == 78);
  CHECK(c.shape.p == 5);
  REQUIRE_FALSE(c.preimages_complete());
  auto const& gap = *c.allthere_counterexample;
  CHECK(gap.block_entries < gap.preimages);
  CHECK(c.eta(gap.word) != c.zero);
}

TEST_CASE("cover inputs are validated", "[cover][errors]") {
  auto in  = z2_zero_input();
  auto bad = in;
  bad.alpha = {0, 0, 0, 0};
  CHECK(code_of([&] { (void)build_cover(bad); }) == ErrorCode::hypothesis_violated);
  bad       = in;
  bad.alpha = {0, 1, 1, 0};
  CHECK(code_of([&] { (void)build_cover(bad); }) == ErrorCode::hypothesis_violated);
  bad   = in;
  bad.z = {1};
  CHECK(code_of([&] { (void)build_cover(bad); }) == ErrorCode::hypothesis_violated);
  bad   = in;
  bad.y = {2};
  CHECK(code_of([&] { (void)build_cover(bad); }) == ErrorCode::hypothesis_violated);
  bad     = in;
  bad.cap = 10;
  CHECK(code_of([&] { (void)build_cover(bad); }) == ErrorCode::cap_exceeded);
  CHECK(code_of([] { (void)shift_input("period1", std::nullopt); }) == ErrorCode::hypothesis_violated);
}

TEST_CASE("block matrices survive a text round trip", "[cover][io]") {
  auto in = z2_zero_input();
  auto c  = build_cover(in);
  for (auto const& m : c.closure.elements) {
    BlockShape shape{0, 0};
    auto       back = read_block_matrix(write_block_matrix(m, c.shape, in.h), in.h, &shape);
    CHECK(back == m);
    CHECK(shape.p == c.shape.p);
    CHECK(shape.b == c.shape.b);
  }
  auto text = write_cover(c);
  CHECK(text.rfind("cover p 3", 0) == 0);
  CHECK(text.find("preimages complete") != std::string::npos);
  CHECK(code_of([&] { (void)read_block_matrix("blockmatrix 2 1\nblock 0 5\n0 0\n", in.h); })
        != ErrorCode::check_failed);
}
