#include <catch_amalgamated.hpp>

#include "common.hpp"
#include "oracles.hpp"

using namespace sofic;
using fixture::U;

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

  std::vector<PartialTransformation> maps(std::vector<std::vector<int>> const& spec) {
    std::vector<PartialTransformation> out;
    for (auto const& m : spec) {
      std::vector<std::uint32_t> im;
      for (int x : m) {
        im.push_back(x < 0 ? PartialTransformation::undefined : static_cast<std::uint32_t>(x));
      }
      out.emplace_back(std::move(im));
    }
    return out;
  }

  //! Transitive semigroups of maps of rank at most 1 on 1..3 points.
  std::vector<std::vector<PartialTransformation>> rank_one_families() {
    return {
        maps({{0}}),
        maps({{0, 0}, {1, 1}}),                // constants: a right-zero band
        maps({{1, U}, {U, 0}}),                // Brandt B2
        maps({{0, U}, {1, U}, {U, 0}}),
        maps({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}),
        maps({{1, U, U}, {U, 2, U}, {U, U, 0}}),
        maps({{0, 0, U}, {U, U, 1}, {2, U, U}}),
    };
  }

}  // namespace

TEST_CASE("Rees coordinates are an isomorphism", "[wreath][rees]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    auto s = oracle::random_semigroup(rng, 40);
    auto g = green_structure(s);
    for (ClassId j = 0; j < g.j_count; ++j) {
      if (!g.regular[j]) {
        CHECK(code_of([&] { (void)rees_coordinates(s, g, j); }) == ErrorCode::not_regular);
        continue;
      }
      auto rc = rees_coordinates(s, g, j);
      check_rees_isomorphism(s, g, rc);
      CHECK(rc.a_size() == g.r_classes_in(j).size());
      CHECK(rc.b_size() == g.l_classes_in(j).size());
      for (std::uint32_t a = 0; a < rc.a_size(); ++a) {
        CHECK((rc.c(0, a) == 0 || rc.c(0, a) == ReesCoordinates::zero));
      }
      CHECK(rc.c(0, 0) == 0);
      for (std::uint32_t b = 0; b < rc.b_size(); ++b) {
        CHECK((rc.c(b, 0) == 0 || rc.c(b, 0) == ReesCoordinates::zero));
      }
    }
  }
}

TEST_CASE("faithful actions embed into a wreath product", "[wreath][embed]") {
  std::size_t embedded = 0;
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40; ++i) {
    auto s = oracle::random_semigroup(rng, 40);
    auto g = green_structure(s);
    for (ClassId j = 0; j < g.j_count; ++j) {
      if (!g.regular[j]) {
        continue;
      }
      try {
        auto w = wreath_embed(s, g, j);
        check_embedding(s, w);
        ++embedded;
      } catch (Error const& e) {
        CHECK(e.code() == ErrorCode::not_faithful);
      }
    }
  }
  CHECK(embedded > 0);
  auto z2zero = read_semigroup(fixture::slurp("samples/z2_with_zero.sg"));
  auto g      = green_structure(z2zero);
  for (ClassId j = 0; j < g.j_count; ++j) {
    if (g.j_elements(j).size() == 2) {
      auto w = wreath_embed(z2zero, g, j);
      check_embedding(z2zero, w);
      CHECK(w.group().size() == 2);
    }
  }
}

TEST_CASE("right and left letter mapping representations", "[wreath][rm]") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    auto s = oracle::random_semigroup(rng, 40);
    auto g = green_structure(s);
    for (ClassId j = 0; j < g.j_count; ++j) {
      if (!g.regular[j]) {
        continue;
      }
      auto rm = rm_representation(s, g, j);
      CHECK(rm.points.size() == g.r_elements(g.r_class[rm.points[0]]).size());
      for (Element x = 0; x < s.size(); ++x) {
        CHECK(rm.image_maps[rm.quotient[x]] == rm.action[x]);
      }
      auto rlm = rlm_representation(s, g, j);
      CHECK(rlm.points.size() == g.l_classes_in(j).size());
      for (Element x = 0; x < s.size(); ++x) {
        for (Element y = 0; y < s.size(); ++y) {
          CHECK(rlm.quotient[s(x, y)] == (*rlm.image)(rlm.quotient[x], rlm.quotient[y]));
        }
      }
    }
  }
}

TEST_CASE("G wr (B, T) is simple or 0-simple with maximal subgroup G", "[wreath][structure]") {
  for (auto const* spec : {"Z2", "Z3", "S3"}) {
    auto group = Group::parse(spec);
    for (auto const& t : rank_one_families()) {
      INFO(spec << " on " << t.front().degree() << " points");
      auto r = wreath_product_0simple_check(group, t);
      CHECK(r.simple != r.zero_simple);
      CHECK(r.subgroup.size() == group.size());
      CHECK(r.zero_simple == r.product->zero().has_value());
      std::set<Element> psi(r.psi.begin(), r.psi.end());
      CHECK(psi.size() == group.size());
    }
  }
  auto z2 = Group::cyclic(2);
  CHECK(code_of([&] { (void)wreath_product_0simple_check(z2, maps({{0, 1}})); }) == ErrorCode::rank_too_high);
  CHECK(code_of([&] { (void)wreath_product_0simple_check(z2, maps({{0, 0}})); }) == ErrorCode::not_transitive);
}

TEST_CASE("row-monomial matrices form a semigroup", "[wreath][matrix]") {
  auto            g = Group::symmetric(3);
  std::mt19937_64 rng(14);
  auto            random_matrix = [&] {
    RowMonomialMatrix m(3);
    for (std::size_t i = 0; i < 3; ++i) {
      auto c = rng() % 4;
      if (c < 3) {
        m.set(i, static_cast<std::uint32_t>(c), static_cast<Element>(rng() % 6));
      }
    }
    return m;
  };
  for (int i = 0; i < 500; ++i) {
    auto a = random_matrix(), b = random_matrix(), c = random_matrix();
    CHECK(multiply(multiply(a, b, g), c, g) == multiply(a, multiply(b, c, g), g));
    CHECK(multiply(a, b, g).projection() == a.projection() * b.projection());
  }
}
