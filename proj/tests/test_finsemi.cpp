#include <catch_amalgamated.hpp>

#include "common.hpp"
#include "oracles.hpp"

using namespace sofic;

namespace {

  std::vector<FiniteSemigroup> random_family(std::uint64_t seed, std::size_t count) {
    std::mt19937_64              rng(seed);
    std::vector<FiniteSemigroup> out;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(oracle::random_semigroup(rng, 40, 3 + i % 2, 2 + i % 2));
    }
    return out;
  }

  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::check_failed;
  }

}  // namespace

TEST_CASE("Green relations agree with the ideal definitions", "[finsemi][green]") {
  for (auto const& s : random_family(1, 30)) {
    auto g = green_structure(s);
    auto o = oracle::green_by_ideals(s);
    CHECK(oracle::partition_of(g.r_class) == o.r);
    CHECK(oracle::partition_of(g.l_class) == o.l);
    CHECK(oracle::partition_of(g.j_class) == o.j);
    CHECK(oracle::partition_of(g.h_class) == o.h);
    for (Element x = 0; x < s.size(); ++x) {
      for (Element y = 0; y < s.size(); ++y) {
        CHECK(g.leq(g.j_class[x], g.j_class[y]) == oracle::j_below(s, x, y));
      }
    }
  }
}

TEST_CASE("a J-class is regular iff it holds an idempotent", "[finsemi][green]") {
  for (auto const& s : random_family(2, 20)) {
    auto              g = green_structure(s);
    std::vector<bool> has(g.j_count, false);
    for (Element x = 0; x < s.size(); ++x) {
      CHECK(g.idempotent[x] == (s(x, x) == x));
      if (s(x, x) == x) {
        has[g.j_class[x]] = true;
      }
    }
    for (ClassId j = 0; j < g.j_count; ++j) {
      CHECK(g.regular[j] == has[j]);
    }
  }
}

TEST_CASE("index, period and powers match repeated multiplication", "[finsemi][power]") {
  for (auto const& s : random_family(3, 10)) {
    for (Element x = 0; x < s.size(); ++x) {
      auto [i, q] = index_period(s, x);
      CHECK(oracle::naive_power(s, x, i + q) == oracle::naive_power(s, x, i));
      for (std::size_t k = 1; k < i + q; ++k) {
        for (std::size_t l = k + 1; l < i + q; ++l) {
          CHECK(oracle::naive_power(s, x, k) != oracle::naive_power(s, x, l));
        }
      }
      for (std::uint64_t k = 1; k <= 12; ++k) {
        CHECK(power(s, x, k) == oracle::naive_power(s, x, k));
      }
      CHECK(s.is_idempotent(omega_power(s, x)));
    }
  }
}

TEST_CASE("maximal subgroups are H-classes of idempotents", "[finsemi][subgroup]") {
  for (auto const& s : random_family(4, 10)) {
    auto g = green_structure(s, false);
    for (Element e = 0; e < s.size(); ++e) {
      if (!s.is_idempotent(e)) {
        CHECK(code_of([&] { (void)maximal_subgroup(s, g, e); }) == ErrorCode::not_idempotent);
        continue;
      }
      auto m = maximal_subgroup(s, g, e);
      CHECK(m.elements[0] == e);
      CHECK(m.elements.size() == g.h_elements(g.h_class[e]).size());
      CHECK(m.group.size() == m.elements.size());
    }
  }
  auto z6 = as_semigroup(Group::cyclic(6));
  CHECK(maximal_subgroup(z6, 0).group.size() == 6);
}

TEST_CASE("groups", "[finsemi][group]") {
  CHECK(Group::symmetric(3).size() == 6);
  CHECK(Group::parse("Z2xZ3").size() == 6);
  CHECK(Group::parse("1").size() == 1);
  CHECK(code_of([] { (void)Group::parse("Q8"); }) == ErrorCode::parse_error);
  auto s3 = as_semigroup(Group::symmetric(3));
  s3.check_associative();
  auto g = green_structure(s3);
  CHECK(g.j_count == 1);
  CHECK(g.h_count == 1);
}

TEST_CASE("semigroup text format round trip and errors", "[finsemi][io]") {
  for (auto const& s : random_family(5, 10)) {
    auto t = read_semigroup(write_semigroup(s));
    CHECK(t.size() == s.size());
    CHECK(t.table() == s.table());
    CHECK(t.generators() == s.generators());
    CHECK(t.zero() == s.zero());
  }
  auto band = read_semigroup(fixture::slurp("samples/rectangular_band.sg"));
  CHECK(band.size() == 4);
  CHECK(green_structure(band).j_count == 1);
  CHECK(code_of([] { (void)read_semigroup("semigroup 2 1\n0 0\n0\ngenerators 0\n"); })
        == ErrorCode::parse_error);
  CHECK(code_of([] { (void)read_semigroup("semigroup 2 1\n1 0\n0 0\ngenerators 0\n"); })
        == ErrorCode::not_associative);
  CHECK(code_of([] { (void)read_semigroup("semigroup 2 1\n0 1\n1 1\ngenerators 0\n"); })
        == ErrorCode::not_generated);
}

TEST_CASE("morphisms", "[finsemi][morphism]") {
  auto z4 = std::make_shared<FiniteSemigroup const>(as_semigroup(Group::cyclic(4)).with_generators({1}));
  auto z2 = std::make_shared<FiniteSemigroup const>(as_semigroup(Group::cyclic(2)).with_generators({1}));
  auto f  = SemigroupMorphism::from_generator_images(z4, z2, {1});
  CHECK(f.is_surjective());
  for (Element x = 0; x < 4; ++x) {
    CHECK(f(x) == x % 2);
  }
  CHECK(code_of([&] { SemigroupMorphism(z4, z2, {0, 1, 1, 0}); }) == ErrorCode::not_homomorphism);
  CHECK(code_of([&] { SemigroupMorphism(z4, z2, {0, 1}); }) == ErrorCode::dimension_mismatch);
}

TEST_CASE("lifting regular J-classes along surjections", "[finsemi][lift]") {
  std::mt19937_64 rng(6);
  std::size_t     lifted = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    auto a = oracle::random_semigroup(rng, 20);
    auto b = oracle::random_semigroup(rng, 20);
    std::pair<FiniteSemigroup, std::vector<Element>> prod;
    try {
      prod = oracle::product_of(a, b, 400);
    } catch (Error const&) {
      continue;
    }
    auto src = std::make_shared<FiniteSemigroup const>(std::move(prod.first));
    auto tgt = std::make_shared<FiniteSemigroup const>(a);
    SemigroupMorphism phi(src, tgt, prod.second);
    auto gs = green_structure(*src);
    auto gt = green_structure(*tgt);
    for (ClassId j = 0; j < gt.j_count; ++j) {
      if (!gt.regular[j]) {
        CHECK(code_of([&] { (void)lift_jclass(phi, gs, gt, j); }) == ErrorCode::not_regular);
        continue;
      }
      ClassId l = lift_jclass(phi, gs, gt, j);
      // minimality against the oracle order: no class strictly below maps into J
      for (Element x = 0; x < src->size(); ++x) {
        if (gs.j_class[x] != l && oracle::j_below(*src, x, gs.j_elements(l)[0])) {
          CHECK(gt.j_class[phi(x)] != j);
        }
      }
      ++lifted;
    }
  }
  CHECK(lifted > 0);
}

TEST_CASE("apex of a factorial irreducible set", "[finsemi][apex]") {
  auto brandt = read_semigroup(fixture::slurp("samples/brandt2.sg"));
  auto g      = green_structure(brandt);
  std::vector<bool> nonzero(brandt.size(), true);
  nonzero[*brandt.zero()] = false;
  ClassId j = apex(brandt, g, nonzero);
  CHECK(g.j_elements(j).size() == 4);
  std::vector<bool> only_zero(brandt.size(), false);
  only_zero[*brandt.zero()] = true;
  CHECK(code_of([&] { (void)apex(brandt, g, only_zero); }) == ErrorCode::not_factorial);
  std::vector<bool> one(brandt.size(), false);
  one[brandt.generators()[0]] = true;
  CHECK(code_of([&] { (void)apex(brandt, g, one); }) == ErrorCode::not_factorial);
}
