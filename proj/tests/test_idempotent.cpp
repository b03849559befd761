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

  Element phi(FiniteSemigroup const& s, std::vector<Element> const& letters, Word const& w) {
    Element x = letters[w[0]];
    for (std::size_t i = 1; i < w.size(); ++i) {
      x = s(x, letters[w[i]]);
    }
    return x;
  }

}  // namespace

TEST_CASE("loop languages enumerate the cycle labels in shortlex order", "[idempotent][stream]") {
  for (auto const& name : fixture::corpus()) {
    auto p = fixture::shift(name);
    for (State v = 0; v < p.states(); ++v) {
      INFO(name << " vertex " << v);
      auto              t = loop_language(p, v);
      std::vector<Word> expected;
      for (std::size_t n = 1; n <= 6; ++n) {
        auto labels = oracle::loop_labels(p, v, n);
        expected.insert(expected.end(), labels.begin(), labels.end());
      }
      auto              stream = shortlex_stream(t);
      std::vector<Word> got;
      while (got.size() < expected.size()) {
        auto w = stream.next();
        REQUIRE(w);
        got.push_back(*w);
      }
      CHECK(got == expected);
      if (auto w = stream.next()) {
        CHECK(w->size() > 6);
      }
      for (auto const& w : oracle::all_words(p.alphabet().size(), 1, 5)) {
        CHECK(t.contains(w) == (oracle::loop_labels(p, v, w.size()).count(w) != 0));
      }
      CHECK_FALSE(t.contains(Word{}));
    }
  }
  auto golden = fixture::shift("golden");
  CHECK(code_of([&] { (void)loop_language(golden, 7); }) == ErrorCode::invalid_state);
}

TEST_CASE("finite languages end the stream", "[idempotent][stream]") {
  Dfa d;
  d.states    = 3;
  d.letters   = 2;
  d.initial   = 0;
  d.delta     = {1, 2, 2, 2, 2, 2};  // accepts a only
  d.accepting = {false, true, false};
  ShortlexStream s(d);
  CHECK(s.next() == Word{0});
  CHECK_FALSE(s.next());
  CHECK_FALSE(s.next());
}

TEST_CASE("x^(n!) by index and period", "[idempotent][power]") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 10; ++i) {
    auto s = oracle::random_semigroup(rng, 40);
    for (Element x = 0; x < s.size(); ++x) {
      for (std::uint64_t n = 1; n <= 6; ++n) {
        CHECK(power_factorial(s, x, n) == oracle::naive_power(s, x, oracle::factorial(n)));
      }
      CHECK(s.is_idempotent(power_factorial(s, x, 40)));
      CHECK(power_factorial(s, x, 40) == omega_power(s, x));
    }
  }
}

TEST_CASE("Zimin terms", "[idempotent][zimin]") {
  ZiminTerm t{{Word{0}, Word{1}, Word{0, 1}}};
  CHECK(t.depth() == 3);
  CHECK(t.length() == Count{((2 * 1 + 1) * 2 * 2 + 2) * 6});
  auto w = t.expand(1000);
  REQUIRE(w);
  CHECK(w->size() == static_cast<std::size_t>(*t.length()));
  CHECK_FALSE(t.expand(10));
  Alphabet ab({"a", "b"});
  CHECK(t.to_string(ab) == "w1 = a\nw2 = (w1 b w1)^(2!)\nw3 = (w2 ab w2)^(3!)\n");
  ZiminTerm deep;
  for (int i = 0; i < 60; ++i) {
    deep.v.push_back(Word{0});
  }
  CHECK_FALSE(deep.length());
}

TEST_CASE("Zimin evaluation reaches the distinguished class", "[idempotent][zimin]") {
  for (auto const& name : fixture::corpus()) {
    auto p = fixture::shift(name);
    auto d = syntactic_semigroup(p);
    auto g = green_structure(*d.semigroup);
    auto j = distinguished_class(d, g);
    for (State v = 0; v < p.states(); ++v) {
      INFO(name << " vertex " << v);
      auto t = loop_language(p, v);
      auto r = evaluate_zimin(t, *d.semigroup, d.letter_map);
      CHECK(d.semigroup->is_idempotent(r.rho));
      CHECK(g.j_class[r.rho] == j);
      CHECK(r.n_star >= d.semigroup->size());
      CHECK(r.term.depth() == r.n_star);
      CHECK(r.chain.size() == r.n_star);
      if (r.bound) {
        CHECK(Count{r.n_star} <= *r.bound);
      }
      for (auto x : r.image) {
        CHECK(oracle::j_below(*d.semigroup, r.rho, x));
      }
      // the symbolic chain agrees with the expanded words where they fit
      for (std::size_t k = 1; k <= r.n_star; ++k) {
        ZiminTerm prefix{{r.term.v.begin(), r.term.v.begin() + static_cast<std::ptrdiff_t>(k)}};
        if (auto w = prefix.expand(200'000)) {
          CHECK(phi(*d.semigroup, d.letter_map, *w) == r.chain[k - 1]);
          CHECK(t.contains(*w));
        }
      }
    }
  }
}

TEST_CASE("images of rational languages are reached by short words", "[idempotent][rational]") {
  for (auto const& name : fixture::corpus()) {
    auto p = fixture::shift(name);
    auto d = syntactic_semigroup(p);
    auto r = rational_bound_check(d.dfa, *d.semigroup, d.letter_map);
    CHECK(r.holds);
    CHECK(r.max_length <= r.bound);
    std::size_t nonzero = d.semigroup->size() - (d.zero ? 1 : 0);
    CHECK(r.elements == nonzero);
  }
  std::mt19937_64 rng(22);
  for (int i = 0; i < 10; ++i) {
    auto s = oracle::random_semigroup(rng, 40);
    auto t = loop_language(fixture::shift("random3"), 0);
    std::vector<Element> letters;
    for (Letter a = 0; a < t.dfa.letters; ++a) {
      letters.push_back(s.generators()[a % s.generators().size()]);
    }
    auto r = rational_bound_check(t.dfa, s, letters);
    CHECK(r.holds);
    auto z = evaluate_zimin(t, s, letters);
    CHECK(s.is_idempotent(z.rho));
  }
}
