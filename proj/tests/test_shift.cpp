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

}  // namespace

TEST_CASE("complexity equals the number of path labels", "[shift][factor]") {
  for (auto const& name : fixture::corpus()) {
    INFO(name);
    auto p = fixture::shift(name);
    auto d = factor_dfa(p);
    for (std::size_t n = 1; n <= 8; ++n) {
      auto labels = oracle::path_labels(p, n);
      CHECK(complexity(d, n) == labels.size());
      for (auto const& w : labels) {
        CHECK(d.accepts(w));
      }
    }
    CHECK(d.accepts(Word{}));
  }
}

TEST_CASE("factor DFA is minimal and canonical", "[shift][dfa]") {
  for (auto const& name : fixture::corpus()) {
    auto d = factor_dfa(fixture::shift(name));
    auto m = minimize(d);
    CHECK(m.states == d.states);
    CHECK(same_language(d, m));
    CHECK_FALSE(inclusion_counterexample(d, m));
  }
  auto golden = factor_dfa(fixture::shift("golden"));
  auto full   = factor_dfa(fixture::shift("full2"));
  auto w      = inclusion_counterexample(full, golden);
  REQUIRE(w);
  CHECK(full.accepts(*w));
  CHECK_FALSE(golden.accepts(*w));
  CHECK_FALSE(inclusion_counterexample(golden, full));
}

TEST_CASE("presentation text round trip and errors", "[shift][io]") {
  for (auto const& name : fixture::corpus()) {
    auto p = fixture::shift(name);
    auto q = read_presentation(write_presentation(p));
    CHECK(q.states() == p.states());
    CHECK(q.alphabet().names() == p.alphabet().names());
    CHECK(same_language(factor_dfa(p), factor_dfa(q)));
  }
  CHECK(code_of([] { (void)read_presentation(fixture::slurp("samples/broken.pres")); })
        == ErrorCode::parse_error);
  CHECK(code_of([] { (void)read_presentation("presentation 1 a b\nedge 0 a 0\n"); })
        == ErrorCode::invalid_argument);
  auto reducible = read_presentation("presentation 2 a b\nedge 0 a 0\nedge 0 b 1\nedge 1 b 1\n");
  CHECK(code_of([&] { reducible.require_irreducible(); }) == ErrorCode::not_strongly_connected);
  CHECK(code_of([&] { (void)higher_block(reducible, 2); }) == ErrorCode::not_strongly_connected);
}

TEST_CASE("higher block shifts count shifted windows", "[shift][block]") {
  for (auto const& name : {"golden", "even", "period3", "random3"}) {
    INFO(name);
    auto p  = fixture::shift(name);
    auto dp = factor_dfa(p);
    for (std::size_t n = 1; n <= 3; ++n) {
      auto b  = higher_block(p, n);
      auto db = factor_dfa(b);
      for (std::size_t k = 1; k <= 6; ++k) {
        CHECK(complexity(db, k) == complexity(dp, k + n - 1));
      }
      for (auto const& w : oracle::path_labels(p, n + 3)) {
        auto code = block_code(b, p.alphabet(), w, n);
        CHECK(code.size() == 4);
        CHECK(db.accepts(code));
      }
    }
  }
  CHECK(write_presentation(higher_block(fixture::shift("full2"), 1)).find("[a]") != std::string::npos);
  CHECK(code_of([] { (void)higher_block(fixture::shift("golden"), 0); }) == ErrorCode::invalid_argument);
}

TEST_CASE("periodic shifts are recognised", "[shift][periodic]") {
  CHECK(is_periodic(fixture::shift("period1")) == Word{0});
  CHECK(is_periodic(fixture::shift("period2")) == Word{0, 1});
  CHECK(is_periodic(fixture::shift("period3")) == Word{0, 0, 1});
  CHECK(is_periodic(fixture::shift("period4")) == Word{0, 0, 1, 1});
  for (auto const& name : {"full2", "full3", "golden", "even", "random3", "random4"}) {
    CHECK_FALSE(is_periodic(fixture::shift(name)));
  }
}

TEST_CASE("non-minimality witnesses", "[shift][witness]") {
  for (auto const& name : {"full2", "full3", "golden", "even", "random3", "random4"}) {
    INFO(name);
    auto p = fixture::shift(name);
    auto d = factor_dfa(p);
    auto x = non_minimal_witness(d);
    CHECK(x.w.size() == x.v.size());
    CHECK(powers_accepted(d, x.w));
    CHECK(d.accepts(x.v));
    CHECK_FALSE(words::is_cyclic_conjugate(x.w, x.v));
    for (std::size_t k = 1; k <= 4; ++k) {
      CHECK(d.accepts(words::power(x.w, k)));
    }
    auto c = conjugate_with_partial_alphabet(p, x);
    CHECK(c.n == x.w.size());
    CHECK(words::alph(c.z).size() < c.blocks.alphabet().size());
    CHECK(powers_accepted(factor_dfa(c.blocks), c.z));
  }
  for (auto const& name : {"period1", "period2", "period3"}) {
    CHECK(code_of([&] { (void)non_minimal_witness(fixture::shift(name)); }) == ErrorCode::shift_is_minimal);
  }
  auto p = fixture::shift("even");
  CHECK(code_of([&] { (void)conjugate_with_partial_alphabet(p, {Word{0}, Word{0}}); })
        == ErrorCode::check_failed);
}

TEST_CASE("synchronisation delay of u^+", "[shift][sync]") {
  CHECK(check_sync_delay(Word{0, 1}, 2, 4, 2));
  CHECK(check_sync_delay(Word{0, 0, 1}, 1, 4, 2));
  CHECK(check_sync_delay(Word{0, 1, 2}, 2, 3, 3));
  CHECK(code_of([] { (void)check_sync_delay(Word{0, 0}, 1, 2, 2); }) == ErrorCode::not_primitive);
  CHECK(code_of([] { (void)check_sync_delay(Word{0, 1}, 0, 2, 2); }) == ErrorCode::invalid_argument);
}

TEST_CASE("word utilities", "[shift][words]") {
  auto all = oracle::all_words(2, 1, 6);
  for (auto const& u : all) {
    bool primitive = true;
    for (std::size_t d = 1; d < u.size(); ++d) {
      if (u.size() % d == 0 && words::power(Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(d)), u.size() / d) == u) {
        primitive = false;
      }
    }
    CHECK(words::is_primitive(u) == primitive);
    auto r = words::least_rotation(u);
    CHECK(words::is_cyclic_conjugate(u, r));
    for (std::size_t i = 0; i < u.size(); ++i) {
      CHECK_FALSE(words::shortlex_less(words::rotate(u, i), r));
    }
  }
}
