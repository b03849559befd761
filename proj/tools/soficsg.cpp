#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sofic/sofic.hpp"

namespace {

  using nlohmann::ordered_json;
  using namespace sofic;

  struct Options {
    std::size_t   nmax   = 12;
    double        tol    = 1e-9;
    std::size_t   cap    = 2'000'000;
    std::uint64_t seed   = 0x5eed;
    std::string   format = "tsv";
  };

  //! Ordered key-value report. Text form: one `key value` line per scalar,
  //! `key v1 v2 ...` for lists, TSV for tables and raw blocks verbatim.
  class Report {
   public:
    void add(std::string const& key, ordered_json value) {
      _json[key] = value;
      _text.push_back({key, std::move(value), false});
    }

    //! A verbatim text block; in JSON it is a string field.
    void block(std::string const& key, std::string const& text) {
      _json[key] = text;
      _text.push_back({key, text, true});
    }

    void print(std::ostream& os, std::string const& format) const {
      if (format == "json") {
        os << _json.dump(2) << '\n';
        return;
      }
      for (auto const& [key, value, raw] : _text) {
        if (raw) {
          os << value.get<std::string>();
        } else if (value.is_array() && !value.empty() && value[0].is_object()) {
          bool header = true;
          for (auto const& row : value) {
            if (header) {
              std::string sep;
              for (auto const& [k, v] : row.items()) {
                os << sep << k;
                sep = "\t";
              }
              os << '\n';
              header = false;
            }
            std::string sep;
            for (auto const& [k, v] : row.items()) {
              os << sep << scalar(v);
              sep = "\t";
            }
            os << '\n';
          }
        } else if (value.is_array()) {
          os << key;
          for (auto const& v : value) {
            os << ' ' << scalar(v);
          }
          os << '\n';
        } else {
          os << key << ' ' << scalar(value) << '\n';
        }
      }
    }

   private:
    static std::string scalar(ordered_json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_number_float()) {
        std::ostringstream ss;
        ss.precision(10);
        ss << v.get<double>();
        return ss.str();
      }
      return v.dump();
    }

    struct Entry {
      std::string  key;
      ordered_json value;
      bool         raw;
    };
    ordered_json       _json = ordered_json::object();
    std::vector<Entry> _text;
  };

  std::string slurp(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      detail::fail(ErrorCode::invalid_argument, "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Presentation load_presentation(std::string const& path) {
    return read_presentation(slurp(path));
  }

  std::string count_string(Count c) {
    return to_string(c);
  }

  State parse_state(Presentation const& p, std::string const& name) {
    auto q = p.find_state(name);
    if (!q) {
      detail::fail(ErrorCode::invalid_state, "no state '" + name + "'");
    }
    return *q;
  }

  void green_report(Report& r, FiniteSemigroup const& s, GreenStructure const& g) {
    r.add("j_classes", g.j_count);
    r.add("r_classes", g.r_count);
    r.add("l_classes", g.l_count);
    r.add("h_classes", g.h_count);
    ordered_json classes = ordered_json::array();
    for (ClassId j = 0; j < g.j_count; ++j) {
      auto members    = g.j_elements(j);
      auto idempotent = std::count_if(members.begin(), members.end(), [&](Element x) { return g.idempotent[x]; });
      classes.push_back(ordered_json{{"class", j},
                                     {"size", members.size()},
                                     {"regular", g.regular[j] ? "true" : "false"},
                                     {"idempotents", idempotent}});
    }
    r.add("classes", classes);
    r.block("eggbox", eggbox(s, g));
  }

  Report run_syntactic(std::string const& path, Options const& o) {
    auto   p = load_presentation(path);
    auto   d = syntactic_semigroup(p, o.cap);
    auto   g = green_structure(*d.semigroup);
    Report r;
    r.add("size", d.semigroup->size());
    r.add("zero", d.zero ? ordered_json(*d.zero) : ordered_json("none"));
    ordered_json letters = ordered_json::array();
    for (Letter a = 0; a < p.alphabet().size(); ++a) {
      letters.push_back(p.alphabet().name(a) + "=" + std::to_string(d.letter_map[a]));
    }
    r.add("letters", letters);
    green_report(r, *d.semigroup, g);
    return r;
  }

  Report run_aggm(std::string const& path, Options const& o) {
    auto   p   = load_presentation(path);
    auto   d   = syntactic_semigroup(p, o.cap);
    auto   g   = green_structure(*d.semigroup);
    auto   rep = is_aggm(*d.semigroup, g);
    Report r;
    r.add("is_aggm", rep.aggm);
    if (rep.distinguished) {
      r.add("distinguished_class_size", g.j_elements(*rep.distinguished).size());
    }
    r.add("trivial", rep.trivial);
    r.add("ggm", rep.ggm);
    r.add("subgroup_trivial", rep.subgroup_trivial);
    r.add("semigroup_size", d.semigroup->size());
    if (rep.aggm) {
      r.add("fischer_states", fischer_cover(d).states());
    }
    if (!rep.reason.empty()) {
      r.add("reason", rep.reason);
    }
    return r;
  }

  Report run_fischer(std::string const& path, Options const& o) {
    auto   p     = load_presentation(path);
    auto   d     = syntactic_semigroup(p, o.cap);
    auto   cover = fischer_cover(d);
    Report r;
    r.block("presentation", write_presentation(cover));
    return r;
  }

  Report run_green(std::string const& path, Options const&) {
    auto   s = read_semigroup(slurp(path));
    auto   g = green_structure(s);
    Report r;
    r.add("size", s.size());
    green_report(r, s, g);
    return r;
  }

  Report run_idempotent(std::string const& path, std::string const& vertex, std::string const& semigroup_path,
                        Options const& o) {
    auto   p = load_presentation(path);
    auto   t = loop_language(p, parse_state(p, vertex));
    Report r;
    r.add("vertex", vertex);
    r.add("loop_automaton_states", t.m);
    if (semigroup_path.empty()) {
      auto d   = syntactic_semigroup(p, o.cap);
      auto res = evaluate_zimin(t, *d.semigroup, d.letter_map);
      auto g   = green_structure(*d.semigroup);
      auto dj  = distinguished_class(d, g);
      r.add("rho", res.rho);
      r.add("idempotent", d.semigroup->is_idempotent(res.rho));
      r.add("in_distinguished_class", g.j_class[res.rho] == dj);
      r.add("n_star", res.n_star);
      r.add("bound_N", res.bound_text);
      r.block("term", res.term.to_string(p.alphabet()));
      return r;
    }
    auto s = read_semigroup(slurp(semigroup_path));
    if (s.generators().size() != p.alphabet().size()) {
      detail::fail(ErrorCode::dimension_mismatch, "the semigroup needs one generator per letter");
    }
    auto res = evaluate_zimin(t, s, s.generators());
    r.add("rho", res.rho);
    r.add("idempotent", s.is_idempotent(res.rho));
    r.add("n_star", res.n_star);
    r.add("bound_N", res.bound_text);
    r.block("term", res.term.to_string(p.alphabet()));
    return r;
  }

  Report run_entropy(std::string const& path, Options const& o) {
    auto         p   = load_presentation(path);
    auto         est = entropy_estimate(p, o.nmax, o.tol);
    Report       r;
    ordered_json rows = ordered_json::array();
    auto const&  prof = est.certificate;
    for (std::size_t n = 1; n <= prof.n_max; ++n) {
      auto q = prof.q(n);
      rows.push_back(ordered_json{{"n", n},
                                  {"q", count_string(q)},
                                  {"log2q_over_n", q == 0 ? 0.0 : log2_count(q) / static_cast<double>(n)}});
    }
    r.add("profile", rows);
    r.add("entropy", est.value);
    r.add("entropy_counting", est.counting);
    r.add("bracket", ordered_json::array({est.lower, est.upper}));
    return r;
  }

  Report run_block(std::string const& path, std::size_t n, Options const&) {
    auto   p = load_presentation(path);
    Report r;
    r.block("presentation", write_presentation(higher_block(p, n)));
    return r;
  }

  Report run_cover(std::string const& path, std::string const& hspec, std::string const& alpha_spec,
                   std::string const& z, std::string const& y, Options const& o) {
    auto p = load_presentation(path);
    auto d = syntactic_semigroup(p, o.cap);
    std::optional<std::size_t> extra;
    if (hspec.size() > 1 && hspec[0] == 'Z') {
      extra = detail::parse_index(hspec.substr(1), 0);
    } else if (hspec != "K") {
      detail::fail(ErrorCode::invalid_argument, "H-spec must be 'K' or 'Zn' (meaning K x Z_n)");
    }
    if (alpha_spec != "identity" && alpha_spec != "collapse") {
      detail::fail(ErrorCode::invalid_argument, "alpha-spec must be 'identity' or 'collapse'");
    }
    if ((alpha_spec == "identity") != !extra) {
      detail::fail(ErrorCode::invalid_argument, "identity goes with H-spec K, collapse with Zn");
    }
    Word const zw = z.empty() ? Word{0} : p.alphabet().parse(z);
    Word const yw = y.empty() ? Word{static_cast<Letter>(p.alphabet().size() - 1)} : p.alphabet().parse(y);
    CoverInput in = shift_cover_input(d, zw, yw, extra);
    in.cap        = o.cap;
    in.seed       = o.seed;
    auto   c = build_cover(in);
    Report r;
    r.add("size", c.size());
    r.add("p", c.shape.p);
    r.add("b", c.shape.b);
    r.add("m", c.m);
    r.add("ell", c.ell);
    r.add("shift", c.shift);
    r.add("j_prime_size", c.j_prime.size());
    r.add("subgroup_size", c.subgroup.size());
    r.add("theta_isomorphism", true);
    r.add("words_checked", c.words_checked);
    r.add("samples_checked", c.samples_checked);
    r.add("allthere_words", c.allthere_words);
    r.add("preimages_complete", c.preimages_complete());
    if (auto const& gap = c.allthere_counterexample) {
      r.add("preimage_gap", ordered_json::array({detail::word_string(gap->word), gap->block_entries, gap->preimages}));
    }
    r.block("cover", write_cover(c));
    return r;
  }

  Report run_witness(std::string const& path, std::string const& w, std::string const& v, Options const&) {
    auto                     p = load_presentation(path);
    PartialAlphabetConjugate c = w.empty() ? conjugate_with_partial_alphabet(p)
                                           : conjugate_with_partial_alphabet(
                                                 p, NonMinimalWitness{p.alphabet().parse(w), p.alphabet().parse(v)});
    Report r;
    r.add("w", p.alphabet().format(c.witness.w));
    r.add("v", p.alphabet().format(c.witness.v));
    r.add("block_length", c.n);
    r.add("block_letters", c.blocks.alphabet().size());
    r.add("z", c.blocks.alphabet().format(c.z));
    return r;
  }

  int exit_code(ErrorCode code) {
    return code == ErrorCode::cap_exceeded ? 2 : 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroup tools for sofic shifts"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--nmax", o.nmax, "largest word length for complexity counts")->capture_default_str();
  app.add_option("--tol", o.tol, "relative tolerance of the Perron iteration")->capture_default_str();
  app.add_option("--cap", o.cap, "element cap for semigroup closures")->capture_default_str();
  app.add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
  app.fallthrough();

  std::string path, second, third, z, y, w, v;
  std::size_t n = 1;
  std::function<Report()> action;

  auto* syn = app.add_subcommand("syntactic", "syntactic semigroup and Green structure");
  syn->add_option("presentation", path)->required();
  syn->callback([&] { action = [&] { return run_syntactic(path, o); }; });

  auto* ag = app.add_subcommand("aggm", "AGGM check of the syntactic semigroup");
  ag->add_option("presentation", path)->required();
  ag->callback([&] { action = [&] { return run_aggm(path, o); }; });

  auto* fi = app.add_subcommand("fischer", "Fischer cover as a presentation");
  fi->add_option("presentation", path)->required();
  fi->callback([&] { action = [&] { return run_fischer(path, o); }; });

  auto* gr = app.add_subcommand("green", "egg-box diagram of a semigroup file");
  gr->add_option("semigroup", path)->required();
  gr->callback([&] { action = [&] { return run_green(path, o); }; });

  auto* id = app.add_subcommand("idempotent", "computable idempotent of the loops at a vertex");
  id->add_option("presentation", path)->required();
  id->add_option("vertex", second)->required();
  id->add_option("semigroup", third, "target semigroup (default: the syntactic semigroup)");
  id->callback([&] { action = [&] { return run_idempotent(path, second, third, o); }; });

  auto* en = app.add_subcommand("entropy", "complexity profile and entropy");
  en->add_option("presentation", path)->required();
  en->callback([&] { action = [&] { return run_entropy(path, o); }; });

  auto* bl = app.add_subcommand("block", "higher block presentation");
  bl->add_option("presentation", path)->required();
  bl->add_option("N", n)->required()->check(CLI::PositiveNumber);
  bl->callback([&] { action = [&] { return run_block(path, n, o); }; });

  auto* co = app.add_subcommand("cover", "maximal-subgroup cover of the syntactic semigroup");
  co->add_option("presentation", path)->required();
  co->add_option("H", second, "K or Zn (K x Z_n)")->required();
  co->add_option("alpha", third, "identity or collapse")->required();
  co->add_option("--z", z, "the word z (default: first letter)");
  co->add_option("--y", y, "the word y with e = (z^w y)^w (default: last letter)");
  co->callback([&] { action = [&] { return run_cover(path, second, third, z, y, o); }; });

  auto* wi = app.add_subcommand("witness", "non-minimality witness and partial-alphabet conjugate");
  wi->add_option("presentation", path)->required();
  wi->add_option("--w", w, "explicit w");
  wi->add_option("--v", v, "explicit v");
  wi->callback([&] { action = [&] { return run_witness(path, w, v, o); }; });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e);
  }
  try {
    if (w.empty() != v.empty()) {
      detail::fail(ErrorCode::invalid_argument, "--w and --v go together");
    }
    action().print(std::cout, o.format);
  } catch (Error const& e) {
    std::cout << "ERR " << code_name(e.code()) << ' ' << e.detail() << '\n';
    return exit_code(e.code());
  }
  return 0;
}
