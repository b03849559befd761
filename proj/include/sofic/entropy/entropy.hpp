#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sofic/core/graph.hpp"
#include "sofic/shift/dfa.hpp"
#include "sofic/shift/factor.hpp"
#include "sofic/shift/presentation.hpp"

namespace sofic {

  //! Spectral data of the live part of a DFA: the largest spectral radius
  //! over its strongly connected components, bracketed by Collatz-Wielandt
  //! bounds from power iteration on A + I.
  struct PerronEstimate {
    double      lower     = 0;  // bracket on the spectral radius
    double      upper     = 0;
    std::size_t period    = 1;  // lcm of the periods of the cyclic components
    std::size_t iterations = 0;
    bool        converged = false;

    [[nodiscard]] double radius() const {
      return (lower + upper) / 2;
    }

    [[nodiscard]] double entropy() const {
      return radius() <= 0 ? 0.0 : std::max(0.0, std::log2(radius()));
    }
  };

  namespace detail {
    //! Period of a strongly connected component: gcd of level differences
    //! along its edges in a BFS from one member.
    inline std::size_t component_period(std::vector<std::vector<State>> const& adj,
                                        std::vector<State> const&              members,
                                        std::vector<std::uint32_t> const&      comp,
                                        std::uint32_t                          c) {
      std::vector<std::int64_t> level(adj.size(), -1);
      std::vector<State>        queue{members[0]};
      level[members[0]] = 0;
      std::size_t g     = 0;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        State q = queue[i];
        for (auto r : adj[q]) {
          if (comp[r] != c) {
            continue;
          }
          if (level[r] < 0) {
            level[r] = level[q] + 1;
            queue.push_back(r);
          } else {
            g = std::gcd(g, static_cast<std::size_t>(std::llabs(level[q] + 1 - level[r])));
          }
        }
      }
      return g == 0 ? 1 : g;
    }
  }  // namespace detail

  inline PerronEstimate perron_estimate(Dfa const& d, double tol = 1e-12, std::size_t max_iterations = 1'000'000) {
    auto                            live = d.live();
    std::vector<std::vector<State>> adj(d.states);
    for (State q = 0; q < d.states; ++q) {
      if (!live[q]) {
        continue;
      }
      for (Letter a = 0; a < d.letters; ++a) {
        if (live[d.next(q, a)]) {
          adj[q].push_back(d.next(q, a));  // parallel edges are kept
        }
      }
    }
    auto comp = graph::strongly_connected_components(static_cast<std::uint32_t>(d.states),
                                                     [&](std::uint32_t v, auto&& visit) {
                                                       for (auto r : adj[v]) {
                                                         visit(r);
                                                       }
                                                     });
    std::uint32_t const count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    PerronEstimate      best;
    best.converged = true;
    for (std::uint32_t c = 0; c < count; ++c) {
      std::vector<State> members;
      for (State q = 0; q < d.states; ++q) {
        if (live[q] && comp[q] == c) {
          members.push_back(q);
        }
      }
      bool cyclic = false;
      for (auto q : members) {
        for (auto r : adj[q]) {
          cyclic = cyclic || comp[r] == c;
        }
      }
      if (!cyclic) {
        continue;
      }
      best.period = std::lcm(best.period, detail::component_period(adj, members, comp, c));
      // power iteration on A + I restricted to the component
      std::vector<double> x(d.states, 0.0);
      for (auto q : members) {
        x[q] = 1.0;
      }
      double      lo = 0, hi = 0;
      bool        ok = false;
      std::size_t it = 0;
      for (; it < max_iterations; ++it) {
        std::vector<double> y(d.states, 0.0);
        for (auto q : members) {
          y[q] = x[q];
          for (auto r : adj[q]) {
            if (comp[r] == c) {
              y[q] += x[r];
            }
          }
        }
        lo = std::numeric_limits<double>::infinity();
        hi = 0;
        double norm = 0;
        for (auto q : members) {
          lo   = std::min(lo, y[q] / x[q]);
          hi   = std::max(hi, y[q] / x[q]);
          norm = std::max(norm, y[q]);
        }
        if (hi - lo <= tol * hi) {
          ok = true;
          break;
        }
        for (auto q : members) {
          x[q] = y[q] / norm;
        }
      }
      best.iterations = std::max(best.iterations, it);
      if (hi - 1 > best.upper) {
        best.lower     = lo - 1;
        best.upper     = hi - 1;
        best.converged = ok;
      }
    }
    return best;
  }

  //! q(n) for n = 1..n_max on the minimal factor DFA, with the entropy
  //! bounds derived from it.
  struct ComplexityProfile {
    std::vector<Count> counts;  // counts[n - 1] = q(n)
    std::size_t        n_max          = 0;
    double             entropy_upper  = 0;  // min over n of log2 q(n) / n
    PerronEstimate     perron;
    bool               truncated = false;   // counts stopped early at 128-bit overflow

    [[nodiscard]] Count q(std::size_t n) const {
      return counts.at(n - 1);
    }

    [[nodiscard]] double perron_entropy() const {
      return perron.entropy();
    }

    //! log2(q(n) / q(n - d)) / d at the largest computed n, d the period.
    [[nodiscard]] double counting_entropy() const {
      std::size_t d = perron.period;
      std::size_t n = counts.size();
      if (n <= d) {
        return entropy_upper;
      }
      return (std::log2(static_cast<long double>(counts[n - 1]))
              - std::log2(static_cast<long double>(counts[n - 1 - d])))
             / static_cast<double>(d);
    }
  };

  inline double log2_count(Count c) {
    return static_cast<double>(std::log2(static_cast<long double>(c)));
  }

  inline ComplexityProfile complexity_profile(Dfa const& factors, std::size_t n_max, double tol = 1e-12) {
    if (n_max == 0 || n_max > 64) {
      detail::fail(ErrorCode::invalid_argument, "n_max must be in 1..64");
    }
    ComplexityProfile out;
    out.perron        = perron_estimate(factors, tol);
    out.entropy_upper = std::numeric_limits<double>::infinity();
    for (std::size_t n = 1; n <= n_max; ++n) {
      Count c = 0;
      try {
        c = count_accepted(factors, n);
      } catch (Error const& err) {
        if (err.code() != ErrorCode::overflow) {
          throw;
        }
        out.truncated = true;
        break;
      }
      out.counts.push_back(c);
      out.entropy_upper = std::min(out.entropy_upper, c == 0 ? 0.0 : log2_count(c) / static_cast<double>(n));
    }
    out.n_max = out.counts.size();
    // submultiplicativity on every computed pair
    for (std::size_t a = 1; a <= out.n_max; ++a) {
      for (std::size_t b = 1; a + b <= out.n_max; ++b) {
        Count qa = out.q(a), qb = out.q(b);
        bool  product_overflows = qa != 0 && qb > std::numeric_limits<Count>::max() / qa;
        if (!product_overflows && out.q(a + b) > qa * qb) {
          detail::fail(ErrorCode::check_failed, "q(" + std::to_string(a + b) + ") > q(" + std::to_string(a)
                                                    + ") q(" + std::to_string(b) + ")");
        }
      }
    }
    if (out.entropy_upper < out.perron_entropy() - 1e-9) {
      detail::fail(ErrorCode::check_failed, "log2 q(n) / n dropped below the Perron entropy");
    }
    return out;
  }

  inline ComplexityProfile complexity_profile(Presentation const& p, std::size_t n_max, double tol = 1e-12) {
    return complexity_profile(factor_dfa(p), n_max, tol);
  }

  struct EntropyEstimate {
    double            value = 0;  // Perron entropy
    double            lower = 0;  // bracket on the entropy
    double            upper = 0;
    double            counting = 0;
    bool              converged = false;
    ComplexityProfile certificate;
  };

  //! Entropy by power iteration to relative tolerance `tol`, with the
  //! counting profile as certificate. Throws ToleranceNotReached when the
  //! bracket stays wider than `tol`; the message carries the bracket.
  inline EntropyEstimate entropy_estimate(Presentation const& p, std::size_t n_max, double tol) {
    EntropyEstimate out;
    out.certificate = complexity_profile(factor_dfa(p), n_max, tol);
    auto const& pe  = out.certificate.perron;
    out.value       = pe.entropy();
    out.lower       = pe.lower <= 1 ? 0.0 : std::log2(pe.lower);
    out.upper       = pe.upper <= 1 ? 0.0 : std::log2(pe.upper);
    out.counting    = out.certificate.counting_entropy();
    out.converged   = pe.converged;
    if (!out.converged) {
      detail::fail(ErrorCode::tolerance_not_reached,
                   "bracket [" + std::to_string(out.lower) + ", " + std::to_string(out.upper) + "]");
    }
    return out;
  }

  namespace detail {
    //! The same DFA over a larger alphabet; `map[a]` is the new index of
    //! letter a, and letters outside the image lead to a fresh sink.
    inline Dfa relabel(Dfa const& d, std::vector<Letter> const& map, std::size_t letters) {
      Dfa out;
      out.states    = d.states + 1;
      out.letters   = letters;
      out.initial   = d.initial;
      out.accepting = d.accepting;
      out.accepting.push_back(false);
      State const sink = static_cast<State>(d.states);
      out.delta.assign(out.states * letters, sink);
      for (State q = 0; q < d.states; ++q) {
        for (Letter a = 0; a < d.letters; ++a) {
          out.delta[q * letters + map[a]] = d.next(q, a);
        }
      }
      return minimize(out);
    }
  }  // namespace detail

  struct EntropyGap {
    double h     = 0;
    double h_sub = 0;
    Word   witness;  // in L(P) but not in L(P_sub), over the alphabet of P
    bool   holds = false;
  };

  //! Checks h(P_sub) < h(P) for a proper subshift P_sub of P. Letters are
  //! matched by name. Throws NotASubshift if L(P_sub) is not strictly
  //! contained in L(P).
  inline EntropyGap entropy_gap_check(Presentation const& p, Presentation const& sub, double tol = 1e-9) {
    auto const&         alphabet = p.alphabet();
    std::vector<Letter> map;
    for (Letter a = 0; a < sub.alphabet().size(); ++a) {
      auto idx = alphabet.find(sub.alphabet().name(a));
      if (!idx) {
        detail::fail(ErrorCode::not_a_subshift, "letter '" + sub.alphabet().name(a) + "' is not in the alphabet");
      }
      map.push_back(*idx);
    }
    Dfa big   = factor_dfa(p);
    Dfa small = detail::relabel(factor_dfa(sub), map, alphabet.size());
    if (auto w = inclusion_counterexample(small, big)) {
      detail::fail(ErrorCode::not_a_subshift, "'" + alphabet.format(*w) + "' is not a factor of the larger shift");
    }
    auto w = inclusion_counterexample(big, small);
    if (!w) {
      detail::fail(ErrorCode::not_a_subshift, "the shifts are equal");
    }
    EntropyGap out;
    out.witness = *w;
    out.h       = perron_estimate(big).entropy();
    out.h_sub   = perron_estimate(small).entropy();
    out.holds   = out.h_sub < out.h - tol;
    return out;
  }

  //! Entropy of a finite word.
  inline double word_entropy(Word const&) {
    return 0.0;
  }

}  // namespace sofic
