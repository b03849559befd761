#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "sofic/finsemi/enumerate.hpp"
#include "sofic/finsemi/green.hpp"
#include "sofic/finsemi/subgroup.hpp"
#include "sofic/syntactic/syntactic.hpp"
#include "sofic/wreath/block_matrix.hpp"
#include "sofic/wreath/rees.hpp"

namespace sofic {

  //! Inputs of the maximal-subgroup cover. The generators of `semigroup`
  //! are the images of x_1..x_{n+1}; the last one must be the zero. The
  //! idempotent is e = (z^w y)^w, so z^w e = e holds by construction.
  //! `alpha` maps H onto K = H_{phi(e)}, given by group indices of K
  //! (index 0 is phi(e), see maximal_subgroup).
  struct CoverInput {
    std::shared_ptr<FiniteSemigroup const> semigroup;
    Group                                  h;
    std::vector<Element>                   alpha;
    Word                                   z;
    Word                                   y;
    std::size_t                            cap             = 2'000'000;
    std::size_t                            word_length     = 10;
    std::size_t                            allthere_length = 8;
    std::size_t                            samples         = 10'000;
    std::uint64_t                          seed            = 0x5eed;
  };

  //! A word whose image has fewer distinct block entries than its image in
  //! S has alpha-bar preimages.
  struct PreimageGap {
    Word        word;
    std::size_t block_entries = 0;
    std::size_t preimages     = 0;
  };

  struct CoverResult {
    std::shared_ptr<FiniteSemigroup const> source;
    Group                                  h;
    Element                                phi_e = 0;
    BlockShape                             shape{0, 0};
    std::size_t                            m     = 0;
    std::size_t                            ell   = 0;
    std::size_t                            shift = 0;  // block renaming i -> i - shift
    std::vector<Element>                   kernel;     // N, identity first
    std::vector<Element>                   section;    // K -> H
    std::vector<RowMonomialMatrix>         generators;
    Enumeration<RowMonomialMatrix>         closure;    // S'
    std::vector<Element>                   rho;        // S' -> S
    Element                                eta_e = 0;
    Element                                zero  = 0;
    std::vector<Element>                   j_prime;
    std::vector<Element>                   subgroup;   // G_{eta(e)}, eta(e) first
    std::vector<Element>                   theta;      // parallel to subgroup
    std::size_t                            words_checked   = 0;
    std::size_t                            samples_checked = 0;
    std::size_t                            allthere_words  = 0;
    std::optional<PreimageGap>             allthere_counterexample;

    //! Every preimage of M_w is a block entry of eta(w), for all tested w.
    [[nodiscard]] bool preimages_complete() const {
      return !allthere_counterexample;
    }

    [[nodiscard]] std::size_t size() const {
      return closure.size();
    }

    [[nodiscard]] Element eta(Word const& w) const {
      return closure.evaluate(w);
    }
  };

  //! S_X with an extra generator mapped to zero; a zero is adjoined when S
  //! has none. `letters` are the images of the original letters.
  inline FiniteSemigroup with_zero_letter(FiniteSemigroup const& s, std::vector<Element> const& letters) {
    if (s.zero() && s.size() > 1) {
      auto gens = letters;
      gens.push_back(*s.zero());
      return FiniteSemigroup(s.size(), s.table(), gens, s.zero(), std::nullopt,
                             {.check_associativity = false});
    }
    std::size_t const    n = s.size() + 1;
    Element const        z = static_cast<Element>(s.size());
    std::vector<Element> table(n * n, z);
    for (Element x = 0; x < s.size(); ++x) {
      for (Element y = 0; y < s.size(); ++y) {
        table[x * n + y] = s(x, y);
      }
    }
    auto gens = letters;
    gens.push_back(z);
    return FiniteSemigroup(n, std::move(table), gens, z, std::nullopt, {.check_associativity = false});
  }

  namespace detail {
    inline bool is_prime(std::size_t n) {
      if (n < 2) {
        return false;
      }
      for (std::size_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          return false;
        }
      }
      return true;
    }

    [[noreturn]] inline void hypothesis(std::string const& what) {
      fail(ErrorCode::hypothesis_violated, what);
    }

    inline std::string word_string(Word const& w) {
      std::string out;
      for (auto a : w) {
        out += (out.empty() ? "x" : " x") + std::to_string(a + 1);
      }
      return out.empty() ? "1" : out;
    }

    //! Elements reachable from `start` along the given edge lists.
    inline std::vector<bool> reach(std::size_t                             n,
                                   Element                                 start,
                                   std::vector<std::vector<Element> const*> edges,
                                   std::size_t                             k) {
      std::vector<bool>    seen(n, false);
      std::vector<Element> stack{start};
      seen[start] = true;
      while (!stack.empty()) {
        Element x = stack.back();
        stack.pop_back();
        for (auto const* e : edges) {
          for (std::size_t a = 0; a < k; ++a) {
            Element y = (*e)[x * k + a];
            if (!seen[y]) {
              seen[y] = true;
              stack.push_back(y);
            }
          }
        }
      }
      return seen;
    }

    //! Elements from which `target` is reachable along right or left edges.
    inline std::vector<bool> co_reach(Enumeration<RowMonomialMatrix> const& e, Element target) {
      std::size_t const        n = e.size();
      std::size_t const        k = e.generator_count;
      std::vector<std::size_t> start(n + 1, 0);
      for (auto const* edges : {&e.right, &e.left}) {
        for (auto y : *edges) {
          ++start[y + 1];
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        start[i + 1] += start[i];
      }
      std::vector<Element> pred(start[n]);
      auto                 fill = start;
      for (auto const* edges : {&e.right, &e.left}) {
        for (std::size_t i = 0; i < n * k; ++i) {
          pred[fill[(*edges)[i]]++] = static_cast<Element>(i / k);
        }
      }
      std::vector<bool>    seen(n, false);
      std::vector<Element> stack{target};
      seen[target] = true;
      while (!stack.empty()) {
        Element y = stack.back();
        stack.pop_back();
        for (std::size_t i = start[y]; i < start[y + 1]; ++i) {
          if (!seen[pred[i]]) {
            seen[pred[i]] = true;
            stack.push_back(pred[i]);
          }
        }
      }
      return seen;
    }
  }  // namespace detail

  //! Builds the cover S' of S whose maximal subgroup at eta(e) is H, and
  //! checks its defining properties. Throws HypothesisViolated for bad
  //! inputs, CapExceeded when S' outgrows `cap`, and CheckFailed if a
  //! verified property fails.
  inline CoverResult build_cover(CoverInput const& in) {
    if (!in.semigroup) {
      detail::fail(ErrorCode::invalid_argument, "no semigroup");
    }
    FiniteSemigroup const& s    = *in.semigroup;
    auto const&            gens = s.generators();
    std::size_t const      k    = gens.size();
    if (k < 3) {
      detail::hypothesis("need letters x1..x(n+1) with n >= 2");
    }
    std::size_t const n = k - 1;
    if (!s.zero() || gens[n] != *s.zero()) {
      detail::hypothesis("the last letter must map to the zero of S");
    }
    Element const zero_s = *s.zero();
    if (in.z.empty() || std::find(in.z.begin(), in.z.end(), Letter{0}) == in.z.end()) {
      detail::hypothesis("x1 must occur in z");
    }
    for (auto a : in.z) {
      if (a >= n - 1) {
        detail::hypothesis("z must be a word over x1..x(n-1)");
      }
    }
    for (auto a : in.y) {
      if (a >= k) {
        detail::hypothesis("y uses an unknown letter");
      }
    }

    auto    green = green_structure(s);
    auto    phi   = [&](Word const& w) { return s.evaluate(w); };
    Element zw    = omega_power(s, phi(in.z));
    Element ey    = in.y.empty() ? zw : s(zw, phi(in.y));
    Element e     = omega_power(s, ey);
    if (e == zero_s) {
      detail::hypothesis("e = (z^w y)^w is zero");
    }
    std::vector<bool> nonzero(green.j_count, true);
    nonzero[green.j_class[zero_s]] = false;
    auto minimal                   = green.minimal_classes(nonzero);
    if (minimal.size() != 1) {
      detail::hypothesis("S has " + std::to_string(minimal.size()) + " minimal non-zero J-classes");
    }
    ClassId const j = minimal[0];
    if (green.j_class[e] != j) {
      detail::hypothesis("e = (z^w y)^w is not in the minimal non-zero J-class");
    }
    for (Element x = 0; x < s.size(); ++x) {
      if (x != zero_s && !green.leq(j, green.j_class[x])) {
        detail::hypothesis("J is not below element " + std::to_string(x));
      }
    }
    WreathEmbedding embed = [&] {
      try {
        return wreath_embed(s, green, j, e);
      } catch (Error const& err) {
        if (err.code() == ErrorCode::not_faithful) {
          detail::hypothesis(std::string("Schützenberger representation not faithful: ") + err.what());
        }
        throw;
      }
    }();
    Group const& kgrp = embed.group();
    Group const& h    = in.h;
    if (in.alpha.size() != h.size()) {
      detail::hypothesis("alpha must list an image for every element of H");
    }
    std::vector<bool> hit(kgrp.size(), false);
    for (Element a = 0; a < h.size(); ++a) {
      if (in.alpha[a] >= kgrp.size()) {
        detail::hypothesis("alpha image out of range");
      }
      hit[in.alpha[a]] = true;
      for (Element b = 0; b < h.size(); ++b) {
        if (in.alpha[h(a, b)] != kgrp(in.alpha[a], in.alpha[b])) {
          detail::hypothesis("alpha is not a homomorphism at (" + h.name(a) + "," + h.name(b) + ")");
        }
      }
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      detail::hypothesis("alpha is not onto K");
    }

    CoverResult out;
    out.source = in.semigroup;
    out.h      = h;
    out.phi_e  = e;

    // kernel, identity first, and the section sigma
    out.kernel.push_back(h.identity());
    for (Element a = 0; a < h.size(); ++a) {
      if (a != h.identity() && in.alpha[a] == kgrp.identity()) {
        out.kernel.push_back(a);
      }
    }
    out.section.assign(kgrp.size(), 0);
    for (Element g = 0; g < kgrp.size(); ++g) {
      if (g == kgrp.identity()) {
        out.section[g] = h.identity();
        continue;
      }
      for (Element a = 0; a < h.size(); ++a) {
        if (in.alpha[a] == g) {
          out.section[g] = a;
          break;
        }
      }
    }
    std::size_t const b = embed.rees.b_size();
    auto sigma_bar = [&](Element x) {
      return map_entries(embed.matrices[x], [&](Element g) { return out.section[g]; });
    };
    auto alpha_bar = [&](RowMonomialMatrix const& u) {
      return map_entries(u, [&](Element a) { return in.alpha[a]; });
    };

    // l = |N|^b with overflow guard
    std::size_t ell = 1;
    for (std::size_t i = 0; i < b; ++i) {
      if (ell > in.cap / out.kernel.size()) {
        detail::fail(ErrorCode::cap_exceeded,
                     "|N|^b exceeds the cap; the prime p would exceed " + std::to_string(in.cap));
      }
      ell *= out.kernel.size();
    }
    out.ell = ell;

    // m: Z^m idempotent for Z = M^sigma_{z_1} ... M^sigma_{z_q}
    RowMonomialProduct mul{&h};
    RowMonomialMatrix  zm = sigma_bar(gens[in.z[0]]);
    for (std::size_t i = 1; i < in.z.size(); ++i) {
      zm = mul(zm, sigma_bar(gens[in.z[i]]));
    }
    auto ip = index_period_of<RowMonomialMatrix>(zm, mul);
    out.m   = (ip.index + ip.period - 1) / ip.period * ip.period;
    std::size_t z1 = static_cast<std::size_t>(std::count(in.z.begin(), in.z.end(), Letter{0}));
    std::size_t bound = std::max({out.m, ell, z1});
    std::size_t p     = bound + 1;
    while (!detail::is_prime(p)) {
      if (p > bound + 10'000'000) {
        detail::fail(ErrorCode::prime_search_failed, "no prime found above " + std::to_string(bound));
      }
      ++p;
    }
    out.shape = BlockShape{p, b};
    auto const& shape = out.shape;

    // N_j as tuples over the kernel, lexicographic with the identity first
    auto twist = [&](std::size_t jdx, RowMonomialMatrix const& u) {
      RowMonomialMatrix t = u;
      for (std::size_t r = b; r-- > 0;) {
        Element nr = out.kernel[jdx % out.kernel.size()];
        jdx /= out.kernel.size();
        if (!t.row_is_zero(r)) {
          t.set(r, t.col(r), h(nr, t.val(r)));
        }
      }
      return t;
    };

    // generators
    std::vector<RowMonomialMatrix> gm;
    for (std::size_t a = 0; a < k; ++a) {
      RowMonomialMatrix x(shape.dim());
      if (a == n) {
        // zero matrix
      } else if (a == n - 1) {
        auto u = sigma_bar(gens[a]);
        for (std::size_t i = 0; i < p; ++i) {
          shape.set_block(x, i, 0, i < ell ? twist(i, u) : u);
        }
      } else {
        auto u = sigma_bar(gens[a]);
        for (std::size_t i = 0; i < p; ++i) {
          shape.set_block(x, i, a == 0 ? (i + 1) % p : i, u);
        }
      }
      gm.push_back(std::move(x));
    }
    auto eval_gm = [&](Word const& w) {
      RowMonomialMatrix x = gm[w[0]];
      for (std::size_t i = 1; i < w.size(); ++i) {
        x = mul(x, gm[w[i]]);
      }
      return x;
    };
    auto eta_e_matrix = [&] {
      auto zw_m = omega_power_of<RowMonomialMatrix>(eval_gm(in.z), mul);
      auto ey_m = in.y.empty() ? zw_m : mul(zw_m, eval_gm(in.y));
      return omega_power_of<RowMonomialMatrix>(ey_m, mul);
    };

    // rename blocks so that eta(e) has its block entries in block column 0
    {
      auto                  ee = eta_e_matrix();
      std::set<std::size_t> cols;
      for (std::size_t i = 0; i < p; ++i) {
        if (auto c = shape.block_column(ee, i)) {
          cols.insert(*c);
        }
      }
      if (cols.size() != 1) {
        detail::fail(ErrorCode::check_failed, "block entries of eta(e) span "
                                                  + std::to_string(cols.size()) + " block columns");
      }
      out.shift = *cols.begin();
      for (auto& x : gm) {
        x = shape.rotate(x, out.shift);
      }
    }
    out.generators = gm;

    try {
      out.closure = enumerate_semigroup<RowMonomialMatrix>(std::span<RowMonomialMatrix const>(gm), mul,
                                                           in.cap, true);
    } catch (Error const& err) {
      if (err.code() == ErrorCode::cap_exceeded) {
        detail::fail(ErrorCode::cap_exceeded, "S' exceeds " + std::to_string(in.cap)
                                                  + " elements (p = " + std::to_string(p)
                                                  + ", b = " + std::to_string(b)
                                                  + ", |N|^b = " + std::to_string(ell) + ")");
      }
      throw;
    }
    auto const&       cl = out.closure;
    std::size_t const sz = cl.size();

    // rho: S' -> S through the common alpha-bar image of the block entries
    out.rho.assign(sz, zero_s);
    bool found_zero = false;
    for (Element x = 0; x < sz; ++x) {
      auto const& mx = cl.elements[x];
      Element     rx = zero_s;
      if (mx.is_zero()) {
        out.zero   = x;
        found_zero = true;
      } else {
        std::optional<RowMonomialMatrix> image;
        for (std::size_t i = 0; i < p; ++i) {
          auto u = shape.block_entry(mx, i);
          if (!u) {
            detail::fail(ErrorCode::check_failed, "element " + std::to_string(x) + " has a zero block row");
          }
          auto ai = alpha_bar(*u);
          if (image && *image != ai) {
            detail::fail(ErrorCode::check_failed,
                         "block entries of element " + std::to_string(x) + " have distinct images");
          }
          image = std::move(ai);
        }
        auto found = embed.find(*image);
        if (!found) {
          detail::fail(ErrorCode::check_failed, "block entry image is not a matrix of S");
        }
        rx = *found;
      }
      if (rx != s.evaluate(cl.witness(x))) {
        detail::fail(ErrorCode::check_failed, "rho(eta(u)) != phi(u) for u = "
                                                  + detail::word_string(cl.witness(x)));
      }
      out.rho[x] = rx;
    }
    if (!found_zero) {
      detail::fail(ErrorCode::check_failed, "S' has no zero matrix");
    }
    for (Element x = 0; x < sz; ++x) {
      for (Letter a = 0; a < k; ++a) {
        if (out.rho[cl.right_mult(x, a)] != s(out.rho[x], gens[a])) {
          detail::fail(ErrorCode::check_failed, "rho is not a homomorphism");
        }
      }
    }

    // eta(e) and its J-class
    {
      auto ee = eta_e_matrix();
      auto it = std::find(cl.elements.begin(), cl.elements.end(), ee);
      if (it == cl.elements.end()) {
        detail::fail(ErrorCode::check_failed, "eta(e) not found in S'");
      }
      out.eta_e = static_cast<Element>(it - cl.elements.begin());
      if (shape.block_column(ee, 0) != std::optional<std::size_t>(0)) {
        detail::fail(ErrorCode::check_failed, "renaming did not move eta(e) to block column 0");
      }
    }
    auto below = detail::co_reach(cl, out.eta_e);
    auto ideal = detail::reach(sz, out.eta_e, {&cl.right, &cl.left}, k);
    for (Element x = 0; x < sz; ++x) {
      if (x != out.zero && !below[x]) {
        detail::fail(ErrorCode::check_failed, "J' is not below element " + std::to_string(x));
      }
      if (ideal[x] && x != out.zero) {
        out.j_prime.push_back(x);
      }
    }
    auto rset = detail::reach(sz, out.eta_e, {&cl.right}, k);
    auto lset = detail::reach(sz, out.eta_e, {&cl.left}, k);
    out.subgroup.push_back(out.eta_e);
    for (auto x : out.j_prime) {
      if (x != out.eta_e && rset[x] && lset[x]) {
        out.subgroup.push_back(x);
      }
    }

    // theta: 1,1-entry selection, an isomorphism G_{eta(e)} -> H
    std::vector<bool> seen(h.size(), false);
    for (auto x : out.subgroup) {
      auto v = cl.elements[x].at(0, 0);
      if (!v) {
        detail::fail(ErrorCode::check_failed, "1,1-entry undefined on G_{eta(e)}");
      }
      if (seen[*v]) {
        detail::fail(ErrorCode::check_failed, "theta is not injective");
      }
      seen[*v] = true;
      out.theta.push_back(*v);
      if (embed.rees.group.elements[in.alpha[*v]] != out.rho[x]) {
        detail::fail(ErrorCode::check_failed, "alpha theta != rho on G_{eta(e)}");
      }
    }
    if (out.subgroup.size() != h.size()) {
      detail::fail(ErrorCode::check_failed, "|G_{eta(e)}| = " + std::to_string(out.subgroup.size())
                                                + " but |H| = " + std::to_string(h.size()));
    }
    if (out.theta[0] != h.identity()) {
      detail::fail(ErrorCode::check_failed, "theta(eta(e)) is not the identity");
    }
    for (std::size_t i = 0; i < out.subgroup.size(); ++i) {
      for (std::size_t t = 0; t < out.subgroup.size(); ++t) {
        auto prod = mul(cl.elements[out.subgroup[i]], cl.elements[out.subgroup[t]]);
        if (prod.at(0, 0) != std::optional<Element>(h(out.theta[i], out.theta[t]))) {
          detail::fail(ErrorCode::check_failed, "theta is not a homomorphism");
        }
      }
    }

    // block entries of an element are the alpha-bar preimages of its image
    auto preimages = [&](Element sx) {
      std::vector<RowMonomialMatrix> outv;
      auto                           u = sigma_bar(sx);
      for (std::size_t jdx = 0; jdx < ell; ++jdx) {
        outv.push_back(twist(jdx, u));
      }
      return outv;
    };
    auto block_entries = [&](RowMonomialMatrix const& mx) {
      std::vector<RowMonomialMatrix> outv;
      for (std::size_t i = 0; i < p; ++i) {
        if (auto u = shape.block_entry(mx, i)) {
          outv.push_back(*u);
        }
      }
      return outv;
    };
    // Block entries are always preimages; equality of the two sets is
    // recorded, not asserted, as it fails once N is non-trivial and some
    // M_w has two non-zero rows in one column.
    auto compare = [&](Element x, Word const& w) {
      auto entries = block_entries(cl.elements[x]);
      auto pre     = preimages(out.rho[x]);
      std::unordered_set<RowMonomialMatrix> se(entries.begin(), entries.end()), sp(pre.begin(), pre.end());
      for (auto const& u : se) {
        if (!sp.contains(u)) {
          detail::fail(ErrorCode::check_failed,
                       "a block entry of eta(" + detail::word_string(w) + ") is not a preimage");
        }
      }
      if (se.size() != sp.size() && !out.allthere_counterexample) {
        out.allthere_counterexample = PreimageGap{w, se.size(), sp.size()};
      }
    };
    for (auto x : out.j_prime) {
      std::set<std::size_t> cols;
      for (std::size_t i = 0; i < p; ++i) {
        cols.insert(*shape.block_column(cl.elements[x], i));
      }
      if (cols.size() != 1) {
        detail::fail(ErrorCode::check_failed, "block entries of a J' element span several columns");
      }
      compare(x, cl.witness(x));
    }

    // words over x1..xn containing xn with non-zero image
    {
      Word w;
      auto rec = [&](auto&& self, Element x, std::size_t depth, bool has_n) -> void {
        if (has_n && out.rho[x] != zero_s) {
          ++out.allthere_words;
          compare(x, w);
        }
        if (depth == in.allthere_length || out.rho[x] == zero_s) {
          return;
        }
        for (Letter a = 0; a < n; ++a) {
          w.push_back(a);
          self(self, cl.right_mult(x, a), depth + 1, has_n || a == n - 1);
          w.pop_back();
        }
      };
      for (Letter a = 0; a < n; ++a) {
        w = {a};
        rec(rec, cl.generator_index[a], 1, a == n - 1);
      }
    }

    // rho eta = phi on all words up to word_length, by simultaneous walk
    {
      auto rec = [&](auto&& self, Element x, Element sx, std::size_t depth) -> void {
        ++out.words_checked;
        if (out.rho[x] != sx) {
          detail::fail(ErrorCode::check_failed, "rho eta != phi");
        }
        if (depth == in.word_length) {
          return;
        }
        for (Letter a = 0; a < k; ++a) {
          self(self, cl.right_mult(x, a), s(sx, gens[a]), depth + 1);
        }
      };
      for (Letter a = 0; a < k; ++a) {
        rec(rec, cl.generator_index[a], gens[a], 1);
      }
    }

    // eta(u) = 0 iff phi(u) = 0 on random words
    {
      std::mt19937_64                            rng(in.seed);
      std::uniform_int_distribution<std::size_t> len(1, 24);
      std::uniform_int_distribution<std::size_t> letter(0, 4 * k - 1);
      for (std::size_t t = 0; t < in.samples; ++t) {
        std::size_t L = len(rng);
        Word        u;
        for (std::size_t i = 0; i < L; ++i) {
          // the zero letter is drawn rarely
          std::size_t r = letter(rng);
          u.push_back(static_cast<Letter>(r < 4 * n ? r % n : n));
        }
        bool ez = eval_gm(u).is_zero();
        bool pz = s.evaluate(u) == zero_s;
        if (ez != pz) {
          detail::fail(ErrorCode::check_failed, "eta(u) = 0 differs from phi(u) = 0 for u = "
                                                    + detail::word_string(u));
        }
        ++out.samples_checked;
      }
    }
    return out;
  }

  //! Serialises a cover: header, generator matrices and morphism tables.
  //! Cover input for the syntactic semigroup of a shift with at least two
  //! letters: S_X plus a zero letter, e = (z^w y)^w and K = H_e. With
  //! `extra` unset H = K and alpha is the identity; otherwise H = K x Z_extra
  //! and alpha is the projection onto K.
  inline CoverInput shift_cover_input(SyntacticData const& d, Word z, Word y,
                                      std::optional<std::size_t> extra = std::nullopt) {
    if (d.alphabet().size() < 2) {
      detail::fail(ErrorCode::hypothesis_violated, "the cover needs at least two letters");
    }
    auto s = std::make_shared<FiniteSemigroup const>(with_zero_letter(*d.semigroup, d.letter_map));
    CoverInput in;
    in.semigroup = s;
    in.z         = std::move(z);
    in.y         = std::move(y);
    Element zw   = omega_power(*s, s->evaluate(in.z));
    Element e    = omega_power(*s, (*s)(zw, s->evaluate(in.y)));
    auto    k    = maximal_subgroup(*s, e).group;
    if (!extra) {
      in.h = k;
      for (Element a = 0; a < k.size(); ++a) {
        in.alpha.push_back(a);
      }
      return in;
    }
    if (*extra == 0) {
      detail::fail(ErrorCode::invalid_argument, "Z_0 is not a group");
    }
    in.h = Group::direct_product(k, Group::cyclic(*extra));
    for (Element a = 0; a < in.h.size(); ++a) {
      in.alpha.push_back(static_cast<Element>(a / *extra));
    }
    return in;
  }

  inline std::string write_cover(CoverResult const& c) {
    std::string out = "cover p " + std::to_string(c.shape.p) + " b " + std::to_string(c.shape.b)
                      + " m " + std::to_string(c.m) + " ell " + std::to_string(c.ell) + " shift "
                      + std::to_string(c.shift) + " size " + std::to_string(c.size()) + "\n";
    for (std::size_t a = 0; a < c.generators.size(); ++a) {
      out += "generator x" + std::to_string(a + 1) + "\n";
      out += write_block_matrix(c.generators[a], c.shape, c.h);
    }
    out += "rho";
    for (auto x : c.rho) {
      out += " " + std::to_string(x);
    }
    out += "\ntheta";
    for (std::size_t i = 0; i < c.subgroup.size(); ++i) {
      out += " " + std::to_string(c.subgroup[i]) + ":" + c.h.name(c.theta[i]);
    }
    out += "\npreimages ";
    if (auto const& gap = c.allthere_counterexample) {
      out += "incomplete " + detail::word_string(gap->word) + " " + std::to_string(gap->block_entries) + "/"
             + std::to_string(gap->preimages);
    } else {
      out += "complete";
    }
    out += "\n";
    return out;
  }

}  // namespace sofic
