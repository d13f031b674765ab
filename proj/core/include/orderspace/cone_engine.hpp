#pragma once

// Semigroup closures inside word-metric balls, purity, Conrad sign-vector
// tests, non-extendability certificates and greedy extension to a total
// cone.
//
// Closures keep a product only when it lands in the ball, so they
// under-approximate the real sub-semigroup. Finding e is therefore a fact
// (the derivation multiplies out to e exactly); not finding it is only
// evidence at that radius.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "orderspace/cone_description.hpp"
#include "orderspace/error.hpp"
#include "orderspace/group_oracles.hpp"

namespace orderspace {

  inline constexpr std::size_t default_closure_budget = 500'000;
  inline constexpr std::size_t default_greedy_budget  = 200'000;

  ////////////////////////////////////////////////////////////////////////
  // Ball arithmetic
  ////////////////////////////////////////////////////////////////////////

  // Products of ball elements by index; npos when the product leaves the
  // ball. A full table is built for balls of at most table_limit elements.
  template <GroupOracle G>
  class BallArithmetic {
   public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BallArithmetic(G const& g, Ball<G> const& ball,
                   std::size_t table_limit = 2048)
        : _g(g), _ball(ball) {
      auto const n = ball.size();
      _inverse.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        _inverse[i] = lookup(g.invert(ball[i]));
      }
      if (n <= table_limit) {
        _table.resize(n * n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            _table[i * n + j] = static_cast<std::uint32_t>(
                std::min<std::size_t>(lookup(g.multiply(ball[i], ball[j])),
                                      UINT32_MAX));
          }
        }
      }
    }

    G const& group() const noexcept { return _g; }
    Ball<G> const& ball() const noexcept { return _ball; }
    std::size_t size() const noexcept { return _ball.size(); }
    std::size_t inverse(std::size_t i) const { return _inverse[i]; }

    std::size_t product(std::size_t i, std::size_t j) const {
      if (!_table.empty()) {
        auto const v = _table[i * _ball.size() + j];
        return v == UINT32_MAX ? npos : v;
      }
      return lookup(_g.multiply(_ball[i], _ball[j]));
    }

   private:
    std::size_t lookup(typename G::element const& x) const {
      auto const i = _ball.index_of(x);
      return i ? *i : npos;
    }

    G const& _g;
    Ball<G> const& _ball;
    std::vector<std::size_t> _inverse;
    std::vector<std::uint32_t> _table;
  };

  ////////////////////////////////////////////////////////////////////////
  // Seeds and derivations
  ////////////////////////////////////////////////////////////////////////

  template <typename E>
  struct Seed {
    E value;
    std::string label;
  };

  // An explicit product of seed elements, left to right.
  template <typename E>
  struct Derivation {
    std::vector<E> factors;
    std::vector<std::string> labels;

    std::string str() const {
      std::string out;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) {
          out += " * ";
        }
        out += labels[i];
      }
      return out;
    }
  };

  template <GroupOracle G>
  typename G::element evaluate(G const& g,
                               Derivation<typename G::element> const& d) {
    auto x = g.identity();
    for (auto const& f : d.factors) {
      x = g.multiply(x, f);
    }
    return x;
  }

  // Words to seeds; the identity is not allowed.
  template <GroupOracle G>
  std::vector<Seed<typename G::element>> parse_seeds(
      G const& g, std::vector<std::string> const& words) {
    std::vector<Seed<typename G::element>> seeds;
    for (auto const& w : words) {
      auto x = parse_word(g, w);
      if (x == g.identity()) {
        throw InvalidInput("seed word \"" + w +
                           "\" is the identity; a pure seed cannot contain e");
      }
      seeds.push_back({std::move(x), w});
    }
    return seeds;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closures
  ////////////////////////////////////////////////////////////////////////

  struct ClosureOptions {
    std::size_t budget = default_closure_budget;
    bool stop_at_identity = false;
  };

  // sgr of the seeds restricted to the ball: the least set containing the
  // seeds and every in-ball product of two members. Members and their
  // derivations are kept by ball index. More seeds can be added and the
  // fixpoint resumed.
  template <GroupOracle G>
  class Cone {
   public:
    using element = typename G::element;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Cone(BallArithmetic<G> const& arith, ClosureOptions options = {})
        : _arith(&arith),
          _options(options),
          _member(arith.size(), 0),
          _left(arith.size(), npos),
          _right(arith.size(), npos) {}

    // Throws InvalidInput when the seed lies outside the ball.
    void add_seed(Seed<element> seed) {
      auto const i = _arith->ball().index_of(seed.value);
      if (!i) {
        throw InvalidInput("seed " + seed.label + " lies outside the radius-" +
                           std::to_string(_arith->ball().radius()) + " ball");
      }
      _seeds.push_back(std::move(seed));
      if (!_member[*i]) {
        _left[*i] = _seeds.size() - 1;
        insert(*i);
      }
    }

    void close() {
      auto const& a = *_arith;
      while (_processed < _order.size()) {
        if (_options.stop_at_identity && contains_identity()) {
          return;
        }
        auto const x = _order[_processed++];
        for (std::size_t k = 0; k < _processed; ++k) {
          auto const y = _order[k];
          for (auto [l, r] : {std::pair{y, x}, std::pair{x, y}}) {
            auto const p = a.product(l, r);
            if (p == npos || _member[p]) {
              continue;
            }
            if (_order.size() >= _options.budget) {
              _partial = true;
              return;
            }
            _left[p]  = l;
            _right[p] = r;
            insert(p);
            if (_options.stop_at_identity && p == 0) {
              return;
            }
          }
        }
      }
    }

    BallArithmetic<G> const& arithmetic() const noexcept { return *_arith; }
    std::size_t radius() const noexcept { return _arith->ball().radius(); }
    std::vector<Seed<element>> const& seeds() const noexcept { return _seeds; }
    bool partial() const noexcept { return _partial; }
    std::size_t size() const noexcept { return _order.size(); }
    std::vector<std::size_t> const& members() const noexcept { return _order; }
    bool contains(std::size_t i) const { return _member[i] != 0; }
    bool contains(element const& x) const {
      auto const i = _arith->ball().index_of(x);
      return i && _member[*i];
    }
    bool contains_identity() const { return _member[0] != 0; }
    std::vector<std::uint8_t> const& membership() const noexcept {
      return _member;
    }

    // Throws BudgetExceeded beyond max_factors factors.
    Derivation<element> derivation(std::size_t i,
                                   std::size_t max_factors = 1'000'000) const {
      if (!_member[i]) {
        throw InvalidInput("element is not in the closure");
      }
      Derivation<element> d;
      std::vector<std::size_t> stack{i};
      while (!stack.empty()) {
        auto const x = stack.back();
        stack.pop_back();
        if (_right[x] == npos) {
          auto const& s = _seeds[_left[x]];
          d.factors.push_back(s.value);
          d.labels.push_back(s.label);
          if (d.factors.size() > max_factors) {
            throw BudgetExceeded("derivation longer than " +
                                 std::to_string(max_factors) + " factors");
          }
        } else {
          stack.push_back(_right[x]);
          stack.push_back(_left[x]);
        }
      }
      return d;
    }

   private:
    void insert(std::size_t i) {
      _member[i] = 1;
      _order.push_back(i);
    }

    BallArithmetic<G> const* _arith;
    ClosureOptions _options;
    std::vector<Seed<element>> _seeds;
    std::vector<std::uint8_t> _member;
    std::vector<std::size_t> _order;
    // Seed index in _left with _right == npos, or the two factors.
    std::vector<std::size_t> _left;
    std::vector<std::size_t> _right;
    std::size_t _processed = 0;
    bool _partial = false;
  };

  template <GroupOracle G>
  Cone<G> sgr_closure(BallArithmetic<G> const& arith,
                      std::vector<Seed<typename G::element>> const& seeds,
                      ClosureOptions options = {}) {
    Cone<G> cone(arith, options);
    for (auto const& s : seeds) {
      cone.add_seed(s);
    }
    cone.close();
    return cone;
  }

  struct PurityReport {
    bool pure = true;
    bool contains_identity = false;
    // First member g (closure order) whose inverse is also a member.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
  };

  // Ball-relative: only the members found at this radius are compared.
  template <GroupOracle G>
  PurityReport purity_check(Cone<G> const& cone) {
    PurityReport report;
    report.contains_identity = cone.contains_identity();
    auto const& a = cone.arithmetic();
    for (auto const i : cone.members()) {
      auto const inv = a.inverse(i);
      if (inv != Cone<G>::npos && cone.contains(inv)) {
        report.pure    = false;
        report.witness = std::pair{i, inv};
        break;
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Conrad's test
  ////////////////////////////////////////////////////////////////////////

  template <typename E>
  struct SignVector {
    std::vector<E> elements;
    std::vector<int> signs;
  };

  // Sign vector number v for k elements: element i is positive iff bit
  // k-1-i of v is set, so v = 0 is all -1 and vectors run in binary order.
  inline std::vector<int> sign_vector(std::size_t k, std::uint64_t v) {
    std::vector<int> signs(k);
    for (std::size_t i = 0; i < k; ++i) {
      signs[i] = (v >> (k - 1 - i)) & 1 ? 1 : -1;
    }
    return signs;
  }

  inline std::string sign_string(std::vector<int> const& signs) {
    std::string out = "(";
    for (std::size_t i = 0; i < signs.size(); ++i) {
      out += i > 0 ? "," : "";
      out += signs[i] > 0 ? '+' : '-';
    }
    return out + ")";
  }

  template <typename E>
  struct SignOutcome {
    std::vector<int> signs;
    bool e_found = false;
    bool partial = false;
    std::optional<Derivation<E>> derivation;  // when e_found
  };

  template <typename E>
  struct ConradResult {
    std::vector<E> x;
    std::size_t radius = 0;
    std::vector<SignOutcome<E>> outcomes;

    bool survives() const {
      return std::any_of(outcomes.begin(), outcomes.end(),
                         [](auto const& o) { return !o.e_found; });
    }
  };

  // The seed list P u X^eps used for one sign vector.
  template <GroupOracle G>
  std::vector<Seed<typename G::element>> augmented_seeds(
      G const& g, std::vector<Seed<typename G::element>> const& p,
      std::vector<typename G::element> const& x, std::vector<int> const& signs) {
    auto seeds = p;
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto v = signs[i] > 0 ? x[i] : g.invert(x[i]);
      auto label = g.render(v);
      seeds.push_back({std::move(v), std::move(label)});
    }
    return seeds;
  }

  template <GroupOracle G>
  SignOutcome<typename G::element> run_sign_vector(
      BallArithmetic<G> const& arith,
      std::vector<Seed<typename G::element>> const& p,
      std::vector<typename G::element> const& x, std::vector<int> signs,
      std::size_t budget) {
    auto const& g = arith.group();
    auto cone = sgr_closure(arith, augmented_seeds(g, p, x, signs),
                            ClosureOptions{budget, true});
    SignOutcome<typename G::element> out;
    out.signs   = std::move(signs);
    out.partial = cone.partial();
    if (cone.contains_identity()) {
      out.e_found    = true;
      out.derivation = cone.derivation(0);
      if (!(evaluate(g, *out.derivation) == g.identity())) {
        throw InternalError("derivation of e does not multiply out to e");
      }
    }
    return out;
  }

  // All 2^|X| sign vectors; vectors are split across threads and merged in
  // vector order.
  template <GroupOracle G>
  ConradResult<typename G::element> conrad_test(
      BallArithmetic<G> const& arith,
      std::vector<Seed<typename G::element>> const& p,
      std::vector<typename G::element> const& x, unsigned threads = 1,
      std::size_t budget = default_closure_budget) {
    auto const& g = arith.group();
    for (auto const& xi : x) {
      if (xi == g.identity()) {
        throw InvalidInput("X may not contain the identity");
      }
      if (!arith.ball().contains(xi)) {
        throw InvalidInput("element " + g.render(xi) + " lies outside the ball");
      }
    }
    if (x.size() > 20) {
      throw InvalidInput("at most 20 elements in X");
    }
    ConradResult<typename G::element> result;
    result.x      = x;
    result.radius = arith.ball().radius();
    std::uint64_t const count = std::uint64_t{1} << x.size();
    result.outcomes.resize(count);
    auto work = [&](std::uint64_t first, std::uint64_t stride) {
      for (auto v = first; v < count; v += stride) {
        result.outcomes[v] =
            run_sign_vector(arith, p, x, sign_vector(x.size(), v), budget);
      }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (threads == 1) {
      work(0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(work, t, threads);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates
  ////////////////////////////////////////////////////////////////////////

  template <typename E>
  struct Certificate {
    std::vector<E> x;
    std::vector<std::size_t> x_indices;  // ball indices
    std::size_t radius = 0;
    // One per sign vector, in binary order.
    std::vector<std::vector<int>> signs;
    std::vector<Derivation<E>> derivations;
  };

  // Re-evaluates every derivation with exact arithmetic and checks that each
  // factor is a seed of its sign vector.
  template <GroupOracle G>
  bool verify_certificate(G const& g,
                          std::vector<Seed<typename G::element>> const& p,
                          Certificate<typename G::element> const& c) {
    if (c.derivations.size() != (std::size_t{1} << c.x.size()) ||
        c.signs.size() != c.derivations.size()) {
      return false;
    }
    for (std::size_t v = 0; v < c.derivations.size(); ++v) {
      auto const seeds = augmented_seeds(g, p, c.x, c.signs[v]);
      for (auto const& f : c.derivations[v].factors) {
        if (std::none_of(seeds.begin(), seeds.end(),
                         [&](auto const& s) { return s.value == f; })) {
          return false;
        }
      }
      if (c.derivations[v].factors.empty() ||
          !(evaluate(g, c.derivations[v]) == g.identity())) {
        return false;
      }
    }
    return true;
  }

  struct WitnessOptions {
    std::size_t max_set_size = 1;
    std::size_t closure_budget = default_closure_budget;
    std::size_t cache_limit = 256;
  };

  struct WitnessStats {
    std::uint64_t subsets = 0;
    std::uint64_t closures = 0;
    std::uint64_t cache_hits = 0;
    bool partial = false;
  };

  template <typename E>
  struct WitnessSearch {
    std::optional<Certificate<E>> certificate;
    WitnessStats stats;
  };

  // Subsets X of the non-identity ball elements by size, then
  // lexicographically by ball index, until every sign vector traps e.
  //
  // A vector is E-ABSENT as soon as P u X^eps fits inside a known closed
  // set without e (a closure from an earlier vector, or a hint such as a
  // greedy extension): the in-ball closure is the least such set.
  template <GroupOracle G>
  WitnessSearch<typename G::element> find_nonextend_witness(
      BallArithmetic<G> const& arith,
      std::vector<Seed<typename G::element>> const& p,
      WitnessOptions const& options,
      std::vector<std::vector<std::uint8_t>> hints = {}) {
    if (options.max_set_size == 0) {
      throw InvalidInput("witness set size must be at least 1");
    }
    auto const& g   = arith.group();
    auto const& b   = arith.ball();
    auto const n    = b.size();
    auto cache      = std::move(hints);
    WitnessSearch<typename G::element> out;

    auto covered = [&](std::vector<std::size_t> const& xs,
                       std::vector<int> const& signs) {
      for (auto const& c : cache) {
        bool ok = true;
        for (std::size_t i = 0; i < xs.size() && ok; ++i) {
          auto const idx = signs[i] > 0 ? xs[i] : arith.inverse(xs[i]);
          ok = idx != BallArithmetic<G>::npos && c[idx];
        }
        if (ok) {
          return true;
        }
      }
      return false;
    };

    std::vector<std::size_t> xs;
    for (std::size_t k = 1; k <= std::min(options.max_set_size, n - 1); ++k) {
      xs.resize(k);
      for (std::size_t i = 0; i < k; ++i) {
        xs[i] = i + 1;
      }
      while (true) {
        ++out.stats.subsets;
        auto const count = std::uint64_t{1} << k;
        bool survives    = false;
        for (std::uint64_t v = 0; v < count && !survives; ++v) {
          if (covered(xs, sign_vector(k, v))) {
            survives = true;
            ++out.stats.cache_hits;
          }
        }
        std::vector<typename G::element> x;
        for (auto i : xs) {
          x.push_back(b[i]);
        }
        Certificate<typename G::element> cert;
        for (std::uint64_t v = 0; v < count && !survives; ++v) {
          auto signs = sign_vector(k, v);
          auto cone  = sgr_closure(arith, augmented_seeds(g, p, x, signs),
                                   ClosureOptions{options.closure_budget, true});
          ++out.stats.closures;
          out.stats.partial = out.stats.partial || cone.partial();
          if (!cone.contains_identity()) {
            survives = true;
            if (!cone.partial() && cache.size() < options.cache_limit) {
              cache.push_back(cone.membership());
            }
            break;
          }
          auto d = cone.derivation(0);
          if (!(evaluate(g, d) == g.identity())) {
            throw InternalError("derivation of e does not multiply out to e");
          }
          cert.signs.push_back(std::move(signs));
          cert.derivations.push_back(std::move(d));
        }
        if (!survives) {
          cert.x         = std::move(x);
          cert.x_indices = xs;
          cert.radius    = b.radius();
          out.certificate = std::move(cert);
          return out;
        }
        // Next k-subset of [1, n).
        std::size_t i = k;
        while (i > 0 && xs[i - 1] == n - 1 - (k - i)) {
          --i;
        }
        if (i == 0) {
          break;
        }
        ++xs[i - 1];
        for (auto j = i; j < k; ++j) {
          xs[j] = xs[j - 1] + 1;
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cone descriptions
  ////////////////////////////////////////////////////////////////////////

  template <typename E>
  struct ConeDescription {
    std::string name;
    std::function<bool(E const&)> contains;
  };

  template <CoordinateGroup G>
  ConeDescription<typename G::element> predicate_cone(G const& g,
                                                      Predicate predicate,
                                                      std::string name = {}) {
    if (predicate.coordinate_names() != g.coordinate_names()) {
      throw InvalidInput("predicate coordinates do not match " + g.name());
    }
    if (name.empty()) {
      name = predicate.str();
    }
    return {std::move(name), [g, predicate = std::move(predicate)](auto const& x) {
              auto const c = g.coordinates(x);
              return predicate.eval(c);
            }};
  }

  // The 2^k cones "first nonzero coordinate has sign eps_i", in binary
  // order of the sign vector, + first.
  template <CoordinateGroup G>
  std::vector<ConeDescription<typename G::element>> lex_sign_cones(G const& g) {
    auto const names = g.coordinate_names();
    auto const k     = names.size();
    std::vector<ConeDescription<typename G::element>> cones;
    for (std::uint64_t v = (std::uint64_t{1} << k); v-- > 0;) {
      auto const signs = sign_vector(k, v);
      auto predicate = lex_sign_predicate(names, signs);
      auto name = "lex" + sign_string(signs) + " {" + predicate.str() + "}";
      cones.push_back(predicate_cone(g, std::move(predicate), std::move(name)));
    }
    return cones;
  }

  template <GroupOracle G>
  std::vector<ConeDescription<typename G::element>> candidate_cones(G const& g) {
    if constexpr (CoordinateGroup<G>) {
      return lex_sign_cones(g);
    } else {
      return {};
    }
  }

  // Membership in a set of ball indices.
  template <GroupOracle G>
  ConeDescription<typename G::element> ball_set_cone(
      Ball<G> const& ball, std::vector<std::uint8_t> members, std::string name) {
    return {std::move(name), [&ball, members = std::move(members)](auto const& x) {
              auto const i = ball.index_of(x);
              return i && members[*i] != 0;
            }};
  }

  struct ConeCheck {
    bool semigroup = true;
    bool pure = true;
    bool total = true;
    // Ball indices of the first failure of each kind.
    std::optional<std::pair<std::size_t, std::size_t>> product_escape;
    std::optional<std::size_t> impure_element;  // g with g, g^-1 in; 0 if e in
    std::optional<std::size_t> undecided;       // g, g^-1 both out

    bool passed() const noexcept { return semigroup && pure && total; }
  };

  // Over the ball: in-ball products of members are members, e is out and
  // no g, g^-1 are both in, and every g != e has g or g^-1 in.
  template <GroupOracle G>
  ConeCheck verify_cone_total(BallArithmetic<G> const& arith,
                              ConeDescription<typename G::element> const& d) {
    auto const& b = arith.ball();
    auto const n  = b.size();
    std::vector<std::uint8_t> in(n);
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      in[i] = d.contains(b[i]) ? 1 : 0;
      if (in[i]) {
        members.push_back(i);
      }
    }
    ConeCheck c;
    if (in[0]) {
      c.pure           = false;
      c.impure_element = 0;
    }
    for (std::size_t i = 1; i < n; ++i) {
      auto const inv = arith.inverse(i);
      bool const inv_in = inv != BallArithmetic<G>::npos && in[inv];
      if (in[i] && inv_in && c.pure) {
        c.pure           = false;
        c.impure_element = i;
      }
      if (!in[i] && !inv_in && c.total) {
        c.total     = false;
        c.undecided = i;
      }
    }
    for (auto i : members) {
      for (auto j : members) {
        auto const p = arith.product(i, j);
        if (p != BallArithmetic<G>::npos && !in[p]) {
          c.semigroup      = false;
          c.product_escape = std::pair{i, j};
          return c;
        }
      }
    }
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Greedy extension
  ////////////////////////////////////////////////////////////////////////

  struct GreedyResult {
    bool success = false;
    bool exhausted_budget = false;
    std::uint64_t nodes = 0;
    // On success: the closed, e-free, total set (ball indices).
    std::vector<std::uint8_t> positive;
    // On success: sign per ball index (+1, -1; 0 for e).
    std::vector<int> signs;
    // On failure: decisions on the path to the first node where both signs
    // trapped e, ending with that node's element.
    std::vector<std::size_t> trace;
  };

  // Decides ball elements in ball order, trying g before g^-1, keeping the
  // in-ball closure of P and the positives free of e, and backtracking when
  // both signs trap e. A success is re-verified with verify_cone_total.
  template <GroupOracle G>
  GreedyResult greedy_extend(BallArithmetic<G> const& arith,
                             std::vector<Seed<typename G::element>> const& p,
                             std::size_t node_budget = default_greedy_budget,
                             std::size_t closure_budget = default_closure_budget) {
    GreedyResult result;
    auto root = sgr_closure(arith, p, ClosureOptions{closure_budget, true});
    if (root.contains_identity() || root.partial()) {
      result.exhausted_budget = root.partial();
      return result;
    }
    auto const n = arith.size();
    std::vector<std::size_t> path;
    bool trapped_seen = false;

    std::function<bool(Cone<G> const&, std::size_t)> walk =
        [&](Cone<G> const& cone, std::size_t from) -> bool {
      auto i = from;
      while (i < n && (i == 0 || cone.contains(i) ||
                       (arith.inverse(i) != Cone<G>::npos &&
                        cone.contains(arith.inverse(i))))) {
        ++i;
      }
      if (i == n) {
        result.positive = cone.membership();
        return true;
      }
      bool any_open = false;
      for (auto const choice : {i, arith.inverse(i)}) {
        if (choice == Cone<G>::npos) {
          continue;
        }
        if (++result.nodes > node_budget) {
          result.exhausted_budget = true;
          return false;
        }
        auto next = cone;
        next.add_seed({arith.ball()[choice], arith.group().render(arith.ball()[choice])});
        next.close();
        if (next.partial()) {
          result.exhausted_budget = true;
          return false;
        }
        if (next.contains_identity()) {
          continue;
        }
        any_open = true;
        path.push_back(i);
        if (walk(next, i + 1)) {
          return true;
        }
        path.pop_back();
        if (result.exhausted_budget) {
          return false;
        }
      }
      if (!any_open && !trapped_seen) {
        trapped_seen = true;
        result.trace = path;
        result.trace.push_back(i);
      }
      return false;
    };

    if (!walk(root, 1)) {
      return result;
    }
    result.success = true;
    result.signs.assign(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
      result.signs[i] = result.positive[i] ? 1 : -1;
    }
    auto const check = verify_cone_total(
        arith, ball_set_cone(arith.ball(), result.positive, "greedy"));
    if (!check.passed()) {
      throw InternalError("greedy extension failed re-verification");
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Adjudication
  ////////////////////////////////////////////////////////////////////////

  struct AdjudicationOptions {
    std::size_t min_radius = 4;
    std::size_t max_radius = 8;
    std::size_t witness_max = 3;
    std::size_t ball_budget = default_ball_budget;
    std::size_t closure_budget = default_closure_budget;
    std::size_t greedy_budget = default_greedy_budget;
  };

  struct RadiusRecord {
    std::size_t radius = 0;
    std::size_t ball_size = 0;
    std::size_t closure_size = 0;
    bool closure_has_identity = false;
    bool closure_pure = true;
    bool greedy_success = false;
    bool greedy_exhausted = false;
    bool witness_found = false;
    WitnessStats witness_stats;
    // Per candidate that contains every seed: passed at this radius.
    std::vector<std::pair<std::string, bool>> candidates;
  };

  enum class Verdict : std::uint8_t { certificate, extension, inconclusive };

  inline std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::certificate:
        return "certificate";
      case Verdict::extension:
        return "extension";
      case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
  }

  template <typename E>
  struct Adjudication {
    Verdict verdict = Verdict::inconclusive;
    std::optional<Certificate<E>> certificate;
    std::optional<ConeDescription<E>> extension;
    std::vector<RadiusRecord> radii;
  };

  // For each radius: closure and purity of P, greedy extension, witness
  // search (seeded with the greedy set) and every candidate cone that
  // contains the seeds. A certificate next to a greedy success or a
  // verified candidate is an internal error.
  template <GroupOracle G>
  Adjudication<typename G::element> adjudicate(
      G const& g, std::vector<Seed<typename G::element>> const& p,
      std::vector<ConeDescription<typename G::element>> const& candidates,
      AdjudicationOptions const& options) {
    if (options.min_radius > options.max_radius) {
      throw InvalidInput("empty radius range");
    }
    Adjudication<typename G::element> out;
    std::vector<std::size_t> eligible;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (std::all_of(p.begin(), p.end(), [&](auto const& s) {
            return candidates[c].contains(s.value);
          })) {
        eligible.push_back(c);
      }
    }
    std::vector<bool> verified(candidates.size(), true);
    for (auto r = options.min_radius; r <= options.max_radius; ++r) {
      Ball<G> ball(g, r, options.ball_budget);
      BallArithmetic<G> arith(g, ball);
      RadiusRecord rec;
      rec.radius    = r;
      rec.ball_size = ball.size();
      auto const closure = sgr_closure(arith, p, ClosureOptions{options.closure_budget});
      rec.closure_size         = closure.size();
      rec.closure_has_identity = closure.contains_identity();
      rec.closure_pure         = purity_check(closure).pure;

      auto const greedy = greedy_extend(arith, p, options.greedy_budget,
                                        options.closure_budget);
      rec.greedy_success   = greedy.success;
      rec.greedy_exhausted = greedy.exhausted_budget;

      std::vector<std::vector<std::uint8_t>> hints;
      if (greedy.success) {
        hints.push_back(greedy.positive);
      }
      auto witness = find_nonextend_witness(
          arith, p,
          WitnessOptions{options.witness_max, options.closure_budget, 256},
          std::move(hints));
      rec.witness_found = witness.certificate.has_value();
      rec.witness_stats = witness.stats;
      if (rec.witness_found && greedy.success) {
        throw InternalError("radius " + std::to_string(r) +
                            ": certificate and greedy extension both reported");
      }
      if (witness.certificate) {
        if (!verify_certificate(g, p, *witness.certificate)) {
          throw InternalError("certificate failed re-evaluation");
        }
        if (!out.certificate) {
          out.certificate = std::move(witness.certificate);
        }
      }
      for (auto c : eligible) {
        bool const ok = verify_cone_total(arith, candidates[c]).passed();
        verified[c]   = verified[c] && ok;
        rec.candidates.emplace_back(candidates[c].name, ok);
      }
      out.radii.push_back(std::move(rec));
    }
    for (auto c : eligible) {
      if (verified[c]) {
        out.extension = candidates[c];
        break;
      }
    }
    if (out.certificate && out.extension) {
      throw InternalError("certificate and verified total cone " +
                          out.extension->name + " both reported");
    }
    out.verdict = out.certificate ? Verdict::certificate
                  : out.extension ? Verdict::extension
                                  : Verdict::inconclusive;
    return out;
  }

}  // namespace orderspace
