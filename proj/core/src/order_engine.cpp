#include "orderspace/order_engine.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <thread>

#include "orderspace/detail/line_reader.hpp"
#include "orderspace/error.hpp"

namespace orderspace {

  std::string_view to_string(Side side) noexcept {
    switch (side) {
      case Side::left:
        return "left";
      case Side::right:
        return "right";
      case Side::bi:
        return "bi";
    }
    return "?";
  }

  std::optional<Side> parse_side(std::string_view text) noexcept {
    if (text == "left") {
      return Side::left;
    }
    if (text == "right") {
      return Side::right;
    }
    if (text == "bi") {
      return Side::bi;
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // OrderRelation, ConstraintSet
  ////////////////////////////////////////////////////////////////////////

  OrderRelation::OrderRelation(std::size_t n)
      : OrderRelation(n, std::vector<PairState>(n * n, PairState::undecided)) {}

  OrderRelation::OrderRelation(std::size_t n, std::vector<PairState> states)
      : _n(n), _states(std::move(states)) {
    if (n > max_size) {
      throw BudgetExceeded("order relation on " + std::to_string(n) +
                           " elements exceeds the cap of " +
                           std::to_string(max_size));
    }
    if (_states.size() != n * n) {
      throw InvalidInput("pair matrix has the wrong size");
    }
    for (std::size_t a = 0; a < n; ++a) {
      _states[a * n + a] = PairState::fails;
    }
  }

  OrderRelation OrderRelation::from_ranking(std::span<Element const> ascending) {
    auto const n = ascending.size();
    std::vector<bool> seen(n, false);
    for (auto x : ascending) {
      if (x >= n || seen[x]) {
        throw InvalidInput("ranking is not a permutation of 0.." +
                           std::to_string(n == 0 ? 0 : n - 1));
      }
      seen[x] = true;
    }
    OrderRelation r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) {
          r._states[ascending[i] * n + ascending[j]] =
              i < j ? PairState::holds : PairState::fails;
        }
      }
    }
    return r;
  }

  void OrderRelation::set(Element a, Element b, PairState s) {
    if (a >= _n || b >= _n) {
      throw InvalidInput("pair out of range");
    }
    if (a == b) {
      throw InvalidInput("diagonal pairs are not part of an order relation");
    }
    _states[static_cast<std::size_t>(a) * _n + b] = s;
  }

  bool OrderRelation::completed() const noexcept {
    return std::none_of(_states.begin(), _states.end(), [](PairState s) {
      return s == PairState::undecided;
    });
  }

  std::vector<Element> OrderRelation::ranking() const {
    // In a strict total order the element with k predecessors sits at k.
    std::vector<Element> result(_n, static_cast<Element>(_n));
    for (Element b = 0; b < _n; ++b) {
      std::size_t below = 0;
      for (Element a = 0; a < _n; ++a) {
        if (a == b) {
          continue;
        }
        auto const ab = state(a, b), ba = state(b, a);
        if (ab == PairState::undecided || ab == ba) {
          throw InvalidInput("relation is not a strict total order");
        }
        below += ab == PairState::holds;
      }
      if (result[below] != _n) {
        throw InvalidInput("relation is not a strict total order");
      }
      result[below] = b;
    }
    for (std::size_t i = 0; i + 1 < _n; ++i) {
      if (!holds(result[i], result[i + 1])) {
        throw InvalidInput("relation is not a strict total order");
      }
    }
    return result;
  }

  ConstraintSet::ConstraintSet(std::vector<Pair> pairs)
      : _pairs(std::move(pairs)) {
    std::sort(_pairs.begin(), _pairs.end());
    _pairs.erase(std::unique(_pairs.begin(), _pairs.end()), _pairs.end());
    for (auto const& [a, b] : _pairs) {
      if (a == b) {
        throw InvalidInput("constraint (" + std::to_string(a) + ", " +
                           std::to_string(b) + ") lies on the diagonal");
      }
      if (std::binary_search(_pairs.begin(), _pairs.end(), Pair{b, a})) {
        throw InvalidInput("constraints contain both (" + std::to_string(a) +
                           ", " + std::to_string(b) + ") and its reverse");
      }
    }
  }

  std::optional<ConstraintSet> ConstraintSet::merged(
      ConstraintSet const& other) const {
    std::vector<Pair> all(_pairs.begin(), _pairs.end());
    all.insert(all.end(), other._pairs.begin(), other._pairs.end());
    try {
      return ConstraintSet(std::move(all));
    } catch (InvalidInput const&) {
      return std::nullopt;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  std::string_view condition_label(Condition c) noexcept {
    switch (c) {
      case Condition::invariance:
        return "(i)";
      case Condition::transitivity:
        return "(ii)";
      case Condition::antisymmetry:
        return "(iii)";
    }
    return "?";
  }

  std::string describe(Violation const& v) {
    auto const s = [](Element x) { return std::to_string(x); };
    switch (v.condition) {
      case Condition::antisymmetry:
        return "condition (iii) antisymmetry fails at a=" + s(v.a) +
               " b=" + s(v.b);
      case Condition::transitivity:
        return "condition (ii) transitivity fails at a=" + s(v.a) +
               " b=" + s(v.b) + " c=" + s(v.c);
      case Condition::invariance:
        return "condition (i) " + std::string(to_string(v.side)) +
               " invariance fails at c=" + s(v.c) + " a=" + s(v.a) +
               " b=" + s(v.b);
    }
    return "unknown violation";
  }

  Verification verify_order(Magma const& m, OrderRelation const& r,
                            Side side) {
    auto const n = static_cast<Element>(m.size());
    if (r.size() != n) {
      throw InvalidInput("order relation size " + std::to_string(r.size()) +
                         " does not match magma size " + std::to_string(n));
    }
    if (!r.completed()) {
      throw InvalidInput("order relation has undecided pairs");
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        if (r.holds(a, b) == r.holds(b, a)) {
          return {Violation{Condition::antisymmetry, a, b, a, side}};
        }
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!r.holds(a, b)) {
          continue;
        }
        for (Element c = 0; c < n; ++c) {
          if (r.holds(b, c) && !r.holds(a, c)) {
            return {Violation{Condition::transitivity, a, b, c, side}};
          }
        }
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!r.holds(a, b)) {
          continue;
        }
        for (Element c = 0; c < n; ++c) {
          if (checks_left(side) && !r.holds(m.op(c, a), m.op(c, b))) {
            return {Violation{Condition::invariance, a, b, c, Side::left}};
          }
          if (checks_right(side) && !r.holds(m.op(a, c), m.op(b, c))) {
            return {Violation{Condition::invariance, a, b, c, Side::right}};
          }
        }
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Propagation
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using States = std::vector<PairState>;

    class Closure {
     public:
      Closure(Magma const& m, Side side)
          : _m(m), _n(static_cast<Element>(m.size())), _side(side) {}

      Element size() const noexcept { return _n; }

      // Asserts (a, b) and closes. False on contradiction; st is then
      // unspecified.
      bool assert_and_close(States& st, Element a, Element b) {
        _work.clear();
        return add(st, a, b) && close(st);
      }

      // Normalises an arbitrary three-valued state and closes it.
      bool close_from(States& st) {
        _work.clear();
        for (Element a = 0; a < _n; ++a) {
          for (Element b = a + 1; b < _n; ++b) {
            auto const ab = st[idx(a, b)], ba = st[idx(b, a)];
            if (ab != PairState::undecided && ab == ba) {
              return false;
            }
            if (ab == PairState::holds || ba == PairState::fails) {
              st[idx(a, b)] = st[idx(b, a)] = PairState::undecided;
              if (!add(st, a, b)) {
                return false;
              }
            } else if (ba == PairState::holds || ab == PairState::fails) {
              st[idx(a, b)] = st[idx(b, a)] = PairState::undecided;
              if (!add(st, b, a)) {
                return false;
              }
            }
          }
        }
        return close(st);
      }

     private:
      std::size_t idx(Element a, Element b) const noexcept {
        return static_cast<std::size_t>(a) * _n + b;
      }

      bool add(States& st, Element a, Element b) {
        if (a == b) {
          return false;
        }
        auto& s = st[idx(a, b)];
        if (s == PairState::holds) {
          return true;
        }
        if (s == PairState::fails) {
          return false;
        }
        s              = PairState::holds;
        st[idx(b, a)]  = PairState::fails;
        _work.emplace_back(a, b);
        return true;
      }

      bool close(States& st) {
        for (std::size_t i = 0; i < _work.size(); ++i) {
          auto const [a, b] = _work[i];
          if (checks_left(_side)) {
            for (Element c = 0; c < _n; ++c) {
              if (!add(st, _m.op(c, a), _m.op(c, b))) {
                return false;
              }
            }
          }
          if (checks_right(_side)) {
            for (Element c = 0; c < _n; ++c) {
              if (!add(st, _m.op(a, c), _m.op(b, c))) {
                return false;
              }
            }
          }
          for (Element x = 0; x < _n; ++x) {
            if (st[idx(x, a)] == PairState::holds && !add(st, x, b)) {
              return false;
            }
            if (st[idx(b, x)] == PairState::holds && !add(st, a, x)) {
              return false;
            }
          }
        }
        return true;
      }

      Magma const& _m;
      Element _n;
      Side _side;
      std::vector<std::pair<Element, Element>> _work;
    };

  }  // namespace

  std::optional<OrderRelation> propagate(Magma const& m, OrderRelation state,
                                         Side side) {
    if (state.size() != m.size()) {
      throw InvalidInput("state size does not match magma size");
    }
    auto const n = static_cast<Element>(m.size());
    States st(static_cast<std::size_t>(n) * n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        st[static_cast<std::size_t>(a) * n + b] =
            a == b ? PairState::fails : state.state(a, b);
      }
    }
    Closure closure(m, side);
    if (!closure.close_from(st)) {
      return std::nullopt;
    }
    return OrderRelation(n, std::move(st));
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // A search node: a closed, consistent state and the index below which
    // every pair is decided.
    struct Node {
      States states;
      std::size_t first_open;
    };

    std::optional<std::size_t> first_undecided(States const& st,
                                                std::size_t from) {
      for (auto i = from; i < st.size(); ++i) {
        if (st[i] == PairState::undecided) {
          return i;
        }
      }
      return std::nullopt;
    }

    struct StopSearch {};

    class Searcher {
     public:
      Searcher(Magma const& m, Side side) : _closure(m, side) {}

      // Children of a node in canonical order (holds branch first).
      std::vector<Node> children(Node const& node, std::size_t pair) {
        auto const n = _closure.size();
        auto const a = static_cast<Element>(pair / n);
        auto const b = static_cast<Element>(pair % n);
        std::vector<Node> out;
        for (auto const& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
          Node child{node.states, pair + 1};
          if (_closure.assert_and_close(child.states, x, y)) {
            out.push_back(std::move(child));
          }
        }
        return out;
      }

      // Depth-first walk; leaf receives completed states. leaf returning
      // false stops the walk.
      template <typename Leaf>
      bool walk(Node node, Leaf&& leaf) {
        auto const pair = first_undecided(node.states, node.first_open);
        if (!pair) {
          return leaf(node.states);
        }
        auto const n = _closure.size();
        auto const a = static_cast<Element>(*pair / n);
        auto const b = static_cast<Element>(*pair % n);
        {
          Node child{node.states, *pair + 1};
          if (_closure.assert_and_close(child.states, a, b) &&
              !walk(std::move(child), leaf)) {
            return false;
          }
        }
        node.first_open = *pair + 1;
        if (_closure.assert_and_close(node.states, b, a)) {
          return walk(std::move(node), leaf);
        }
        return true;
      }

     private:
      Closure _closure;
    };

    // Root node after constraints and the cancellation precheck; nullopt if
    // no order can exist.
    std::optional<Node> root_node(Magma const& m, Side side,
                                  ConstraintSet const& constraints) {
      auto const n = m.size();
      for (auto const& [a, b] : constraints.pairs()) {
        if (a >= n || b >= n) {
          throw InvalidInput("constraint (" + std::to_string(a) + ", " +
                             std::to_string(b) + ") is out of range for a " +
                             std::to_string(n) + "-element magma");
        }
      }
      if ((checks_left(side) && left_cancellative(m)) ||
          (checks_right(side) && right_cancellative(m))) {
        return std::nullopt;
      }
      Node root{States(n * n, PairState::undecided), 0};
      for (std::size_t a = 0; a < n; ++a) {
        root.states[a * n + a] = PairState::fails;
      }
      for (auto const& [a, b] : constraints.pairs()) {
        root.states[static_cast<std::size_t>(a) * n + b] = PairState::holds;
      }
      Closure closure(m, side);
      if (!closure.close_from(root.states)) {
        return std::nullopt;
      }
      return root;
    }

    // Runs leaf over completed states in canonical order, splitting the
    // tree across threads when asked. leaf returns false to stop.
    template <typename Leaf>
    void run_search(Magma const& m, Side side, ConstraintSet const& constraints,
                    unsigned threads, std::optional<std::uint64_t> per_task_cap,
                    Leaf&& leaf) {
      auto root = root_node(m, side, constraints);
      if (!root) {
        return;
      }
      Searcher searcher(m, side);
      if (threads <= 1) {
        searcher.walk(std::move(*root), leaf);
        return;
      }
      // Expand the top of the tree breadth-first, preserving canonical
      // order, until there is enough work to share.
      std::vector<Node> frontier;
      frontier.push_back(std::move(*root));
      std::size_t const target = 8 * static_cast<std::size_t>(threads);
      for (int depth = 0; depth < 24 && frontier.size() < target; ++depth) {
        std::vector<Node> next;
        bool expanded = false;
        for (auto& node : frontier) {
          auto const pair = first_undecided(node.states, node.first_open);
          if (!pair) {
            next.push_back(std::move(node));
            continue;
          }
          expanded = true;
          for (auto& child : searcher.children(node, *pair)) {
            next.push_back(std::move(child));
          }
        }
        frontier = std::move(next);
        if (!expanded) {
          break;
        }
      }
      // Process in batches of `threads` subtrees; results are emitted in
      // frontier order so the stream does not depend on scheduling.
      for (std::size_t start = 0; start < frontier.size(); start += threads) {
        auto const stop = std::min(frontier.size(), start + threads);
        std::vector<std::vector<States>> results(stop - start);
        {
          std::vector<std::jthread> pool;
          for (auto i = start; i < stop; ++i) {
            pool.emplace_back([&, i] {
              Searcher local(m, side);
              auto& out = results[i - start];
              local.walk(std::move(frontier[i]), [&](States const& st) {
                out.push_back(st);
                return !per_task_cap || out.size() < *per_task_cap;
              });
            });
          }
        }
        for (auto const& batch : results) {
          for (auto const& st : batch) {
            if (!leaf(st)) {
              return;
            }
          }
        }
      }
    }

  }  // namespace

  EnumerationSummary enumerate(Magma const& m, Side side,
                               ConstraintSet const& constraints,
                               OrderSink const& sink,
                               EnumerateOptions const& options) {
    EnumerationSummary summary;
    auto const n    = m.size();
    auto const cap  = options.limit ? std::optional(*options.limit + 1)
                                    : std::nullopt;
    run_search(m, side, constraints, options.threads, cap,
               [&](States const& st) {
                 if (options.limit && summary.emitted == *options.limit) {
                   summary.status = EnumerationStatus::truncated;
                   return false;
                 }
                 ++summary.emitted;
                 if (sink) {
                   sink(OrderRelation(n, st));
                 }
                 return true;
               });
    return summary;
  }

  std::vector<OrderRelation> enumerate_all(Magma const& m, Side side,
                                           ConstraintSet const& constraints,
                                           EnumerateOptions const& options) {
    std::vector<OrderRelation> out;
    enumerate(
        m, side, constraints,
        [&](OrderRelation const& r) { out.push_back(r); }, options);
    return out;
  }

  CountResult count_orders(Magma const& m, Side side,
                           ConstraintSet const& constraints,
                           EnumerateOptions const& options) {
    CountResult result;
    auto const cap = options.limit ? std::optional(*options.limit + 1)
                                   : std::nullopt;
    run_search(m, side, constraints, options.threads, cap,
               [&](States const&) {
                 if (options.limit && result.count == *options.limit) {
                   result.status = EnumerationStatus::truncated;
                   return false;
                 }
                 if (result.count == UINT64_MAX) {
                   throw BudgetExceeded("order count overflows 64 bits");
                 }
                 ++result.count;
                 return true;
               });
    return result;
  }

  std::vector<OrderRelation> brute_force_orders(Magma const& m, Side side,
                                                std::size_t max_size) {
    auto const n = m.size();
    if (n > max_size) {
      throw BudgetExceeded("brute force over " + std::to_string(n) +
                           "! rankings exceeds the bound of " +
                           std::to_string(max_size) + " elements");
    }
    std::vector<Element> ranking(n);
    std::iota(ranking.begin(), ranking.end(), 0);
    std::vector<OrderRelation> out;
    do {
      auto r = OrderRelation::from_ranking(ranking);
      if (verify_order(m, r, side).valid()) {
        out.push_back(std::move(r));
      }
    } while (std::next_permutation(ranking.begin(), ranking.end()));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite intersection property
  ////////////////////////////////////////////////////////////////////////

  FipReport fip_check(Magma const& m, Side side,
                      std::span<ConstraintSet const> families,
                      std::uint64_t max_orders) {
    auto const k = families.size();
    if (k > 20) {
      throw BudgetExceeded("at most 20 family members are supported");
    }
    // Route 1: every order's membership mask, then close downwards.
    std::vector<bool> nonempty(std::size_t{1} << k, false);
    std::uint64_t seen = 0;
    std::optional<OrderRelation> first_order;
    enumerate(m, side, {}, [&](OrderRelation const& r) {
      if (++seen > max_orders) {
        throw BudgetExceeded("more than " + std::to_string(max_orders) +
                             " orders; FIP query is out of reach");
      }
      if (!first_order) {
        first_order = r;
      }
      std::size_t mask = 0;
      for (std::size_t i = 0; i < k; ++i) {
        auto const pairs = families[i].pairs();
        if (std::all_of(pairs.begin(), pairs.end(), [&](auto const& p) {
              return r.holds(p.first, p.second);
            })) {
          mask |= std::size_t{1} << i;
        }
      }
      nonempty[mask] = true;
    });
    for (std::size_t bit = 0; bit < k; ++bit) {
      for (std::size_t mask = 0; mask < nonempty.size(); ++mask) {
        if ((mask >> bit) & 1U) {
          if (nonempty[mask]) {
            nonempty[mask ^ (std::size_t{1} << bit)] = true;
          }
        }
      }
    }
    FipReport report;
    report.finite_intersections_nonempty = true;
    std::size_t best = 0;
    for (std::size_t mask = 0; mask < nonempty.size(); ++mask) {
      if (!nonempty[mask]) {
        if (report.finite_intersections_nonempty ||
            std::popcount(mask) < std::popcount(best)) {
          best = mask;
        }
        report.finite_intersections_nonempty = false;
      }
    }
    if (!report.finite_intersections_nonempty) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < k; ++i) {
        if ((best >> i) & 1U) {
          members.push_back(i);
        }
      }
      report.empty_subfamily = std::move(members);
    }

    // Route 2: enumerate the whole intersection directly.
    std::optional<ConstraintSet> all = ConstraintSet();
    for (auto const& f : families) {
      all = all ? all->merged(f) : std::nullopt;
    }
    if (all) {
      EnumerateOptions first_only;
      first_only.limit = 1;
      enumerate(
          m, side, *all,
          [&](OrderRelation const& r) { report.witness = r; }, first_only);
    }
    report.whole_intersection_nonempty = report.witness.has_value();
    if (report.whole_intersection_nonempty != nonempty.back()) {
      throw InternalError("FIP routes disagree on the whole intersection");
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Lexicographic orders
  ////////////////////////////////////////////////////////////////////////

  OrderRelation lex_order(ProductMagma const& p,
                          std::span<OrderRelation const> factor_orders,
                          Side side) {
    if (factor_orders.size() != p.factor_count()) {
      throw InvalidInput("need one factor order per factor");
    }
    for (std::size_t alpha = 0; alpha < factor_orders.size(); ++alpha) {
      auto const& factor = p.factor(alpha);
      if (factor_orders[alpha].size() != factor.size() ||
          !factor_orders[alpha].completed()) {
        throw InvalidInput("factor order " + std::to_string(alpha) +
                           " is not a completed order on its factor");
      }
      auto const check = verify_order(factor, factor_orders[alpha], side);
      if (!check.valid()) {
        throw InvalidInput("factor order " + std::to_string(alpha) +
                           " is invalid: " + describe(*check.violation));
      }
    }
    auto const n = p.size();
    if (n > OrderRelation::max_size) {
      throw BudgetExceeded("lexicographic order on " + std::to_string(n) +
                           " elements is too large to materialise");
    }
    std::vector<std::vector<Element>> tuples(n);
    for (Element x = 0; x < n; ++x) {
      tuples[x] = p.decode(x);
    }
    States st(n * n, PairState::fails);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (x == y) {
          continue;
        }
        std::size_t alpha = 0;
        while (tuples[x][alpha] == tuples[y][alpha]) {
          ++alpha;
        }
        if (factor_orders[alpha].holds(tuples[x][alpha], tuples[y][alpha])) {
          st[static_cast<std::size_t>(x) * n + y] = PairState::holds;
        }
      }
    }
    return OrderRelation(n, std::move(st));
  }

  ////////////////////////////////////////////////////////////////////////
  // Text formats
  ////////////////////////////////////////////////////////////////////////

  ConstraintSet read_constraints(std::istream& in, std::string const& file) {
    detail::LineReader reader(in, file);
    std::vector<ConstraintSet::Pair> pairs;
    while (reader.next()) {
      reader.expect_count(2);
      pairs.emplace_back(reader.integer<Element>(0), reader.integer<Element>(1));
      if (pairs.back().first == pairs.back().second) {
        reader.fail(reader.tokens()[1], "constraint lies on the diagonal");
      }
    }
    try {
      return ConstraintSet(std::move(pairs));
    } catch (InvalidInput const& e) {
      throw ParseError(file, reader.line(), "", e.what());
    }
  }

  std::vector<ConstraintSet> read_families(std::istream& in,
                                           std::string const& file) {
    detail::LineReader reader(in, file);
    std::vector<ConstraintSet> families;
    while (reader.next()) {
      auto const& tokens = reader.tokens();
      if (tokens.size() % 2 != 0) {
        reader.fail(tokens.back(), "family line must list pairs 'a b'");
      }
      std::vector<ConstraintSet::Pair> pairs;
      for (std::size_t i = 0; i < tokens.size(); i += 2) {
        pairs.emplace_back(reader.integer<Element>(i),
                           reader.integer<Element>(i + 1));
      }
      try {
        families.emplace_back(std::move(pairs));
      } catch (InvalidInput const& e) {
        reader.fail(tokens.front(), e.what());
      }
    }
    return families;
  }

  OrderRelation read_ranking(std::istream& in, std::string const& file) {
    detail::LineReader reader(in, file);
    if (!reader.next()) {
      reader.fail("", "empty input, expected 'order <n>'");
    }
    reader.expect_keyword("order");
    reader.expect_count(2);
    auto const n = reader.integer<std::size_t>(1);
    std::vector<Element> ascending;
    if (n > 0) {
      if (!reader.next()) {
        reader.fail("", "missing ranking line");
      }
      reader.expect_count(n);
      for (std::size_t i = 0; i < n; ++i) {
        ascending.push_back(reader.integer<Element>(i));
      }
    }
    try {
      return OrderRelation::from_ranking(ascending);
    } catch (InvalidInput const& e) {
      throw ParseError(file, reader.line(), "", e.what());
    }
  }

  void write_ranking(std::ostream& out, OrderRelation const& r) {
    out << "order " << r.size() << '\n';
    auto const ranking = r.ranking();
    for (std::size_t i = 0; i < ranking.size(); ++i) {
      out << (i == 0 ? "" : " ") << ranking[i];
    }
    out << '\n';
  }

}  // namespace orderspace
