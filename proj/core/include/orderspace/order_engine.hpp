#pragma once

// Invariant strict total orders on finite magmas: verification, constraint
// propagation, backtracking enumeration, a brute-force oracle, finite
// intersection queries over subbasis sets, and lexicographic orders on
// products.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orderspace/magma.hpp"

namespace orderspace {

  // LEFT: (a,b) in R implies (c*a, c*b) in R. RIGHT: (a*c, b*c). BI: both.
  enum class Side : std::uint8_t { left, right, bi };

  std::string_view to_string(Side side) noexcept;
  std::optional<Side> parse_side(std::string_view text) noexcept;

  constexpr bool checks_left(Side s) noexcept { return s != Side::right; }
  constexpr bool checks_right(Side s) noexcept { return s != Side::left; }

  enum class PairState : std::uint8_t { undecided, holds, fails };

  // Three-valued relation over the off-diagonal pairs of an n-element set.
  class OrderRelation {
   public:
    static constexpr std::size_t max_size = 4096;

    explicit OrderRelation(std::size_t n);
    // states is row-major n*n; diagonal entries are ignored.
    OrderRelation(std::size_t n, std::vector<PairState> states);

    // Completed order with ascending[0] < ascending[1] < ...
    static OrderRelation from_ranking(std::span<Element const> ascending);

    std::size_t size() const noexcept { return _n; }

    PairState state(Element a, Element b) const noexcept {
      return a == b ? PairState::fails
                    : _states[static_cast<std::size_t>(a) * _n + b];
    }
    bool holds(Element a, Element b) const noexcept {
      return state(a, b) == PairState::holds;
    }
    // Raw write, no consistency checks. Throws on the diagonal.
    void set(Element a, Element b, PairState s);

    bool completed() const noexcept;

    // Elements in increasing order. Only meaningful for a strict total
    // order; throws InvalidInput otherwise.
    std::vector<Element> ranking() const;

    friend bool operator==(OrderRelation const&, OrderRelation const&) = default;
    friend auto operator<=>(OrderRelation const& x, OrderRelation const& y) {
      if (x._n != y._n) {
        return x._n <=> y._n;
      }
      return x._states <=> y._states;
    }

   private:
    std::size_t _n;
    std::vector<PairState> _states;
  };

  // Pairs (a, b) required to hold.
  class ConstraintSet {
   public:
    using Pair = std::pair<Element, Element>;

    ConstraintSet() = default;
    // Throws InvalidInput on a diagonal pair or a pair with its reverse.
    explicit ConstraintSet(std::vector<Pair> pairs);

    std::span<Pair const> pairs() const noexcept { return _pairs; }
    bool empty() const noexcept { return _pairs.empty(); }

    // Union; nullopt if the union holds some pair together with its reverse.
    std::optional<ConstraintSet> merged(ConstraintSet const& other) const;

   private:
    std::vector<Pair> _pairs;
  };

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  // The three conditions a characteristic vector must satisfy:
  //   invariance    (a,b) in R implies the translated pair is in R
  //   transitivity  (a,b), (b,c) in R implies (a,c) in R
  //   antisymmetry  exactly one of (a,b), (b,a) is in R
  enum class Condition : std::uint8_t { invariance, transitivity, antisymmetry };

  // "(i)", "(ii)" or "(iii)".
  std::string_view condition_label(Condition c) noexcept;

  struct Violation {
    Condition condition;
    // invariance:   (a,b) holds, translating by c fails on the stated side
    // transitivity: (a,b), (b,c) hold, (a,c) does not
    // antisymmetry: (a,b) and (b,a) are both in, or both out; c == a
    Element a;
    Element b;
    Element c;
    Side side;  // side of the failed translation; meaningful for invariance

    friend bool operator==(Violation const&, Violation const&) = default;
  };

  std::string describe(Violation const& v);

  struct Verification {
    std::optional<Violation> violation;
    bool valid() const noexcept { return !violation; }
  };

  // Checks antisymmetry, then transitivity, then invariance; reports the
  // first failure in row-major order. Throws InvalidInput if R has
  // undecided pairs or its size differs from the magma's.
  Verification verify_order(Magma const& m, OrderRelation const& r, Side side);

  ////////////////////////////////////////////////////////////////////////
  // Propagation and enumeration
  ////////////////////////////////////////////////////////////////////////

  // Least fixpoint of:
  //   (a,b) holds  =>  (b,a) fails
  //   (a,b) fails  =>  (b,a) holds            (totality)
  //   (a,b), (b,c) hold  =>  (a,c) holds
  //   (a,b) holds  =>  each translate of (a,b) on the given side holds
  // nullopt when the closure forces a pair both ways or a translate lands on
  // the diagonal.
  std::optional<OrderRelation> propagate(Magma const& m, OrderRelation state,
                                         Side side);

  struct EnumerateOptions {
    std::optional<std::uint64_t> limit;
    unsigned threads = 1;
  };

  enum class EnumerationStatus : std::uint8_t { complete, truncated };

  struct EnumerationSummary {
    std::uint64_t emitted = 0;
    EnumerationStatus status = EnumerationStatus::complete;
  };

  using OrderSink = std::function<void(OrderRelation const&)>;

  // Emits every invariant strict total order containing the constraint
  // pairs. Branches on the smallest undecided pair (a, b), holds-branch
  // first, so the stream is in decreasing order of characteristic vectors.
  // The stream is identical for every thread count. When a limit is set and
  // more orders exist, the summary reports truncation.
  EnumerationSummary enumerate(Magma const& m, Side side,
                               ConstraintSet const& constraints,
                               OrderSink const& sink,
                               EnumerateOptions const& options = {});

  std::vector<OrderRelation> enumerate_all(Magma const& m, Side side,
                                           ConstraintSet const& constraints = {},
                                           EnumerateOptions const& options = {});

  struct CountResult {
    std::uint64_t count = 0;
    EnumerationStatus status = EnumerationStatus::complete;
  };

  CountResult count_orders(Magma const& m, Side side,
                           ConstraintSet const& constraints = {},
                           EnumerateOptions const& options = {});

  // Independent oracle: filters all n! rankings through verify_order.
  // Throws BudgetExceeded when n > max_size. Sorted by ranking.
  std::vector<OrderRelation> brute_force_orders(Magma const& m, Side side,
                                                std::size_t max_size = 7);

  ////////////////////////////////////////////////////////////////////////
  // Subbasis intersections
  ////////////////////////////////////////////////////////////////////////

  // Each family member is the intersection of the subbasis sets S_(a,b)
  // for its pairs. Finite subfamilies include the empty one, whose
  // intersection is the whole order space.
  struct FipReport {
    bool finite_intersections_nonempty = false;
    bool whole_intersection_nonempty = false;
    std::optional<OrderRelation> witness;
    // Smallest subfamily (indices) with empty intersection, if any.
    std::optional<std::vector<std::size_t>> empty_subfamily;
  };

  FipReport fip_check(Magma const& m, Side side,
                      std::span<ConstraintSet const> families,
                      std::uint64_t max_orders = 1'000'000);

  ////////////////////////////////////////////////////////////////////////
  // Lexicographic orders on products
  ////////////////////////////////////////////////////////////////////////

  // x < y iff x_alpha < y_alpha in the factor order at the first differing
  // factor alpha. Throws InvalidInput when a factor order is not a valid
  // order of the given side on its factor.
  OrderRelation lex_order(ProductMagma const& p,
                          std::span<OrderRelation const> factor_orders,
                          Side side);

  ////////////////////////////////////////////////////////////////////////
  // Text formats
  ////////////////////////////////////////////////////////////////////////

  // Lines "a b": (a, b) must hold.
  ConstraintSet read_constraints(std::istream& in,
                                 std::string const& file = "<input>");
  // One family member per line, as pairs: "a1 b1 a2 b2 ...".
  std::vector<ConstraintSet> read_families(std::istream& in,
                                           std::string const& file = "<input>");

  // "order <n>" followed by the elements in increasing order on one line.
  OrderRelation read_ranking(std::istream& in,
                             std::string const& file = "<input>");
  void write_ranking(std::ostream& out, OrderRelation const& r);

}  // namespace orderspace
