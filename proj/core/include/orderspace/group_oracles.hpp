#pragma once

// Exact arithmetic for infinite finitely generated groups, word-metric balls,
// and the order-theoretic scans that run on top of them.
//
// A group oracle is any type satisfying GroupOracle: value-type elements
// with equality and a hasher, identity, multiply, invert, named generators
// and a canonical-form renderer. Elements in canonical form are equal iff
// the group elements are equal.
//
// Words are strings over generator letters; an uppercase letter is the
// inverse, "^k" raises the preceding letter to an integer power, and "1"
// (or the empty word) is the identity. Klein "aBB" is a b^-2.

#include <algorithm>
#include <array>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "orderspace/error.hpp"
#include "orderspace/magma.hpp"

namespace orderspace {

  template <typename E>
  struct Generator {
    char letter;
    E value;
  };

  template <typename G>
  concept GroupOracle = requires(G const& g, typename G::element const& x) {
    typename G::element;
    typename G::hasher;
    { g.identity() } -> std::same_as<typename G::element>;
    { g.multiply(x, x) } -> std::same_as<typename G::element>;
    { g.invert(x) } -> std::same_as<typename G::element>;
    { x == x } -> std::convertible_to<bool>;
    { typename G::hasher{}(x) } -> std::convertible_to<std::size_t>;
    { g.generators() } -> std::convertible_to<
        std::span<Generator<typename G::element> const>>;
    { g.render(x) } -> std::convertible_to<std::string>;
    { g.name() } -> std::convertible_to<std::string>;
  };

  // Families whose canonical forms are integer coordinate vectors.
  template <typename G>
  concept CoordinateGroup = GroupOracle<G> && requires(
      G const& g, typename G::element const& x) {
    { g.coordinates(x) } -> std::convertible_to<std::vector<std::int64_t>>;
    { g.coordinate_names() } -> std::convertible_to<std::vector<std::string>>;
  };

  namespace detail {
    std::int64_t checked_add(std::int64_t a, std::int64_t b);
    std::int64_t checked_mul(std::int64_t a, std::int64_t b);
    inline void hash_combine(std::size_t& seed, std::size_t v) noexcept {
      seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    // "a", "A", "a^3", "a^-3"; empty for exponent 0.
    std::string syllable(char letter, std::int64_t exponent);
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Families
  ////////////////////////////////////////////////////////////////////////

  // Z^k with generators a, b, c, ... the standard basis vectors.
  class FreeAbelian {
   public:
    using element = std::vector<std::int64_t>;
    struct hasher {
      std::size_t operator()(element const& x) const noexcept;
    };

    explicit FreeAbelian(std::size_t rank);

    std::size_t rank() const noexcept { return _rank; }
    element identity() const { return element(_rank, 0); }
    element multiply(element const& x, element const& y) const;
    element invert(element const& x) const;
    std::span<Generator<element> const> generators() const noexcept {
      return _gens;
    }
    std::string render(element const& x) const;
    std::string name() const { return "Z^" + std::to_string(_rank); }
    std::vector<std::int64_t> coordinates(element const& x) const { return x; }
    std::vector<std::string> coordinate_names() const;

   private:
    std::size_t _rank;
    std::vector<Generator<element>> _gens;
  };

  // Integer Heisenberg group: (a,b,c)(x,y,z) = (a+x, b+y, c+z+a*y).
  // Generators x = (1,0,0), y = (0,1,0).
  class Heisenberg {
   public:
    using element = std::array<std::int64_t, 3>;
    struct hasher {
      std::size_t operator()(element const& x) const noexcept;
    };

    Heisenberg();

    element identity() const { return {0, 0, 0}; }
    element multiply(element const& g, element const& h) const;
    element invert(element const& g) const;
    std::span<Generator<element> const> generators() const noexcept {
      return _gens;
    }
    std::string render(element const& x) const;
    std::string name() const { return "heisenberg"; }
    std::vector<std::int64_t> coordinates(element const& x) const {
      return {x[0], x[1], x[2]};
    }
    std::vector<std::string> coordinate_names() const { return {"x", "y", "z"}; }

   private:
    std::vector<Generator<element>> _gens;
  };

  // a^p b^q in the Klein bottle group <a, b | a^-1 b a = b^-1>.
  struct KleinElement {
    std::int64_t p = 0;
    std::int64_t q = 0;
    friend bool operator==(KleinElement const&, KleinElement const&) = default;
  };

  // (p,q)(r,s) = (p+r, (-1)^r q + s).
  class Klein {
   public:
    using element = KleinElement;
    struct hasher {
      std::size_t operator()(element const& x) const noexcept;
    };

    Klein();

    element identity() const { return {}; }
    element multiply(element const& g, element const& h) const;
    element invert(element const& g) const;
    std::span<Generator<element> const> generators() const noexcept {
      return _gens;
    }
    std::string render(element const& x) const;
    std::string name() const { return "klein"; }
    std::vector<std::int64_t> coordinates(element const& x) const {
      return {x.p, x.q};
    }
    std::vector<std::string> coordinate_names() const { return {"p", "q"}; }

   private:
    std::vector<Generator<element>> _gens;
  };

  // Free group on k letters; a reduced word of signed letters +-(i+1).
  class FreeGroup {
   public:
    using element = std::vector<std::int32_t>;
    struct hasher {
      std::size_t operator()(element const& x) const noexcept;
    };

    explicit FreeGroup(std::size_t rank);

    std::size_t rank() const noexcept { return _rank; }
    element identity() const { return {}; }
    element multiply(element const& g, element const& h) const;
    element invert(element const& g) const;
    std::span<Generator<element> const> generators() const noexcept {
      return _gens;
    }
    std::string render(element const& x) const;
    std::string name() const { return "free:" + std::to_string(_rank); }

   private:
    std::size_t _rank;
    std::vector<Generator<element>> _gens;
  };

  // z^k s_1 ... s_t in <x, y | x^n = y^m> with z = x^n = y^m central and the
  // syllables alternating between x^a (1 <= a < n) and y^b (1 <= b < m).
  struct TorusKnotElement {
    struct Syllable {
      std::uint8_t letter;  // 0 = x, 1 = y
      std::uint32_t exponent;
      friend bool operator==(Syllable const&, Syllable const&) = default;
    };
    boost::multiprecision::cpp_int central = 0;
    std::vector<Syllable> syllables;
    friend bool operator==(TorusKnotElement const&,
                           TorusKnotElement const&) = default;
  };

  class TorusKnot {
   public:
    using element = TorusKnotElement;
    struct hasher {
      std::size_t operator()(element const& x) const noexcept;
    };

    // n, m >= 2.
    TorusKnot(std::uint32_t n, std::uint32_t m);

    std::uint32_t n() const noexcept { return _order[0]; }
    std::uint32_t m() const noexcept { return _order[1]; }
    element identity() const { return {}; }
    element multiply(element const& g, element const& h) const;
    element invert(element const& g) const;
    std::span<Generator<element> const> generators() const noexcept {
      return _gens;
    }
    std::string render(element const& x) const;
    std::string name() const {
      return "torus:" + std::to_string(n()) + ":" + std::to_string(m());
    }
    // z^k is central by construction.
    bool structurally_central(element const& x) const noexcept {
      return x.syllables.empty();
    }
    element z() const;

   private:
    void push(element& g, std::uint8_t letter, std::uint32_t exponent) const;

    std::array<std::uint32_t, 2> _order;
    std::vector<Generator<element>> _gens;
  };

  // A finite group given by its table, with chosen generators.
  class TableGroup {
   public:
    using element = Element;
    struct hasher {
      std::size_t operator()(element x) const noexcept { return x; }
    };

    // generators: (letter, element) pairs.
    TableGroup(FiniteGroup group, std::vector<Generator<Element>> generators,
               std::string name);

    FiniteGroup const& group() const noexcept { return _group; }
    element identity() const { return _group.identity(); }
    element multiply(element g, element h) const { return _group.mul(g, h); }
    element invert(element g) const { return _group.inverse(g); }
    std::span<Generator<element> const> generators() const noexcept {
      return _gens;
    }
    std::string render(element x) const;
    std::string name() const { return _name; }
    bool exhaustively_central(element x) const;

   private:
    FiniteGroup _group;
    std::vector<Generator<element>> _gens;
    std::string _name;
    std::vector<std::string> _names;
  };

  // C_n with generator x = 1.
  TableGroup cyclic_oracle(std::size_t n);

  ////////////////////////////////////////////////////////////////////////
  // Words and elementary operations
  ////////////////////////////////////////////////////////////////////////

  template <GroupOracle G>
  typename G::element power(G const& g, typename G::element const& x,
                            std::int64_t n) {
    auto base   = n < 0 ? g.invert(x) : x;
    auto result = g.identity();
    for (std::int64_t k = 0; k < (n < 0 ? -n : n); ++k) {
      result = g.multiply(result, base);
    }
    return result;
  }

  // Throws InvalidInput naming the offending character.
  template <GroupOracle G>
  typename G::element parse_word(G const& g, std::string_view word) {
    auto result = g.identity();
    std::size_t i = 0;
    auto const gens = g.generators();
    while (i < word.size()) {
      char const ch = word[i];
      if (ch == ' ' || ch == '\t' || ch == '*' || ch == '.') {
        ++i;
        continue;
      }
      if (ch == '1') {
        ++i;
        continue;
      }
      char const lower = (ch >= 'A' && ch <= 'Z') ? static_cast<char>(ch - 'A' + 'a')
                                                  : ch;
      auto const it = std::find_if(gens.begin(), gens.end(), [&](auto const& s) {
        return s.letter == lower;
      });
      if (it == gens.end()) {
        throw InvalidInput("unknown generator '" + std::string(1, ch) +
                           "' in word \"" + std::string(word) + "\" for " +
                           g.name());
      }
      std::int64_t exponent = lower == ch ? 1 : -1;
      ++i;
      if (i < word.size() && word[i] == '^') {
        ++i;
        auto const start = i;
        if (i < word.size() && word[i] == '-') {
          ++i;
        }
        while (i < word.size() && word[i] >= '0' && word[i] <= '9') {
          ++i;
        }
        auto const digits = std::string(word.substr(start, i - start));
        if (digits.empty() || digits == "-") {
          throw InvalidInput("missing exponent after '^' in word \"" +
                             std::string(word) + "\"");
        }
        exponent *= std::stoll(digits);
      }
      result = g.multiply(result, power(g, it->value, exponent));
    }
    return result;
  }

  template <GroupOracle G>
  bool centralizer_check(G const& g, typename G::element const& a,
                         typename G::element const& b) {
    return g.multiply(a, b) == g.multiply(b, a);
  }

  std::vector<Element> center_scan(FiniteGroup const& g);

  // [a, b] = a^-1 b^-1 a b
  template <GroupOracle G>
  typename G::element commutator(G const& g, typename G::element const& a,
                                 typename G::element const& b) {
    return g.multiply(g.multiply(g.invert(a), g.invert(b)), g.multiply(a, b));
  }

  ////////////////////////////////////////////////////////////////////////
  // Balls
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t default_ball_budget = 50'000;

  // All elements of word length <= radius over generators and inverses,
  // found breadth-first. Order: by length, then by discovery (parents in
  // order, generators a, A, b, B, ... in order). Index 0 is the identity.
  template <GroupOracle G>
  class Ball {
   public:
    using element = typename G::element;

    Ball(G const& g, std::size_t radius,
         std::size_t budget = default_ball_budget)
        : _radius(radius) {
      struct Step {
        element value;
        char letter;
      };
      std::vector<Step> steps;
      for (auto const& s : g.generators()) {
        steps.push_back({s.value, s.letter});
        steps.push_back(
            {g.invert(s.value), static_cast<char>(s.letter - 'a' + 'A')});
      }
      insert(g.identity(), 0, npos, '\0', budget);
      std::size_t layer_begin = 0;
      for (std::size_t r = 1; r <= radius; ++r) {
        auto const layer_end = _elements.size();
        for (auto i = layer_begin; i < layer_end; ++i) {
          for (auto const& s : steps) {
            insert(g.multiply(_elements[i], s.value), r, i, s.letter, budget);
          }
        }
        if (_elements.size() == layer_end) {
          break;
        }
        layer_begin = layer_end;
      }
    }

    std::size_t size() const noexcept { return _elements.size(); }
    std::size_t radius() const noexcept { return _radius; }
    std::span<element const> elements() const noexcept { return _elements; }
    element const& operator[](std::size_t i) const { return _elements[i]; }
    std::size_t length(std::size_t i) const { return _length[i]; }

    std::optional<std::size_t> index_of(element const& x) const {
      auto const it = _index.find(x);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }
    bool contains(element const& x) const { return _index.contains(x); }

    // A shortest word for element i.
    std::string word(std::size_t i) const {
      std::string w;
      while (_parent[i] != npos) {
        w.push_back(_letter[i]);
        i = _parent[i];
      }
      std::reverse(w.begin(), w.end());
      return w.empty() ? "1" : w;
    }

   private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    void insert(element x, std::size_t length, std::size_t parent, char letter,
                std::size_t budget) {
      if (_index.contains(x)) {
        return;
      }
      if (_elements.size() >= budget) {
        throw BudgetExceeded("ball of radius " + std::to_string(_radius) +
                             " exceeds the budget of " + std::to_string(budget) +
                             " elements");
      }
      _index.emplace(x, _elements.size());
      _elements.push_back(std::move(x));
      _length.push_back(length);
      _parent.push_back(parent);
      _letter.push_back(letter);
    }

    std::size_t _radius;
    std::vector<element> _elements;
    std::vector<std::size_t> _length;
    std::vector<std::size_t> _parent;
    std::vector<char> _letter;
    std::unordered_map<element, std::size_t, typename G::hasher> _index;
  };

  ////////////////////////////////////////////////////////////////////////
  // Conjugation quandle obstruction
  ////////////////////////////////////////////////////////////////////////

  // How firmly a^n is known to be central in G.
  enum class Centrality : std::uint8_t {
    exhaustive,     // finite group, checked against every element
    structural,     // a^n is a power of the central z of a torus-knot group
    ball_evidence,  // commutes with every element of the search ball
    not_central,    // fails against some ball element; a^n b = b a^n anyway
  };

  std::string_view to_string(Centrality c) noexcept;

  template <typename E>
  struct ConjObstruction {
    E a;
    E b;
    std::size_t n;
    Centrality centrality;
  };

  // First (a, b) in ball order, then least n in [2, n_max], with ab != ba and
  // a^n b = b a^n. Each witness is an exact identity b * a^{*n} = b in
  // Conj(G) with b * a != b, so Conj(G) has no right order.
  template <GroupOracle G>
  std::optional<ConjObstruction<typename G::element>> conj_obstruction_oracle(
      G const& g, Ball<G> const& ball, std::size_t n_max) {
    auto const elems = ball.elements();
    for (auto const& a : elems) {
      std::vector<typename G::element> powers{a};
      for (std::size_t k = 2; k <= n_max; ++k) {
        powers.push_back(g.multiply(powers.back(), a));
      }
      for (auto const& b : elems) {
        if (centralizer_check(g, a, b)) {
          continue;
        }
        for (std::size_t k = 2; k <= n_max; ++k) {
          auto const& an = powers[k - 1];
          if (!centralizer_check(g, an, b)) {
            continue;
          }
          auto centrality = Centrality::ball_evidence;
          if constexpr (requires { g.structurally_central(an); }) {
            if (g.structurally_central(an)) {
              centrality = Centrality::structural;
            }
          }
          if constexpr (requires { g.exhaustively_central(an); }) {
            centrality = g.exhaustively_central(an) ? Centrality::exhaustive
                                                    : Centrality::not_central;
          }
          if (centrality == Centrality::ball_evidence) {
            for (auto const& c : elems) {
              if (!centralizer_check(g, an, c)) {
                centrality = Centrality::not_central;
                break;
              }
            }
          }
          return ConjObstruction<typename G::element>{a, b, k, centrality};
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bi-orders and the induced order on Conj(G)
  ////////////////////////////////////////////////////////////////////////

  template <typename E>
  struct BiOrderOracle {
    std::string name;
    std::function<std::strong_ordering(E const&, E const&)> compare;

    bool less(E const& x, E const& y) const { return compare(x, y) < 0; }
  };

  template <GroupOracle G>
  inline constexpr bool supports_lex_biorder =
      std::same_as<G, FreeAbelian> || std::same_as<G, Heisenberg>;

  // Lexicographic comparison of coordinates. Two-sided invariant on Z^k and
  // on the Heisenberg group (the correction term a*y shifts the last
  // coordinate equally on both sides once the first two agree). Throws
  // InvalidInput for other families.
  template <GroupOracle G>
  BiOrderOracle<typename G::element> lex_biorder(G const& g) {
    if constexpr (supports_lex_biorder<G>) {
      return {"lex", [g](auto const& x, auto const& y) {
                return g.coordinates(x) <=> g.coordinates(y);
              }};
    } else {
      throw InvalidInput("no lexicographic bi-order is available for " +
                         g.name());
    }
  }

  template <typename E>
  struct InvarianceViolation {
    E a;
    E b;
    E c;
  };

  template <typename E>
  struct InvarianceReport {
    std::uint64_t triples = 0;
    std::uint64_t premises = 0;  // triples where the hypothesis held
    std::uint64_t violation_count = 0;
    std::vector<InvarianceViolation<E>> violations;  // first few

    bool passed() const noexcept { return violation_count == 0; }
  };

  // Two-sided invariance of a bi-order: g < h implies cg < ch and gc < hc.
  template <GroupOracle G>
  void check_biorder_triple(G const& g,
                            BiOrderOracle<typename G::element> const& order,
                            typename G::element const& x,
                            typename G::element const& y,
                            typename G::element const& c,
                            InvarianceReport<typename G::element>& report) {
    ++report.triples;
    if (order.less(x, y)) {
      ++report.premises;
      if (!order.less(g.multiply(c, x), g.multiply(c, y)) ||
          !order.less(g.multiply(x, c), g.multiply(y, c))) {
        ++report.violation_count;
        if (report.violations.size() < 16) {
          report.violations.push_back({x, y, c});
        }
      }
    }
  }

  // Right order on Conj(G): (a, b) holds iff e < a^-1 b in the bi-order.
  template <GroupOracle G>
  class ConjOrder {
   public:
    using element = typename G::element;

    ConjOrder(G const& g, BiOrderOracle<element> order)
        : _g(g), _order(std::move(order)) {}

    bool related(element const& a, element const& b) const {
      return _order.less(_g.identity(), _g.multiply(_g.invert(a), b));
    }

    // a * c = c^-1 a c
    element act(element const& a, element const& c) const {
      return _g.multiply(_g.multiply(_g.invert(c), a), c);
    }

    // R(a, b) implies R(a * c, b * c); also checks that exactly one of
    // R(a, b), R(b, a) holds when a != b.
    void check(element const& a, element const& b, element const& c,
               InvarianceReport<element>& report) const {
      ++report.triples;
      bool ok           = true;
      bool const ab     = related(a, b);
      bool const ba     = related(b, a);
      if (a == b ? (ab || ba) : (ab == ba)) {
        ok = false;
      }
      if (ab) {
        ++report.premises;
        ok = ok && related(act(a, c), act(b, c));
      }
      if (!ok) {
        ++report.violation_count;
        if (report.violations.size() < 16) {
          report.violations.push_back({a, b, c});
        }
      }
    }

   private:
    G const& _g;
    BiOrderOracle<element> _order;
  };

  template <GroupOracle G>
  ConjOrder<G> induce_conj_order(G const& g,
                                 BiOrderOracle<typename G::element> order) {
    return ConjOrder<G>(g, std::move(order));
  }

  // Every triple of ball elements.
  template <GroupOracle G>
  InvarianceReport<typename G::element> scan_conj_order_exhaustive(
      ConjOrder<G> const& order, Ball<G> const& ball) {
    InvarianceReport<typename G::element> report;
    for (auto const& a : ball.elements()) {
      for (auto const& b : ball.elements()) {
        for (auto const& c : ball.elements()) {
          order.check(a, b, c, report);
        }
      }
    }
    return report;
  }

  // Uniformly sampled triples; indices are drawn as rng() % size() from
  // std::mt19937_64 seeded with prng_seed.
  template <GroupOracle G>
  InvarianceReport<typename G::element> scan_conj_order_sampled(
      ConjOrder<G> const& order, Ball<G> const& ball, std::uint64_t samples,
      std::uint64_t prng_seed) {
    InvarianceReport<typename G::element> report;
    std::mt19937_64 rng(prng_seed);
    auto const n = ball.size();
    for (std::uint64_t i = 0; i < samples; ++i) {
      auto const& a = ball[rng() % n];
      auto const& b = ball[rng() % n];
      auto const& c = ball[rng() % n];
      order.check(a, b, c, report);
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Neumann's commutation property
  ////////////////////////////////////////////////////////////////////////

  template <typename E>
  struct NeumannViolation {
    E a;
    E b;
    std::size_t n;
  };

  template <typename E>
  struct NeumannReport {
    std::uint64_t pairs = 0;
    std::uint64_t premises = 0;  // pairs with a^n b = b a^n for some n
    std::vector<NeumannViolation<E>> violations;
  };

  // In a bi-orderable group, a^n b = b a^n for some n >= 1 forces ab = ba.
  // Scans ball pairs for counterexamples; the bi-order argument only fixes
  // the family as bi-orderable.
  template <GroupOracle G>
  NeumannReport<typename G::element> neumann_scan(
      G const& g, BiOrderOracle<typename G::element> const& /*order*/,
      Ball<G> const& ball, std::size_t n_max) {
    NeumannReport<typename G::element> report;
    for (auto const& a : ball.elements()) {
      std::vector<typename G::element> powers{a};
      for (std::size_t k = 2; k <= n_max; ++k) {
        powers.push_back(g.multiply(powers.back(), a));
      }
      for (auto const& b : ball.elements()) {
        ++report.pairs;
        bool const commute = centralizer_check(g, a, b);
        for (std::size_t k = 1; k <= n_max; ++k) {
          if (centralizer_check(g, powers[k - 1], b)) {
            ++report.premises;
            if (!commute) {
              report.violations.push_back({a, b, k});
            }
            break;
          }
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group specifications
  ////////////////////////////////////////////////////////////////////////

  using AnyGroup =
      std::variant<FreeAbelian, Heisenberg, Klein, FreeGroup, TorusKnot,
                   TableGroup>;

  // "Z^<k>", "heisenberg", "klein", "free:<k>", "torus:<n>:<m>",
  // "cyclic:<n>". Throws InvalidInput on anything else.
  AnyGroup parse_group_spec(std::string_view spec);

}  // namespace orderspace
