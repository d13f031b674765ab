#include "orderspace/group_oracles.hpp"

#include <charconv>
#include <deque>

namespace orderspace {

  namespace detail {

    std::int64_t checked_add(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw BudgetExceeded("integer overflow in group arithmetic");
      }
      return r;
    }

    std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw BudgetExceeded("integer overflow in group arithmetic");
      }
      return r;
    }

    std::string syllable(char letter, std::int64_t exponent) {
      if (exponent == 0) {
        return {};
      }
      if (exponent == 1) {
        return std::string(1, letter);
      }
      if (exponent == -1) {
        return std::string(1, static_cast<char>(letter - 'a' + 'A'));
      }
      return std::string(1, letter) + "^" + std::to_string(exponent);
    }

  }  // namespace detail

  namespace {
    std::string or_identity(std::string s) {
      return s.empty() ? "1" : s;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Z^k
  ////////////////////////////////////////////////////////////////////////

  std::size_t FreeAbelian::hasher::operator()(element const& x) const noexcept {
    std::size_t seed = x.size();
    for (auto v : x) {
      detail::hash_combine(seed, std::hash<std::int64_t>{}(v));
    }
    return seed;
  }

  FreeAbelian::FreeAbelian(std::size_t rank) : _rank(rank) {
    if (rank == 0 || rank > 26) {
      throw InvalidInput("free abelian rank must be in [1, 26]");
    }
    for (std::size_t i = 0; i < rank; ++i) {
      element e(rank, 0);
      e[i] = 1;
      _gens.push_back({static_cast<char>('a' + i), std::move(e)});
    }
  }

  FreeAbelian::element FreeAbelian::multiply(element const& x,
                                             element const& y) const {
    element r(_rank);
    for (std::size_t i = 0; i < _rank; ++i) {
      r[i] = detail::checked_add(x[i], y[i]);
    }
    return r;
  }

  FreeAbelian::element FreeAbelian::invert(element const& x) const {
    element r(_rank);
    for (std::size_t i = 0; i < _rank; ++i) {
      r[i] = detail::checked_mul(x[i], -1);
    }
    return r;
  }

  std::string FreeAbelian::render(element const& x) const {
    std::string out;
    for (std::size_t i = 0; i < _rank; ++i) {
      out += detail::syllable(static_cast<char>('a' + i), x[i]);
    }
    return or_identity(std::move(out));
  }

  std::vector<std::string> FreeAbelian::coordinate_names() const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < _rank; ++i) {
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    return names;
  }

  ////////////////////////////////////////////////////////////////////////
  // Heisenberg
  ////////////////////////////////////////////////////////////////////////

  std::size_t Heisenberg::hasher::operator()(element const& x) const noexcept {
    std::size_t seed = 0;
    for (auto v : x) {
      detail::hash_combine(seed, std::hash<std::int64_t>{}(v));
    }
    return seed;
  }

  Heisenberg::Heisenberg()
      : _gens{{'x', {1, 0, 0}}, {'y', {0, 1, 0}}} {}

  Heisenberg::element Heisenberg::multiply(element const& g,
                                           element const& h) const {
    using detail::checked_add;
    return {checked_add(g[0], h[0]), checked_add(g[1], h[1]),
            checked_add(checked_add(g[2], h[2]), detail::checked_mul(g[0], h[1]))};
  }

  Heisenberg::element Heisenberg::invert(element const& g) const {
    // (a,b,c)^-1 = (-a, -b, ab - c)
    return {detail::checked_mul(g[0], -1), detail::checked_mul(g[1], -1),
            detail::checked_add(detail::checked_mul(g[0], g[1]),
                                detail::checked_mul(g[2], -1))};
  }

  std::string Heisenberg::render(element const& x) const {
    return "(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
           std::to_string(x[2]) + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // Klein bottle group
  ////////////////////////////////////////////////////////////////////////

  std::size_t Klein::hasher::operator()(element const& x) const noexcept {
    std::size_t seed = std::hash<std::int64_t>{}(x.p);
    detail::hash_combine(seed, std::hash<std::int64_t>{}(x.q));
    return seed;
  }

  Klein::Klein() : _gens{{'a', {1, 0}}, {'b', {0, 1}}} {}

  Klein::element Klein::multiply(element const& g, element const& h) const {
    auto const q = h.p % 2 == 0 ? g.q : detail::checked_mul(g.q, -1);
    return {detail::checked_add(g.p, h.p), detail::checked_add(q, h.q)};
  }

  Klein::element Klein::invert(element const& g) const {
    // (p,q)^-1 = (-p, -(-1)^p q)
    auto const q = g.p % 2 == 0 ? detail::checked_mul(g.q, -1) : g.q;
    return {detail::checked_mul(g.p, -1), q};
  }

  std::string Klein::render(element const& x) const {
    return or_identity(detail::syllable('a', x.p) + detail::syllable('b', x.q));
  }

  ////////////////////////////////////////////////////////////////////////
  // Free group
  ////////////////////////////////////////////////////////////////////////

  std::size_t FreeGroup::hasher::operator()(element const& x) const noexcept {
    std::size_t seed = x.size();
    for (auto v : x) {
      detail::hash_combine(seed, std::hash<std::int32_t>{}(v));
    }
    return seed;
  }

  FreeGroup::FreeGroup(std::size_t rank) : _rank(rank) {
    if (rank == 0 || rank > 26) {
      throw InvalidInput("free group rank must be in [1, 26]");
    }
    for (std::size_t i = 0; i < rank; ++i) {
      _gens.push_back(
          {static_cast<char>('a' + i), element{static_cast<std::int32_t>(i + 1)}});
    }
  }

  FreeGroup::element FreeGroup::multiply(element const& g,
                                         element const& h) const {
    element r = g;
    for (auto letter : h) {
      if (!r.empty() && r.back() == -letter) {
        r.pop_back();
      } else {
        r.push_back(letter);
      }
    }
    return r;
  }

  FreeGroup::element FreeGroup::invert(element const& g) const {
    element r(g.rbegin(), g.rend());
    for (auto& letter : r) {
      letter = -letter;
    }
    return r;
  }

  std::string FreeGroup::render(element const& x) const {
    std::string out;
    std::size_t i = 0;
    while (i < x.size()) {
      auto j = i;
      while (j < x.size() && x[j] == x[i]) {
        ++j;
      }
      auto const letter = static_cast<char>('a' + std::abs(x[i]) - 1);
      auto const count  = static_cast<std::int64_t>(j - i);
      out += detail::syllable(letter, x[i] > 0 ? count : -count);
      i = j;
    }
    return or_identity(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Torus-knot groups
  ////////////////////////////////////////////////////////////////////////

  std::size_t TorusKnot::hasher::operator()(element const& x) const noexcept {
    std::size_t seed = boost::multiprecision::hash_value(x.central);
    for (auto const& s : x.syllables) {
      detail::hash_combine(seed, (static_cast<std::size_t>(s.exponent) << 1) |
                                     s.letter);
    }
    return seed;
  }

  TorusKnot::TorusKnot(std::uint32_t n, std::uint32_t m) : _order{n, m} {
    if (n < 2 || m < 2) {
      throw InvalidInput("torus-knot group needs n, m >= 2");
    }
    _gens.push_back({'x', element{0, {{0, 1}}}});
    _gens.push_back({'y', element{0, {{1, 1}}}});
  }

  TorusKnot::element TorusKnot::z() const { return element{1, {}}; }

  void TorusKnot::push(element& g, std::uint8_t letter,
                       std::uint32_t exponent) const {
    if (!g.syllables.empty() && g.syllables.back().letter == letter) {
      auto sum = g.syllables.back().exponent + exponent;
      if (sum >= _order[letter]) {
        sum -= _order[letter];
        g.central += 1;
      }
      if (sum == 0) {
        g.syllables.pop_back();
      } else {
        g.syllables.back().exponent = sum;
      }
    } else {
      g.syllables.push_back({letter, exponent});
    }
  }

  TorusKnot::element TorusKnot::multiply(element const& g,
                                         element const& h) const {
    element r = g;
    r.central += h.central;
    for (auto const& s : h.syllables) {
      push(r, s.letter, s.exponent);
    }
    return r;
  }

  TorusKnot::element TorusKnot::invert(element const& g) const {
    // (x^a)^-1 = z^-1 x^(n-a); z commutes past everything.
    element r;
    r.central = -g.central - static_cast<long>(g.syllables.size());
    for (auto it = g.syllables.rbegin(); it != g.syllables.rend(); ++it) {
      r.syllables.push_back({it->letter, _order[it->letter] - it->exponent});
    }
    return r;
  }

  std::string TorusKnot::render(element const& x) const {
    std::string out;
    if (x.central != 0) {
      out = x.central == 1 ? "z" : "z^" + x.central.str();
    }
    for (auto const& s : x.syllables) {
      if (!out.empty()) {
        out += ' ';
      }
      out += detail::syllable(s.letter == 0 ? 'x' : 'y', s.exponent);
    }
    return or_identity(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite groups as oracles
  ////////////////////////////////////////////////////////////////////////

  TableGroup::TableGroup(FiniteGroup group,
                         std::vector<Generator<Element>> generators,
                         std::string name)
      : _group(std::move(group)),
        _gens(std::move(generators)),
        _name(std::move(name)) {
    auto const n = _group.size();
    for (auto const& s : _gens) {
      if (s.value >= n) {
        throw InvalidInput("generator out of range");
      }
      if (s.letter < 'a' || s.letter > 'z') {
        throw InvalidInput("generator letters must be lowercase");
      }
    }
    // Shortest words, breadth-first in generator order.
    _names.assign(n, {});
    std::vector<bool> seen(n, false);
    std::deque<Element> queue{_group.identity()};
    seen[_group.identity()] = true;
    _names[_group.identity()] = "1";
    while (!queue.empty()) {
      auto const x = queue.front();
      queue.pop_front();
      for (auto const& s : _gens) {
        for (int sign : {1, -1}) {
          auto const step = sign > 0 ? s.value : _group.inverse(s.value);
          auto const y    = _group.mul(x, step);
          if (!seen[y]) {
            seen[y]  = true;
            auto const prefix = _names[x] == "1" ? std::string() : _names[x];
            _names[y] = prefix + (sign > 0 ? s.letter
                                           : static_cast<char>(s.letter - 'a' + 'A'));
            queue.push_back(y);
          }
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (!seen[x]) {
        _names[x] = "g" + std::to_string(x);
      }
    }
  }

  std::string TableGroup::render(element x) const { return _names.at(x); }

  bool TableGroup::exhaustively_central(element x) const {
    for (Element y = 0; y < _group.size(); ++y) {
      if (_group.mul(x, y) != _group.mul(y, x)) {
        return false;
      }
    }
    return true;
  }

  TableGroup cyclic_oracle(std::size_t n) {
    return TableGroup(cyclic_group(n), {{'x', n > 1 ? Element{1} : Element{0}}},
                      "cyclic:" + std::to_string(n));
  }

  std::vector<Element> center_scan(FiniteGroup const& g) {
    std::vector<Element> center;
    for (Element x = 0; x < g.size(); ++x) {
      bool central = true;
      for (Element y = 0; y < g.size() && central; ++y) {
        central = g.mul(x, y) == g.mul(y, x);
      }
      if (central) {
        center.push_back(x);
      }
    }
    return center;
  }

  std::string_view to_string(Centrality c) noexcept {
    switch (c) {
      case Centrality::exhaustive:
        return "exhaustive";
      case Centrality::structural:
        return "structural";
      case Centrality::ball_evidence:
        return "ball-evidence";
      case Centrality::not_central:
        return "not-central";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // Specs
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::size_t parse_count(std::string_view text, std::string_view spec) {
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw InvalidInput("bad number '" + std::string(text) +
                           "' in group spec \"" + std::string(spec) + "\"");
      }
      return value;
    }
  }  // namespace

  AnyGroup parse_group_spec(std::string_view spec) {
    if (spec == "heisenberg") {
      return Heisenberg();
    }
    if (spec == "klein") {
      return Klein();
    }
    if (spec.starts_with("Z^")) {
      return FreeAbelian(parse_count(spec.substr(2), spec));
    }
    if (spec.starts_with("free:")) {
      return FreeGroup(parse_count(spec.substr(5), spec));
    }
    if (spec.starts_with("cyclic:")) {
      auto const n = parse_count(spec.substr(7), spec);
      if (n == 0 || n > 4096) {
        throw InvalidInput("cyclic order must be in [1, 4096]");
      }
      return cyclic_oracle(n);
    }
    if (spec.starts_with("torus:")) {
      auto const rest  = spec.substr(6);
      auto const colon = rest.find(':');
      if (colon == std::string_view::npos) {
        throw InvalidInput("torus spec must be torus:<n>:<m>");
      }
      auto const n = parse_count(rest.substr(0, colon), spec);
      auto const m = parse_count(rest.substr(colon + 1), spec);
      if (n > UINT32_MAX || m > UINT32_MAX) {
        throw InvalidInput("torus parameters too large");
      }
      return TorusKnot(static_cast<std::uint32_t>(n),
                       static_cast<std::uint32_t>(m));
    }
    throw InvalidInput("unknown group spec \"" + std::string(spec) +
                       "\" (expected Z^<k>, heisenberg, klein, free:<k>, "
                       "torus:<n>:<m> or cyclic:<n>)");
  }

}  // namespace orderspace
