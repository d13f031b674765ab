#include "orderspace/magma.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "orderspace/error.hpp"

namespace orderspace {

  Magma::Magma(std::size_t n, std::vector<Element> table)
      : _n(n), _table(std::move(table)) {
    if (n == 0) {
      throw InvalidInput("magma must have at least one element");
    }
    if (_table.size() != n * n) {
      throw InvalidInput("magma table has " + std::to_string(_table.size()) +
                         " entries, expected " + std::to_string(n * n));
    }
    for (std::size_t i = 0; i < _table.size(); ++i) {
      if (_table[i] >= n) {
        throw InvalidInput("table entry " + std::to_string(_table[i]) +
                           " at row " + std::to_string(i / n) + " column " +
                           std::to_string(i % n) + " is out of range");
      }
    }
  }

  Magma Magma::from_rows(std::vector<std::vector<Element>> const& rows) {
    std::vector<Element> table;
    table.reserve(rows.size() * rows.size());
    for (auto const& row : rows) {
      if (row.size() != rows.size()) {
        throw InvalidInput("magma rows must all have length " +
                           std::to_string(rows.size()));
      }
      table.insert(table.end(), row.begin(), row.end());
    }
    return Magma(rows.size(), std::move(table));
  }

  ////////////////////////////////////////////////////////////////////////
  // Groups
  ////////////////////////////////////////////////////////////////////////

  GroupReport check_group(Magma const& m) {
    GroupReport report;
    auto const n = static_cast<Element>(m.size());
    for (Element a = 0; a < n && !report.associativity_failure; ++a) {
      for (Element b = 0; b < n && !report.associativity_failure; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c))) {
            report.associativity_failure = {a, b, c};
            break;
          }
        }
      }
    }
    for (Element e = 0; e < n; ++e) {
      bool two_sided = true;
      for (Element a = 0; a < n && two_sided; ++a) {
        two_sided = m.op(e, a) == a && m.op(a, e) == a;
      }
      if (two_sided) {
        report.has_identity = true;
        report.identity     = e;
        break;
      }
    }
    if (!report.has_identity) {
      return report;
    }
    for (Element a = 0; a < n; ++a) {
      bool found = false;
      for (Element b = 0; b < n && !found; ++b) {
        found = m.op(a, b) == report.identity && m.op(b, a) == report.identity;
      }
      if (!found) {
        report.missing_inverse = a;
        break;
      }
    }
    return report;
  }

  FiniteGroup::FiniteGroup(Magma table, Element identity,
                           std::vector<Element> inverse)
      : _table(std::move(table)),
        _identity(identity),
        _inverse(std::move(inverse)) {
    auto const n = _table.size();
    if (_identity >= n) {
      throw InvalidInput("identity element out of range");
    }
    if (_inverse.size() != n) {
      throw InvalidInput("inverse list must have one entry per element");
    }
    auto const report = check_group(_table);
    if (report.associativity_failure) {
      auto const& [a, b, c] = *report.associativity_failure;
      throw InvalidInput("group table is not associative at (" +
                         std::to_string(a) + ", " + std::to_string(b) + ", " +
                         std::to_string(c) + ")");
    }
    for (Element a = 0; a < n; ++a) {
      if (_table.op(_identity, a) != a || _table.op(a, _identity) != a) {
        throw InvalidInput("element " + std::to_string(_identity) +
                           " is not an identity");
      }
      if (_inverse[a] >= n || _table.op(a, _inverse[a]) != _identity ||
          _table.op(_inverse[a], a) != _identity) {
        throw InvalidInput("inverse of " + std::to_string(a) +
                           " is wrong");
      }
    }
  }

  FiniteGroup FiniteGroup::from_table(Magma table) {
    auto const report = check_group(table);
    if (!report.passes()) {
      throw InvalidInput("table does not define a group");
    }
    auto const n = static_cast<Element>(table.size());
    std::vector<Element> inverse(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (table.op(a, b) == report.identity) {
          inverse[a] = b;
          break;
        }
      }
    }
    return FiniteGroup(std::move(table), report.identity, std::move(inverse));
  }

  namespace {
    template <typename Fn>
    FiniteGroup group_from_op(std::size_t n, Fn&& fn) {
      std::vector<Element> table(n * n);
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          table[a * n + b] = fn(a, b);
        }
      }
      return FiniteGroup::from_table(Magma(n, std::move(table)));
    }
  }  // namespace

  FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) {
      throw InvalidInput("cyclic group order must be positive");
    }
    return group_from_op(n, [n](Element a, Element b) {
      return static_cast<Element>((a + b) % n);
    });
  }

  FiniteGroup symmetric_group(std::size_t k) {
    if (k == 0 || k > 6) {
      throw InvalidInput("symmetric group degree must be in [1, 6]");
    }
    std::vector<std::vector<Element>> perms;
    std::vector<Element> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](std::vector<Element> const& q) {
      auto it = std::lower_bound(perms.begin(), perms.end(), q);
      return static_cast<Element>(it - perms.begin());
    };
    return group_from_op(perms.size(), [&](Element a, Element b) {
      std::vector<Element> q(k);
      for (std::size_t i = 0; i < k; ++i) {
        q[i] = perms[a][perms[b][i]];
      }
      return index_of(q);
    });
  }

  FiniteGroup dihedral_group(std::size_t n) {
    if (n == 0) {
      throw InvalidInput("dihedral group parameter must be positive");
    }
    // r^i s^j * r^k s^l = r^(i + (-1)^j k) s^(j + l)
    return group_from_op(2 * n, [n](Element x, Element y) {
      auto const i = x % n, j = x / n, k = y % n, l = y / n;
      auto const rot = j == 0 ? (i + k) % n : (i + n - k) % n;
      return static_cast<Element>(rot + n * ((j + l) % 2));
    });
  }

  FiniteGroup quaternion_group() {
    // Index = sign * 4 + unit, units 1, i, j, k; sign 0 is +, 1 is -.
    static constexpr int unit_mul[4][4][2] = {
        // {unit, negate}
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
        {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
        {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
        {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
    };
    return group_from_op(8, [](Element x, Element y) {
      auto const& [unit, neg] = unit_mul[x % 4][y % 4];
      auto const sign         = (x / 4 + y / 4 + static_cast<Element>(neg)) % 2;
      return static_cast<Element>(sign * 4 + static_cast<Element>(unit));
    });
  }

  FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h) {
    auto const m = h.size();
    return group_from_op(g.size() * m, [&](Element x, Element y) {
      return static_cast<Element>(g.mul(x / m, y / m) * m + h.mul(x % m, y % m));
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Racks and quandles
  ////////////////////////////////////////////////////////////////////////

  RackReport check_rack(Magma const& m) {
    RackReport report;
    auto const n = static_cast<Element>(m.size());
    std::vector<Element> seen(n);
    for (Element b = 0; b < n && !report.bijectivity_failure; ++b) {
      std::fill(seen.begin(), seen.end(), n);
      for (Element a = 0; a < n; ++a) {
        auto const x = m.op(a, b);
        if (seen[x] != n) {
          report.bijectivity_failure = {b, seen[x], a};
          break;
        }
        seen[x] = a;
      }
    }
    for (Element a = 0; a < n && !report.distributivity_failure; ++a) {
      for (Element b = 0; b < n && !report.distributivity_failure; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (m.op(m.op(a, b), c) != m.op(m.op(a, c), m.op(b, c))) {
            report.distributivity_failure = {a, b, c};
            break;
          }
        }
      }
    }
    return report;
  }

  QuandleReport check_quandle(Magma const& m) {
    QuandleReport report;
    static_cast<RackReport&>(report) = check_rack(m);
    for (Element a = 0; a < m.size(); ++a) {
      if (m.op(a, a) != a) {
        report.idempotence_failure = a;
        break;
      }
    }
    return report;
  }

  Quandle::Quandle(Magma table) : _table(std::move(table)) {
    auto const report = check_quandle(_table);
    if (!report.passes()) {
      std::string what = "table is not a quandle:";
      if (!report.idempotent()) {
        what += " idempotence fails at " +
                std::to_string(*report.idempotence_failure) + ";";
      }
      if (!report.columns_bijective()) {
        what += " column " + std::to_string((*report.bijectivity_failure)[0]) +
                " is not a permutation;";
      }
      if (!report.right_distributive()) {
        auto const& [a, b, c] = *report.distributivity_failure;
        what += " right distributivity fails at (" + std::to_string(a) + ", " +
                std::to_string(b) + ", " + std::to_string(c) + ");";
      }
      throw InvalidInput(what);
    }
    auto const n = _table.size();
    _inverse.resize(n * n);
    for (Element b = 0; b < n; ++b) {
      for (Element a = 0; a < n; ++a) {
        _inverse[static_cast<std::size_t>(_table.op(a, b)) * n + b] = a;
      }
    }
  }

  Quandle trivial_quandle(std::size_t n) {
    if (n == 0) {
      throw InvalidInput("quandle must have at least one element");
    }
    std::vector<Element> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      std::fill_n(table.begin() + a * n, n, static_cast<Element>(a));
    }
    return Quandle(Magma(n, std::move(table)));
  }

  Quandle conj_quandle(FiniteGroup const& g) {
    auto const n = g.size();
    std::vector<Element> table(n * n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        table[a * n + b] = g.mul(g.mul(g.inverse(b), a), b);
      }
    }
    return Quandle(Magma(n, std::move(table)));
  }

  Quandle kei_quandle(FiniteGroup const& g) {
    auto const n = g.size();
    std::vector<Element> table(n * n);
    for (Element b = 0; b < n; ++b) {
      for (Element a = 0; a < n; ++a) {
        table[b * n + a] = g.mul(g.mul(a, g.inverse(b)), a);
      }
    }
    return Quandle(Magma(n, std::move(table)));
  }

  bool is_trivial_quandle(Magma const& m) {
    for (Element a = 0; a < m.size(); ++a) {
      for (Element b = 0; b < m.size(); ++b) {
        if (m.op(a, b) != a) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Direct products
  ////////////////////////////////////////////////////////////////////////

  ProductMagma::ProductMagma(std::vector<Magma> factors,
                             std::vector<Element> basepoints,
                             std::size_t size_cap)
      : _factors(std::move(factors)), _basepoints(std::move(basepoints)) {
    if (_factors.empty()) {
      throw InvalidInput("product needs at least one factor");
    }
    if (_basepoints.size() != _factors.size()) {
      throw InvalidInput("need exactly one basepoint per factor");
    }
    _size = 1;
    for (std::size_t alpha = 0; alpha < _factors.size(); ++alpha) {
      if (_basepoints[alpha] >= _factors[alpha].size()) {
        throw InvalidInput("basepoint of factor " + std::to_string(alpha) +
                           " is out of range");
      }
      if (_size > size_cap / _factors[alpha].size()) {
        throw BudgetExceeded("product magma exceeds the size cap of " +
                             std::to_string(size_cap) + " elements");
      }
      _size *= _factors[alpha].size();
    }
    _stride.resize(_factors.size());
    std::size_t stride = 1;
    for (std::size_t alpha = _factors.size(); alpha-- > 0;) {
      _stride[alpha] = stride;
      stride *= _factors[alpha].size();
    }
  }

  Element ProductMagma::encode(std::span<Element const> tuple) const {
    if (tuple.size() != _factors.size()) {
      throw InvalidInput("tuple length does not match the factor count");
    }
    std::size_t x = 0;
    for (std::size_t alpha = 0; alpha < tuple.size(); ++alpha) {
      if (tuple[alpha] >= _factors[alpha].size()) {
        throw InvalidInput("tuple component out of range");
      }
      x += tuple[alpha] * _stride[alpha];
    }
    return static_cast<Element>(x);
  }

  Element ProductMagma::component(Element x, std::size_t alpha) const {
    return static_cast<Element>((x / _stride[alpha]) % _factors[alpha].size());
  }

  std::vector<Element> ProductMagma::decode(Element x) const {
    std::vector<Element> tuple(_factors.size());
    for (std::size_t alpha = 0; alpha < _factors.size(); ++alpha) {
      tuple[alpha] = component(x, alpha);
    }
    return tuple;
  }

  Element ProductMagma::op(Element x, Element y) const {
    std::size_t z = 0;
    for (std::size_t alpha = 0; alpha < _factors.size(); ++alpha) {
      z += _factors[alpha].op(component(x, alpha), component(y, alpha)) *
           _stride[alpha];
    }
    return static_cast<Element>(z);
  }

  Magma ProductMagma::materialize(std::size_t table_cap) const {
    if (_size > table_cap) {
      throw BudgetExceeded("product of " + std::to_string(_size) +
                           " elements is too large to tabulate (cap " +
                           std::to_string(table_cap) + ")");
    }
    std::vector<Element> table(_size * _size);
    for (Element x = 0; x < _size; ++x) {
      for (Element y = 0; y < _size; ++y) {
        table[x * _size + y] = op(x, y);
      }
    }
    return Magma(_size, std::move(table));
  }

  ////////////////////////////////////////////////////////////////////////
  // Iteration and obstructions
  ////////////////////////////////////////////////////////////////////////

  Element iterate_op(Magma const& m, Element b, Element a, std::size_t n) {
    if (n == 0) {
      throw InvalidInput("iteration count must be at least 1");
    }
    for (std::size_t i = 0; i < n; ++i) {
      b = m.op(b, a);
    }
    return b;
  }

  std::optional<ObstructionWitness> quandle_order_obstruction(Magma const& m) {
    auto const n = static_cast<Element>(m.size());
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (m.op(b, a) == b) {
          continue;
        }
        // Orbit of b under (* a) either returns to b within n steps or never.
        Element x = b;
        for (std::size_t k = 1; k <= n; ++k) {
          x = m.op(x, a);
          if (x == b) {
            return ObstructionWitness{a, b, k};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<CancellationWitness> left_cancellative(Magma const& m) {
    auto const n = static_cast<Element>(m.size());
    for (Element c = 0; c < n; ++c) {
      for (Element a = 0; a < n; ++a) {
        for (Element b = a + 1; b < n; ++b) {
          if (m.op(c, a) == m.op(c, b)) {
            return CancellationWitness{c, a, b};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<CancellationWitness> right_cancellative(Magma const& m) {
    auto const n = static_cast<Element>(m.size());
    for (Element c = 0; c < n; ++c) {
      for (Element a = 0; a < n; ++a) {
        for (Element b = a + 1; b < n; ++b) {
          if (m.op(a, c) == m.op(b, c)) {
            return CancellationWitness{c, a, b};
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace orderspace
