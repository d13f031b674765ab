#pragma once

// Finite magmas as operation tables, groups and quandles built on them, and
// the axiom and obstruction scans used throughout the library.
//
// Elements are 0-based indices. Tables are row-major with the LEFT operand
// selecting the row, so table[a][b] = a * b.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace orderspace {

  using Element = std::uint32_t;

  class Magma {
   public:
    // Throws InvalidInput unless table.size() == n * n and every entry < n.
    Magma(std::size_t n, std::vector<Element> table);

    static Magma from_rows(std::vector<std::vector<Element>> const& rows);

    std::size_t size() const noexcept { return _n; }

    Element op(Element a, Element b) const noexcept {
      return _table[static_cast<std::size_t>(a) * _n + b];
    }

    std::span<Element const> row(Element a) const noexcept {
      return {_table.data() + static_cast<std::size_t>(a) * _n, _n};
    }

    std::span<Element const> table() const noexcept { return _table; }

    friend bool operator==(Magma const&, Magma const&) = default;

   private:
    std::size_t _n;
    std::vector<Element> _table;
  };

  ////////////////////////////////////////////////////////////////////////
  // Groups
  ////////////////////////////////////////////////////////////////////////

  struct GroupReport {
    std::optional<std::array<Element, 3>> associativity_failure;  // (a, b, c)
    bool has_identity = false;
    Element identity = 0;
    std::optional<Element> missing_inverse;

    bool passes() const noexcept {
      return !associativity_failure && has_identity && !missing_inverse;
    }
  };

  GroupReport check_group(Magma const& m);

  class FiniteGroup {
   public:
    // Validates the group axioms; throws InvalidInput on failure.
    FiniteGroup(Magma table, Element identity, std::vector<Element> inverse);

    // Derives identity and inverses from the table.
    static FiniteGroup from_table(Magma table);

    Magma const& magma() const noexcept { return _table; }
    std::size_t size() const noexcept { return _table.size(); }
    Element identity() const noexcept { return _identity; }
    Element inverse(Element a) const noexcept { return _inverse[a]; }
    std::span<Element const> inverses() const noexcept { return _inverse; }
    Element mul(Element a, Element b) const noexcept { return _table.op(a, b); }

   private:
    Magma _table;
    Element _identity;
    std::vector<Element> _inverse;
  };

  FiniteGroup cyclic_group(std::size_t n);
  // Permutations of {0..k-1} in lexicographic order; (s*t)(i) = s(t(i)).
  FiniteGroup symmetric_group(std::size_t k);
  // Order 2n; element r^i s^j is index i + n*j.
  FiniteGroup dihedral_group(std::size_t n);
  FiniteGroup quaternion_group();
  // Element (g, h) is index g * |H| + h.
  FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h);

  ////////////////////////////////////////////////////////////////////////
  // Racks and quandles
  ////////////////////////////////////////////////////////////////////////

  struct RackReport {
    // (b, a1, a2) with a1 != a2 and a1 * b == a2 * b.
    std::optional<std::array<Element, 3>> bijectivity_failure;
    // (a, b, c) with (a*b)*c != (a*c)*(b*c).
    std::optional<std::array<Element, 3>> distributivity_failure;

    bool columns_bijective() const noexcept { return !bijectivity_failure; }
    bool right_distributive() const noexcept {
      return !distributivity_failure;
    }
    bool passes() const noexcept {
      return columns_bijective() && right_distributive();
    }
  };

  struct QuandleReport : RackReport {
    std::optional<Element> idempotence_failure;

    bool idempotent() const noexcept { return !idempotence_failure; }
    bool passes() const noexcept { return idempotent() && RackReport::passes(); }
  };

  QuandleReport check_quandle(Magma const& m);
  RackReport check_rack(Magma const& m);

  class Quandle {
   public:
    // Throws InvalidInput if the table is not a quandle.
    explicit Quandle(Magma table);

    Magma const& magma() const noexcept { return _table; }
    std::size_t size() const noexcept { return _table.size(); }
    Element op(Element a, Element b) const noexcept { return _table.op(a, b); }
    // a inv_op b is the unique x with x * b == a.
    Element inv_op(Element a, Element b) const noexcept {
      return _inverse[static_cast<std::size_t>(a) * size() + b];
    }

   private:
    Magma _table;
    std::vector<Element> _inverse;
  };

  Quandle trivial_quandle(std::size_t n);
  // a * b = b^-1 a b
  Quandle conj_quandle(FiniteGroup const& g);
  // b * a = a b^-1 a
  Quandle kei_quandle(FiniteGroup const& g);

  bool is_trivial_quandle(Magma const& m);

  ////////////////////////////////////////////////////////////////////////
  // Direct products
  ////////////////////////////////////////////////////////////////////////

  // Componentwise product of finitely many magmas. Tuples are encoded in
  // mixed radix with the first factor most significant. With finitely many
  // factors the direct sum and direct product coincide; the basepoints are
  // kept so the lexicographic construction can refer to them.
  class ProductMagma {
   public:
    static constexpr std::size_t default_size_cap = 1'000'000;

    ProductMagma(std::vector<Magma> factors, std::vector<Element> basepoints,
                 std::size_t size_cap = default_size_cap);

    std::size_t size() const noexcept { return _size; }
    std::size_t factor_count() const noexcept { return _factors.size(); }
    Magma const& factor(std::size_t alpha) const { return _factors.at(alpha); }
    std::span<Element const> basepoints() const noexcept { return _basepoints; }

    Element encode(std::span<Element const> tuple) const;
    std::vector<Element> decode(Element x) const;
    Element component(Element x, std::size_t alpha) const;
    Element basepoint() const { return encode(_basepoints); }

    Element op(Element x, Element y) const;

    // Throws BudgetExceeded if size() exceeds table_cap.
    Magma materialize(std::size_t table_cap = 4096) const;

   private:
    std::vector<Magma> _factors;
    std::vector<Element> _basepoints;
    std::vector<std::size_t> _stride;
    std::size_t _size;
  };

  ////////////////////////////////////////////////////////////////////////
  // Iteration and obstructions
  ////////////////////////////////////////////////////////////////////////

  // (...((b * a) * a) ...) * a with n applications; n >= 1.
  Element iterate_op(Magma const& m, Element b, Element a, std::size_t n);

  struct ObstructionWitness {
    Element a;
    Element b;
    std::size_t n;
    friend bool operator==(ObstructionWitness const&,
                           ObstructionWitness const&) = default;
  };

  // Some (a, b, n) with b * a^{*n} == b but b * a != b, which rules out every
  // right-invariant order. Scans a, then b, in increasing order and reports
  // the first return time of the orbit of b under (* a).
  std::optional<ObstructionWitness> quandle_order_obstruction(Magma const& m);

  struct CancellationWitness {
    Element c;
    Element a;
    Element b;
    friend bool operator==(CancellationWitness const&,
                           CancellationWitness const&) = default;
  };

  // (c, a, b), a < b, with c*a == c*b. Rules out every left-invariant order.
  std::optional<CancellationWitness> left_cancellative(Magma const& m);
  // (c, a, b), a < b, with a*c == b*c. Rules out every right-invariant order.
  std::optional<CancellationWitness> right_cancellative(Magma const& m);

}  // namespace orderspace
