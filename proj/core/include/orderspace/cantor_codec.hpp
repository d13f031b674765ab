#pragma once

// Orders as characteristic vectors over the off-diagonal pairs.
//
// Coordinates are the pairs (a, b), a != b, in row-major lexicographic order
// skipping the diagonal; bit (a, b) is 1 iff (a, b) is in the order. The
// file format is
//
//   chi <n> <side>
//   <n(n-1) ASCII 0/1 characters>
//
// and bulk output is one bit string per line.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orderspace/magma.hpp"
#include "orderspace/order_engine.hpp"

namespace orderspace {

  // Bijection from off-diagonal pairs of an n-set onto [0, n(n-1)).
  std::size_t pair_index(Element a, Element b, std::size_t n);

  class ChiVector {
   public:
    // All-zero vector for an n-element carrier.
    explicit ChiVector(std::size_t n);
    // Throws InvalidInput unless bits has length n(n-1) and only 0/1.
    ChiVector(std::size_t n, std::string_view bits);

    std::size_t size() const noexcept { return _n; }
    std::size_t length() const noexcept { return _bits.size(); }

    bool bit(Element a, Element b) const {
      return _bits[pair_index(a, b, _n)];
    }
    void set(Element a, Element b, bool value) {
      _bits[pair_index(a, b, _n)] = value;
    }
    bool at(std::size_t index) const { return _bits.at(index); }

    std::string str() const;

    friend bool operator==(ChiVector const&, ChiVector const&) = default;

   private:
    std::size_t _n;
    std::vector<bool> _bits;
  };

  // Throws InvalidInput if r has undecided pairs.
  ChiVector encode(OrderRelation const& r);

  struct Rejection {
    Violation violation;
  };

  using DecodeResult = std::variant<OrderRelation, Rejection>;

  // Accepts the bit string iff it satisfies invariance, transitivity and
  // antisymmetry for the magma and side. Throws InvalidInput on a size
  // mismatch.
  DecodeResult decode(ChiVector const& chi, Magma const& m, Side side);

  // Membership of the encoded order in S_(a,b).
  bool subbasis_bit(ChiVector const& chi, Element a, Element b);

  struct ChiFile {
    Side side;
    std::vector<ChiVector> vectors;
  };

  // Header line followed by one or more bit lines. When the header is
  // missing, `fallback` supplies n and side and every line is a bit string.
  ChiFile read_chi(std::istream& in, std::string const& file = "<input>",
                   std::optional<std::pair<std::size_t, Side>> fallback = {});
  void write_chi(std::ostream& out, ChiVector const& chi, Side side);

}  // namespace orderspace
