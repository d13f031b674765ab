#pragma once

// Closed-form membership predicates over coordinate normal forms, and the
// cone spec file.
//
// Predicate file: one `clause` line per disjunct; each clause is a
// conjunction of constraints `<coordinate><op><integer>` with op one of
// >= <= > < = !=. Klein's cone {p >= 1} u {p = 0, q >= 1} is
//
//   clause p>=1
//   clause p=0 q>=1
//
// Cone spec file: `group <spec>`, then `seed <word> <word> ...`, optional
// `witness-max <k>` and `radius <r>`.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orderspace {

  enum class Relation : std::uint8_t { ge, le, gt, lt, eq, ne };

  struct Constraint {
    std::size_t coordinate;
    Relation relation;
    std::int64_t value;
  };

  class Predicate {
   public:
    Predicate(std::vector<std::string> coordinate_names,
              std::vector<std::vector<Constraint>> clauses);

    bool eval(std::span<std::int64_t const> coordinates) const;
    std::vector<std::string> const& coordinate_names() const noexcept {
      return _names;
    }
    std::vector<std::vector<Constraint>> const& clauses() const noexcept {
      return _clauses;
    }
    // "p>=1 | p=0 q>=1"
    std::string str() const;

   private:
    std::vector<std::string> _names;
    std::vector<std::vector<Constraint>> _clauses;
  };

  // First nonzero coordinate i has sign signs[i] (each +1 or -1).
  Predicate lex_sign_predicate(std::vector<std::string> coordinate_names,
                               std::vector<int> const& signs);

  Predicate read_predicate(std::istream& in, std::string const& file,
                           std::vector<std::string> const& coordinate_names);

  struct ConeSpec {
    std::string group;
    std::vector<std::string> seeds;
    std::optional<std::size_t> witness_max;
    std::optional<std::size_t> radius;
  };

  ConeSpec read_cone_spec(std::istream& in, std::string const& file);

}  // namespace orderspace
