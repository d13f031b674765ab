#include "orderspace/cone_description.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <utility>

#include "orderspace/detail/line_reader.hpp"
#include "orderspace/error.hpp"

namespace orderspace {

  namespace {

    constexpr std::array<std::pair<std::string_view, Relation>, 6> relations{{
        {">=", Relation::ge},
        {"<=", Relation::le},
        {"!=", Relation::ne},
        {">", Relation::gt},
        {"<", Relation::lt},
        {"=", Relation::eq},
    }};

    std::string_view symbol(Relation r) {
      for (auto const& [text, rel] : relations) {
        if (rel == r) {
          return text;
        }
      }
      return "?";
    }

    bool holds(Relation r, std::int64_t x, std::int64_t v) {
      switch (r) {
        case Relation::ge:
          return x >= v;
        case Relation::le:
          return x <= v;
        case Relation::gt:
          return x > v;
        case Relation::lt:
          return x < v;
        case Relation::eq:
          return x == v;
        case Relation::ne:
          return x != v;
      }
      return false;
    }

  }  // namespace

  Predicate::Predicate(std::vector<std::string> coordinate_names,
                       std::vector<std::vector<Constraint>> clauses)
      : _names(std::move(coordinate_names)), _clauses(std::move(clauses)) {
    for (auto const& clause : _clauses) {
      for (auto const& c : clause) {
        if (c.coordinate >= _names.size()) {
          throw InvalidInput("constraint refers to coordinate " +
                             std::to_string(c.coordinate) + " of " +
                             std::to_string(_names.size()));
        }
      }
    }
  }

  bool Predicate::eval(std::span<std::int64_t const> coordinates) const {
    if (coordinates.size() != _names.size()) {
      throw InvalidInput("predicate expects " + std::to_string(_names.size()) +
                         " coordinates, got " +
                         std::to_string(coordinates.size()));
    }
    return std::any_of(_clauses.begin(), _clauses.end(), [&](auto const& clause) {
      return std::all_of(clause.begin(), clause.end(), [&](Constraint const& c) {
        return holds(c.relation, coordinates[c.coordinate], c.value);
      });
    });
  }

  std::string Predicate::str() const {
    if (_clauses.empty()) {
      return "false";
    }
    std::string out;
    for (std::size_t i = 0; i < _clauses.size(); ++i) {
      if (i > 0) {
        out += " | ";
      }
      if (_clauses[i].empty()) {
        out += "true";
      }
      for (std::size_t j = 0; j < _clauses[i].size(); ++j) {
        auto const& c = _clauses[i][j];
        if (j > 0) {
          out += ' ';
        }
        out += _names[c.coordinate];
        out += symbol(c.relation);
        out += std::to_string(c.value);
      }
    }
    return out;
  }

  Predicate lex_sign_predicate(std::vector<std::string> coordinate_names,
                               std::vector<int> const& signs) {
    if (signs.size() != coordinate_names.size()) {
      throw InvalidInput("one sign per coordinate expected");
    }
    std::vector<std::vector<Constraint>> clauses;
    for (std::size_t i = 0; i < signs.size(); ++i) {
      if (signs[i] != 1 && signs[i] != -1) {
        throw InvalidInput("signs must be +1 or -1");
      }
      std::vector<Constraint> clause;
      for (std::size_t j = 0; j < i; ++j) {
        clause.push_back({j, Relation::eq, 0});
      }
      clause.push_back(signs[i] > 0 ? Constraint{i, Relation::ge, 1}
                                    : Constraint{i, Relation::le, -1});
      clauses.push_back(std::move(clause));
    }
    return Predicate(std::move(coordinate_names), std::move(clauses));
  }

  Predicate read_predicate(std::istream& in, std::string const& file,
                           std::vector<std::string> const& coordinate_names) {
    detail::LineReader reader(in, file);
    std::vector<std::vector<Constraint>> clauses;
    while (reader.next()) {
      auto const& tokens = reader.tokens();
      reader.expect_keyword("clause");
      std::vector<Constraint> clause;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto const& tok = tokens[i];
        auto const op = tok.find_first_of("<>=!");
        if (op == std::string::npos || op == 0) {
          reader.fail(tok, "expected <coordinate><op><integer>");
        }
        auto const name = tok.substr(0, op);
        auto const it =
            std::find(coordinate_names.begin(), coordinate_names.end(), name);
        if (it == coordinate_names.end()) {
          reader.fail(tok, "unknown coordinate '" + name + "'");
        }
        std::optional<Relation> rel;
        std::size_t value_at = 0;
        for (auto const& [text, r] : relations) {
          if (tok.compare(op, text.size(), text) == 0) {
            rel      = r;
            value_at = op + text.size();
            break;
          }
        }
        if (!rel) {
          reader.fail(tok, "unknown relation");
        }
        clause.push_back(
            {static_cast<std::size_t>(it - coordinate_names.begin()), *rel,
             reader.parse_integer<std::int64_t>(tok.substr(value_at))});
      }
      if (clause.empty()) {
        reader.fail("clause", "empty clause");
      }
      clauses.push_back(std::move(clause));
    }
    if (clauses.empty()) {
      reader.fail("", "predicate file has no clause lines");
    }
    return Predicate(coordinate_names, std::move(clauses));
  }

  ConeSpec read_cone_spec(std::istream& in, std::string const& file) {
    detail::LineReader reader(in, file);
    ConeSpec spec;
    bool have_group = false;
    while (reader.next()) {
      auto const& tokens = reader.tokens();
      auto const& key    = tokens.front();
      if (key == "group") {
        reader.expect_count(2);
        spec.group = tokens[1];
        have_group = true;
      } else if (key == "seed") {
        if (tokens.size() < 2) {
          reader.fail(key, "seed line needs at least one word");
        }
        spec.seeds.insert(spec.seeds.end(), tokens.begin() + 1, tokens.end());
      } else if (key == "witness-max") {
        reader.expect_count(2);
        spec.witness_max = reader.integer<std::size_t>(1);
      } else if (key == "radius") {
        reader.expect_count(2);
        spec.radius = reader.integer<std::size_t>(1);
      } else {
        reader.fail(key, "unknown keyword");
      }
    }
    if (!have_group) {
      reader.fail("", "missing 'group <spec>' line");
    }
    return spec;
  }

}  // namespace orderspace
