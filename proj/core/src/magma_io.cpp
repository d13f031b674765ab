#include "orderspace/magma_io.hpp"

#include <fstream>
#include <optional>
#include <ostream>

#include "orderspace/detail/line_reader.hpp"
#include "orderspace/error.hpp"

namespace orderspace {

  namespace {

    struct ParsedMagma {
      Magma table;
      std::optional<Element> identity;
      std::optional<std::vector<Element>> inverse;
    };

    ParsedMagma parse(std::istream& in, std::string const& file,
                      bool allow_group_lines) {
      detail::LineReader reader(in, file);
      if (!reader.next()) {
        reader.fail("", "empty input, expected 'magma <n>'");
      }
      reader.expect_keyword("magma");
      reader.expect_count(2);
      auto const n = reader.integer<std::size_t>(1);
      if (n == 0) {
        reader.fail(reader.tokens()[1], "magma size must be positive");
      }
      if (n > 65536) {
        reader.fail(reader.tokens()[1], "magma size too large for a table");
      }
      std::vector<Element> table;
      table.reserve(n * n);
      for (std::size_t row = 0; row < n; ++row) {
        if (!reader.next()) {
          reader.fail("", "expected " + std::to_string(n) + " table rows, found " +
                              std::to_string(row));
        }
        reader.expect_count(n);
        for (std::size_t col = 0; col < n; ++col) {
          auto const value = reader.integer<Element>(col);
          if (value >= n) {
            reader.fail(reader.tokens()[col], "table entry out of range");
          }
          table.push_back(value);
        }
      }
      ParsedMagma parsed{Magma(n, std::move(table)), std::nullopt, std::nullopt};
      while (reader.next()) {
        auto const& head = reader.tokens().front();
        if (allow_group_lines && head == "identity") {
          reader.expect_count(2);
          auto const e = reader.integer<Element>(1);
          if (e >= n) {
            reader.fail(reader.tokens()[1], "identity out of range");
          }
          parsed.identity = e;
        } else if (allow_group_lines && head == "inverse") {
          reader.expect_count(n + 1);
          std::vector<Element> inv(n);
          for (std::size_t i = 0; i < n; ++i) {
            inv[i] = reader.integer<Element>(i + 1);
            if (inv[i] >= n) {
              reader.fail(reader.tokens()[i + 1], "inverse out of range");
            }
          }
          parsed.inverse = std::move(inv);
        } else {
          reader.fail(head, "unexpected line");
        }
      }
      return parsed;
    }

    std::ifstream open(std::filesystem::path const& path) {
      std::ifstream in(path);
      if (!in) {
        throw ParseError(path.string(), 0, "", "cannot open file");
      }
      return in;
    }

  }  // namespace

  Magma read_magma(std::istream& in, std::string const& file) {
    return parse(in, file, false).table;
  }

  Magma load_magma(std::filesystem::path const& path) {
    auto in = open(path);
    // Group files are valid magma files; the extra lines are ignored.
    return parse(in, path.string(), true).table;
  }

  FiniteGroup read_group(std::istream& in, std::string const& file) {
    auto parsed = parse(in, file, true);
    try {
      if (parsed.identity && parsed.inverse) {
        return FiniteGroup(std::move(parsed.table), *parsed.identity,
                           std::move(*parsed.inverse));
      }
      return FiniteGroup::from_table(std::move(parsed.table));
    } catch (InvalidInput const& e) {
      throw ParseError(file, 0, "", e.what());
    }
  }

  FiniteGroup load_group(std::filesystem::path const& path) {
    auto in = open(path);
    return read_group(in, path.string());
  }

  void write_magma(std::ostream& out, Magma const& m) {
    out << "magma " << m.size() << '\n';
    for (Element a = 0; a < m.size(); ++a) {
      auto const row = m.row(a);
      for (std::size_t b = 0; b < row.size(); ++b) {
        out << (b == 0 ? "" : " ") << row[b];
      }
      out << '\n';
    }
  }

  void write_group(std::ostream& out, FiniteGroup const& g) {
    write_magma(out, g.magma());
    out << "identity " << g.identity() << '\n' << "inverse";
    for (auto const inv : g.inverses()) {
      out << ' ' << inv;
    }
    out << '\n';
  }

}  // namespace orderspace
