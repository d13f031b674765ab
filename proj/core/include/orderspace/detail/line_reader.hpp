#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "orderspace/error.hpp"

namespace orderspace::detail {

  // Reads whitespace-separated tokens line by line and reports parse errors
  // with file name, line number and offending token. '#' starts a comment;
  // blank lines are skipped.
  class LineReader {
   public:
    LineReader(std::istream& in, std::string file)
        : _in(in), _file(std::move(file)) {}

    // False at end of input.
    bool next() {
      std::string line;
      while (std::getline(_in, line)) {
        ++_line;
        if (!line.empty() && line.back() == '\r') {
          line.pop_back();
        }
        if (auto const hash = line.find('#'); hash != std::string::npos) {
          line.erase(hash);
        }
        split(line);
        if (!_tokens.empty()) {
          return true;
        }
      }
      _tokens.clear();
      return false;
    }

    // Reads the next line as raw text; used for bit strings that may be
    // empty.
    bool next_raw(std::string& out) {
      if (!std::getline(_in, out)) {
        return false;
      }
      ++_line;
      if (!out.empty() && out.back() == '\r') {
        out.pop_back();
      }
      return true;
    }

    std::vector<std::string> const& tokens() const noexcept { return _tokens; }
    std::size_t line() const noexcept { return _line; }
    std::string const& file() const noexcept { return _file; }

    [[noreturn]] void fail(std::string const& token,
                           std::string const& what) const {
      throw ParseError(_file, _line, token, what);
    }

    void expect_keyword(std::string_view keyword) const {
      if (_tokens.empty() || _tokens.front() != keyword) {
        fail(_tokens.empty() ? "" : _tokens.front(),
             "expected '" + std::string(keyword) + "'");
      }
    }

    void expect_count(std::size_t count) const {
      if (_tokens.size() != count) {
        fail(_tokens.size() > count ? _tokens[count] : "",
             "expected " + std::to_string(count) + " tokens, found " +
                 std::to_string(_tokens.size()));
      }
    }

    template <typename Int>
    Int integer(std::size_t i) const {
      if (i >= _tokens.size()) {
        fail("", "missing integer");
      }
      return parse_integer<Int>(_tokens[i]);
    }

    template <typename Int>
    Int parse_integer(std::string const& tok) const {
      Int value{};
      auto const* first = tok.data();
      auto const* last  = tok.data() + tok.size();
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last) {
        fail(tok, "not a valid integer");
      }
      return value;
    }

   private:
    void split(std::string const& line) {
      _tokens.clear();
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
          ++i;
        }
        auto const start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
          ++i;
        }
        if (i > start) {
          _tokens.emplace_back(line.substr(start, i - start));
        }
      }
    }

    std::istream& _in;
    std::string _file;
    std::size_t _line = 0;
    std::vector<std::string> _tokens;
  };

}  // namespace orderspace::detail
