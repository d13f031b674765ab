#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orderspace {

  // Base of everything the library throws on bad input or exhausted limits.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  // A configured size or search budget was exceeded.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string file, std::size_t line, std::string token,
               std::string const& what)
        : Error(file + ":" + std::to_string(line) + ": " + what +
                (token.empty() ? std::string() : " (at '" + token + "')")),
          _file(std::move(file)),
          _line(line),
          _token(std::move(token)) {}

    std::string const& file() const noexcept { return _file; }
    std::size_t line() const noexcept { return _line; }
    std::string const& token() const noexcept { return _token; }

   private:
    std::string _file;
    std::size_t _line;
    std::string _token;
  };

  // Two engines disagreed on something that must be consistent.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace orderspace
