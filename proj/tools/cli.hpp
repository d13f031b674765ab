#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orderspace::cli {

  // Exit statuses.
  inline constexpr int success      = 0;
  inline constexpr int refuted      = 1;
  inline constexpr int inconclusive = 2;
  inline constexpr int usage_error  = 3;
  inline constexpr int internal     = 4;

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace orderspace::cli
