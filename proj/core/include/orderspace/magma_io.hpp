#pragma once

// Text format:
//
//   magma <n>
//   <row 0: 0*0 ... 0*(n-1)>
//   ...
//   identity <e>              (groups only)
//   inverse <i0> ... <i(n-1)> (groups only)

#include <filesystem>
#include <iosfwd>
#include <string>

#include "orderspace/magma.hpp"

namespace orderspace {

  Magma read_magma(std::istream& in, std::string const& file = "<input>");
  Magma load_magma(std::filesystem::path const& path);

  // Identity and inverse lines are optional; when absent they are derived
  // from the table.
  FiniteGroup read_group(std::istream& in, std::string const& file = "<input>");
  FiniteGroup load_group(std::filesystem::path const& path);

  void write_magma(std::ostream& out, Magma const& m);
  void write_group(std::ostream& out, FiniteGroup const& g);

}  // namespace orderspace
