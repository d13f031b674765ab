#include "orderspace/cantor_codec.hpp"

#include <istream>
#include <ostream>

#include "orderspace/detail/line_reader.hpp"
#include "orderspace/error.hpp"

namespace orderspace {

  std::size_t pair_index(Element a, Element b, std::size_t n) {
    if (a >= n || b >= n) {
      throw InvalidInput("pair (" + std::to_string(a) + ", " +
                         std::to_string(b) + ") out of range for n = " +
                         std::to_string(n));
    }
    if (a == b) {
      throw InvalidInput("diagonal pair (" + std::to_string(a) + ", " +
                         std::to_string(b) + ") has no coordinate");
    }
    // Row a holds n-1 coordinates; within the row, b skips the diagonal.
    return static_cast<std::size_t>(a) * (n - 1) + (b < a ? b : b - 1);
  }

  ChiVector::ChiVector(std::size_t n) : _n(n), _bits(n * (n == 0 ? 0 : n - 1)) {}

  ChiVector::ChiVector(std::size_t n, std::string_view bits) : ChiVector(n) {
    if (bits.size() != _bits.size()) {
      throw InvalidInput("bit string has length " + std::to_string(bits.size()) +
                         ", expected n(n-1) = " + std::to_string(_bits.size()));
    }
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != '0' && bits[i] != '1') {
        throw InvalidInput("bit string may only contain 0 and 1");
      }
      _bits[i] = bits[i] == '1';
    }
  }

  std::string ChiVector::str() const {
    std::string out(_bits.size(), '0');
    for (std::size_t i = 0; i < _bits.size(); ++i) {
      if (_bits[i]) {
        out[i] = '1';
      }
    }
    return out;
  }

  ChiVector encode(OrderRelation const& r) {
    if (!r.completed()) {
      throw InvalidInput("cannot encode a relation with undecided pairs");
    }
    auto const n = r.size();
    ChiVector chi(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (a != b && r.holds(a, b)) {
          chi.set(a, b, true);
        }
      }
    }
    return chi;
  }

  DecodeResult decode(ChiVector const& chi, Magma const& m, Side side) {
    auto const n = m.size();
    if (chi.size() != n) {
      throw InvalidInput("characteristic vector is for " +
                         std::to_string(chi.size()) +
                         " elements but the magma has " + std::to_string(n));
    }
    std::vector<PairState> states(n * n, PairState::fails);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (a != b && chi.bit(a, b)) {
          states[static_cast<std::size_t>(a) * n + b] = PairState::holds;
        }
      }
    }
    OrderRelation r(n, std::move(states));
    auto const check = verify_order(m, r, side);
    if (!check.valid()) {
      return Rejection{*check.violation};
    }
    return r;
  }

  bool subbasis_bit(ChiVector const& chi, Element a, Element b) {
    return chi.bit(a, b);
  }

  ChiFile read_chi(std::istream& in, std::string const& file,
                   std::optional<std::pair<std::size_t, Side>> fallback) {
    detail::LineReader reader(in, file);
    std::string line;
    std::size_t n = 0;
    ChiFile out{Side::left, {}};
    bool have_header = false;
    std::vector<std::string> pending;
    while (reader.next_raw(line)) {
      while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) {
        line.pop_back();
      }
      if (!have_header && line.rfind("chi", 0) == 0) {
        // Re-tokenise the header.
        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
          while (i < line.size() && line[i] == ' ') {
            ++i;
          }
          auto const start = i;
          while (i < line.size() && line[i] != ' ') {
            ++i;
          }
          if (i > start) {
            tokens.push_back(line.substr(start, i - start));
          }
        }
        if (tokens.size() != 3 || tokens[0] != "chi") {
          reader.fail(line, "expected 'chi <n> <side>'");
        }
        n = reader.parse_integer<std::size_t>(tokens[1]);
        auto const side = parse_side(tokens[2]);
        if (!side) {
          reader.fail(tokens[2], "side must be left, right or bi");
        }
        out.side    = *side;
        have_header = true;
        continue;
      }
      if (!have_header) {
        if (!fallback) {
          reader.fail(line, "missing 'chi <n> <side>' header");
        }
        n           = fallback->first;
        out.side    = fallback->second;
        have_header = true;
      }
      if (line.empty() && n > 1) {
        continue;
      }
      try {
        out.vectors.emplace_back(n, line);
      } catch (InvalidInput const& e) {
        reader.fail(line, e.what());
      }
    }
    if (!have_header) {
      reader.fail("", "empty input, expected 'chi <n> <side>'");
    }
    if (out.vectors.empty()) {
      if (n > 1) {
        reader.fail("", "missing bit string line");
      }
      out.vectors.emplace_back(n);
    }
    return out;
  }

  void write_chi(std::ostream& out, ChiVector const& chi, Side side) {
    out << "chi " << chi.size() << ' ' << to_string(side) << '\n'
        << chi.str() << '\n';
  }

}  // namespace orderspace
