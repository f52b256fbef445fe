#ifndef OBLIQ_BASE_HPP
#define OBLIQ_BASE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace obliq {

using Point = std::uint32_t;  // point in a permutation domain
using EIdx = std::uint32_t;   // index into a group's element table

/// Errors that map to CLI exit codes: ParseError -> 2, ResourceError -> 3,
/// everything else -> 2 (usage).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

/// Resource limits shared across the library. Defaults: groups of order up to
/// 2*10^4 get the exhaustive engine (full element table); anything larger
/// falls back to a stabilizer chain supporting only order / membership /
/// image computations. Full subgroup surveys (needed for strong oblique
/// cores and radicals) are restricted to orders <= survey_cap.
struct Limits {
  std::uint64_t exhaustive_cap = 20000;
  std::uint64_t hard_order_cap = std::uint64_t(1) << 31;
  std::uint64_t survey_cap = 2000;

  static const Limits& defaults() {
    static const Limits l{};
    return l;
  }
};

}  // namespace obliq

#endif
