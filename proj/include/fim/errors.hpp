#pragma once

#include <stdexcept>
#include <string>

namespace fim {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated by the caller.
struct precondition_error : error {
  using error::error;
};

/// A parse error in a word, expression or JSON input.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

/// A computed constant exceeded the configured ceiling, or 64-bit
/// arithmetic would overflow. Decision procedures refuse to enumerate
/// balls whose bounds are this large.
struct constant_overflow : error {
  using error::error;
};

}  // namespace fim
