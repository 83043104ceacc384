#ifndef STRATHOM_ERRORS_HPP
#define STRATHOM_ERRORS_HPP

#include <stdexcept>

namespace strathom {

/// Malformed input file or unparseable value.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input parsed but fails a structural precondition (invalid complex,
/// broken cocycle, non-full subcomplex, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace strathom

#endif
