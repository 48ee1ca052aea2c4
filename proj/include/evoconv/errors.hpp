#ifndef EVOCONV_ERRORS_HPP
#define EVOCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace evc {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem-level failures: missing file, unwritable path, short read.
struct IoError : Error {
  using Error::Error;
};

// Structurally broken input: bad magic, truncated container, shape/payload
// mismatch. Distinct from IoError so callers can report corruption.
struct FormatError : Error {
  using Error::Error;
};

// Valid file, but a variant we refuse: stereo audio, exotic sample codecs.
struct UnsupportedError : Error {
  using Error::Error;
};

// A precondition or invariant violation in caller-supplied data.
struct ValidationError : Error {
  using Error::Error;
};

// NaN/Inf escaped a numeric kernel, or a loss went non-finite.
struct NumericError : Error {
  using Error::Error;
};

}  // namespace evc

#endif
