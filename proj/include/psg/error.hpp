// Exception hierarchy shared by every psg module.  The CLI maps these onto
// its exit-code contract, so each kind of failure gets its own type.

#ifndef PSG_ERROR_HPP_
#define PSG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psg {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed graph file, word, set file or flag value.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& reason)
        : Error("line " + std::to_string(line) + ": " + reason),
          line_(line),
          reason_(reason) {}

    explicit ParseError(std::string const& reason)
        : Error(reason), line_(0), reason_(reason) {}

    // 0 when the error is not tied to a line of input.
    std::size_t line() const noexcept {
      return line_;
    }

    std::string const& reason() const noexcept {
      return reason_;
    }

   private:
    std::size_t line_;
    std::string reason_;
  };

  // Input violates a documented precondition (unknown vertex, graph
  // mismatch, non-symmetric set, ...).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // An enumeration would exceed its element or length cap.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  // An exhaustive oracle was asked to run above its size cap.
  class OracleCapExceeded : public CapExceeded {
   public:
    using CapExceeded::CapExceeded;
  };

  // The defining graph does not split as a join.
  class NotAProduct : public DomainError {
   public:
    using DomainError::DomainError;
  };

  // The reduction partition was requested for a set whose displacement
  // profile does not meet the hypotheses.
  class PreconditionError : public DomainError {
   public:
    using DomainError::DomainError;
  };

}  // namespace psg

#endif  // PSG_ERROR_HPP_
