#ifndef TIEDMON_ERROR_HPP_
#define TIEDMON_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tiedmon {

  // Base class for every recoverable domain error raised by the library.
  // The CLI maps these to exit status 1.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Input text or blocks that do not describe a valid object.
  class MalformedInput : public Error {
   public:
    using Error::Error;
  };

  // Operands that live on different ground sets / strand counts.
  class SizeMismatch : public Error {
   public:
    using Error::Error;
  };

  // A precondition on the value of an argument failed (index range,
  // non-Brauer input to a Brauer-only routine, and so on).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::string const& what, std::size_t reached)
        : Error(what), reached_(reached) {}

    // Number of elements (or items) produced before the budget ran out.
    std::size_t reached() const noexcept {
      return reached_;
    }

   private:
    std::size_t reached_;
  };

  // Broken internal invariant. Never expected; signals a bug.
  class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace tiedmon

#endif  // TIEDMON_ERROR_HPP_
