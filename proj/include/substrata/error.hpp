#ifndef SUBSTRATA_ERROR_HPP
#define SUBSTRATA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace substrata {

/// Base class of all library errors. `module()` names the component that
/// raised it so front ends can report where a run stopped.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(std::move(module)) {}
  const std::string& module() const { return module_; }

 private:
  std::string module_;
};

/// Bad user input: malformed flags, incompatible settings, unparseable labels.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Data package problems: schema violations, unresolved labels, failed invariants.
class DataError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; the computation cannot be trusted.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace substrata

#endif  // SUBSTRATA_ERROR_HPP
