#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace laxcenter {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: dimension mismatches, non-composable maps,
/// unparsable files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A structure failed one of its algebraic axioms. `axiom` names the law and
/// `witness` holds the basis indices at which it fails.
class AxiomError : public Error {
 public:
  AxiomError(std::string axiom, std::vector<std::size_t> witness,
             const std::string& detail);

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::vector<std::size_t> witness_;
};

/// A postcondition that holds mathematically was observed to fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace laxcenter
