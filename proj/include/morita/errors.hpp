#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "morita/validation.hpp"

namespace morita {

  class MoritaError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raw data failed validation; the report lists every violated law.
  class ValidationError : public MoritaError {
   public:
    ValidationError(std::string const& what, ValidationReport report)
        : MoritaError(what + ": " + report.summary()),
          _report(std::move(report)) {}

    ValidationReport const& report() const noexcept {
      return _report;
    }

   private:
    ValidationReport _report;
  };

  // A partial map was evaluated outside its domain.
  class DomainMismatch : public MoritaError {
   public:
    using MoritaError::MoritaError;
  };

  class GroupoidMismatch : public MoritaError {
   public:
    using MoritaError::MoritaError;
  };

  class UnknownObject : public MoritaError {
   public:
    using MoritaError::MoritaError;
  };

  class NotAnEquivalence : public MoritaError {
   public:
    using MoritaError::MoritaError;
  };

  class NotAGroup : public MoritaError {
   public:
    using MoritaError::MoritaError;
  };

  class NotPrePrincipal : public MoritaError {
   public:
    using MoritaError::MoritaError;
  };

  class NotBiprincipal : public MoritaError {
   public:
    using MoritaError::MoritaError;
  };

  // Raised when a construction on a quotient depends on the chosen
  // representative. The theory says this cannot happen.
  class IllDefined : public MoritaError {
   public:
    using MoritaError::MoritaError;
  };

  class BoundsTooLarge : public MoritaError {
   public:
    BoundsTooLarge(std::uint64_t estimate, std::uint64_t limit)
        : MoritaError("corpus bounds too large: estimated "
                      + std::to_string(estimate) + " candidates exceeds "
                      + std::to_string(limit)),
          _estimate(estimate) {}

    std::uint64_t estimate() const noexcept {
      return _estimate;
    }

   private:
    std::uint64_t _estimate;
  };

  class ParseError : public MoritaError {
   public:
    ParseError(std::size_t line, std::string const& message)
        : MoritaError("parse error at line " + std::to_string(line) + ": "
                      + message),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  class UnresolvedReference : public MoritaError {
   public:
    explicit UnresolvedReference(std::string const& name)
        : MoritaError("unresolved reference: " + name), _name(name) {}

    std::string const& name() const noexcept {
      return _name;
    }

   private:
    std::string _name;
  };

  class UnknownSuite : public MoritaError {
   public:
    explicit UnknownSuite(std::string const& name)
        : MoritaError("unknown suite: " + name) {}
  };

}  // namespace morita
