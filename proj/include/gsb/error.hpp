#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsb {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by zero") {}
  };

  class FieldMismatch : public Error {
   public:
    FieldMismatch() : Error("operands belong to different fields") {}
  };

  class ZeroPolynomial : public Error {
   public:
    ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
  };

  // Raised when polynomials ordered by different monomial orders meet, or
  // when an operation receives monomials from the wrong universe.
  class OrderMismatch : public Error {
   public:
    using Error::Error;
    OrderMismatch() : Error("polynomials carry different monomial orders") {}
  };

  class UniverseMismatch : public Error {
   public:
    using Error::Error;
  };

  class NotMonic : public Error {
   public:
    NotMonic() : Error("polynomial is not monic") {}
  };

  class ParamNotApplicable : public Error {
   public:
    using Error::Error;
    ParamNotApplicable()
        : Error("composition family takes no parameter") {}
  };

  class ZeroInput : public Error {
   public:
    ZeroInput() : Error("zero polynomial among the generators") {}
  };

  class DegreeOutOfBound : public Error {
   public:
    DegreeOutOfBound(std::size_t degree, std::size_t bound)
        : Error("degree " + std::to_string(degree)
                + " exceeds the verified bound " + std::to_string(bound)),
          degree(degree),
          bound(bound) {}
    std::size_t degree;
    std::size_t bound;
  };

  class NotMinimal : public Error {
   public:
    using Error::Error;
  };

  class NotGroebner : public Error {
   public:
    using Error::Error;
  };

  // Parse errors carry a 1-based line and column.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": "
                + what),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
  };

  class SyntaxError : public ParseError {
   public:
    using ParseError::ParseError;
  };

  class UnknownGenerator : public ParseError {
   public:
    using ParseError::ParseError;
  };

  class OrderSpecMismatch : public ParseError {
   public:
    using ParseError::ParseError;
  };

}  // namespace gsb
