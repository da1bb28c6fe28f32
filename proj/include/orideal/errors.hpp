#pragma once

#include <stdexcept>
#include <string>

namespace orideal {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two values from different ring contexts were combined.
class ContextError : public Error {
public:
  using Error::Error;
};

/// Checked exponent arithmetic overflowed the 32-bit range.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Operation requires a proper nonzero ideal (zero or unit ideal given).
class DegenerateIdealError : public Error {
public:
  using Error::Error;
};

/// The prime handed to a component query is not associated to the ideal.
class NotAssociatedError : public Error {
public:
  using Error::Error;
};

/// A closed-form evaluator was called outside its hypotheses.
class NotApplicableError : public Error {
public:
  using Error::Error;
};

/// Malformed or inconsistent caller-supplied data.
class InputError : public Error {
public:
  using Error::Error;
};

/// Unknown vertex name or index.
class VertexError : public Error {
public:
  using Error::Error;
};

/// Vertex name collision when assembling a graph or join.
class NameError : public Error {
public:
  using Error::Error;
};

/// A configured size ceiling (generator count, lattice size) was exceeded.
class BudgetError : public Error {
public:
  using Error::Error;
};

} // namespace orideal
