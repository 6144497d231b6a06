#pragma once

#include <stdexcept>
#include <string>

namespace gp {

// Base class for everything this library throws on bad input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Spec file or word syntax problems.
struct ParseError : Error {
  using Error::Error;
};

// Element payload does not fit the node group it is used with.
struct InvalidElement : Error {
  using Error::Error;
};

// Shortlex of the identity was requested.
struct IdentityElement : Error {
  using Error::Error;
};

// Independence relation has a self-loop or names an unknown node.
struct InvalidIndependence : Error {
  using Error::Error;
};

// A generator binding is unusable (identity element, duplicate symbol,
// non-generating set, not closed under inversion, ...).
struct InvalidGenerator : Error {
  using Error::Error;
};

// A finite multiplication table is not a group table.
struct InvalidGroupTable : Error {
  using Error::Error;
};

struct UnknownNode : Error {
  using Error::Error;
};

struct InvalidSyllableWord : Error {
  using Error::Error;
};

// to_basis_word called on a word outside the kernel it rewrites in.
struct NotInKernel : Error {
  using Error::Error;
};

struct NotReduced : Error {
  using Error::Error;
};

struct NotCyclicallyReduced : Error {
  using Error::Error;
};

// An oracle hit its state or length cap before finishing.
struct BudgetExceeded : Error {
  using Error::Error;
};

// Two redundant computations of the same fact disagreed. Indicates a bug,
// never bad input; the CLI maps it to its own exit code.
struct InternalCheckError : Error {
  using Error::Error;
};

} // namespace gp
