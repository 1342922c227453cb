#pragma once

#include <stdexcept>
#include <string>

namespace olsembed {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates a documented precondition.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A partial latin square was requested with no filled cell.
class EmptySquare : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Two squares that must share an order do not.
class OrderMismatch : public Error {
public:
    using Error::Error;
};

/// A construction step failed in a way that should be impossible.
/// Carries stage diagnostics in what().
class InternalInvariant : public Error {
public:
    using Error::Error;
};

/// A trade touched a cell already owned by an earlier trade.
class TradeCollision : public InternalInvariant {
public:
    using InternalInvariant::InternalInvariant;
};

} // namespace olsembed
