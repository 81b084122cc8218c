#pragma once

#include <stdexcept>
#include <string>

namespace arrival {

// Input rejected by a precondition check (bad graph, malformed file).
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text handed to a parser. The message carries the position.
class ParseError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// A counter would leave the 64-bit range.
class CounterOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// An iteration cap ran out before the loop reached its exit condition.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A property that the theory guarantees did not hold. Always a library bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace arrival
