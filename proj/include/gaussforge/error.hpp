#pragma once

#include <stdexcept>
#include <string>

namespace gaussforge {

// Bad input: malformed text, unknown ids, violated preconditions.
class ValidationError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

class ParseError : public ValidationError {
public:
	using ValidationError::ValidationError;
};

// A computation refused because it would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

} // namespace gaussforge
