#pragma once

#include <stdexcept>
#include <string>

namespace grext {

/// A configured resource bound (module dimension, matrix size, ball size)
/// was exceeded. The CLI maps this to exit code 3.
struct resource_limit_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// Malformed textual input (words, functor expressions, matrix streams).
struct parse_error : std::runtime_error {
	parse_error(const std::string &msg, std::size_t pos)
	    : std::runtime_error(msg + " at position " + std::to_string(pos)),
	      position(pos)
	{
	}
	std::size_t position;
};

} // namespace grext
