#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

// Malformed or out-of-domain arguments (maps to CLI exit status 2).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A configured size or memory cap would be exceeded (CLI exit status 3).
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace permlab
