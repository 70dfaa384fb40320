#pragma once

#include <stdexcept>
#include <string>

namespace catkit {

// Raised for malformed input and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace catkit
