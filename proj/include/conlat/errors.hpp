#ifndef CONLAT_ERRORS_HPP
#define CONLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conlat {

// Invalid user input (bad file, malformed partition text, precondition
// violation).  The CLI maps this to exit code 1.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was exceeded.  The CLI maps this to exit code 2.
struct cap_error : std::runtime_error {
  explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace conlat

#endif
