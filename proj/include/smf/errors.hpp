// Error type shared across the library.
#ifndef SMF_ERRORS_HPP_
#define SMF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace smf {

// Thrown on contract violations: bad dimensions, unsupported sizes,
// enumeration caps, singular denominators, invalid configuration.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace smf

#endif  // SMF_ERRORS_HPP_
