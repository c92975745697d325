#ifndef DOTSEG_ERROR_HPP
#define DOTSEG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dotseg {

// Raised for every contract violation detected by the library (bad input
// files, malformed segmentations, size mismatches, ...).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dotseg

#endif
