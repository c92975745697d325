#ifndef DOTSEG_TESTS_PROPERTIES_HPP
#define DOTSEG_TESTS_PROPERTIES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dotseg::test {

// A randomized invariant check. `check(cases, seed)` runs that many generated
// cases and returns an empty string, or a description of the first
// counterexample.
struct Property {
    std::string module;
    std::string name;
    std::function<std::string(std::size_t cases, std::uint64_t seed)> check;
};

const std::vector<Property>& all_properties();

} // namespace dotseg::test

#endif
