#ifndef SUNDET_ERRORS_HPP
#define SUNDET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sundet {

// An operation was asked to assert a conclusion whose mathematical
// hypothesis does not hold for the given input. Distinct from a
// computation failing.
class hypothesis_error : public std::runtime_error {
public:
    explicit hypothesis_error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Two independent computations of the same quantity disagreed, or a proven
// identity failed to hold numerically. Always a bug, never a math outcome.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what_arg) : std::logic_error(what_arg) {}
};

} // namespace sundet

#endif // SUNDET_ERRORS_HPP
