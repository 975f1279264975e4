#ifndef HIGGSE_ERRORS_HPP
#define HIGGSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace higgse {

struct PoleAtOne : std::runtime_error {
    explicit PoleAtOne(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroInput : std::invalid_argument {
    explicit ZeroInput(const std::string& what) : std::invalid_argument(what) {}
};

// A denominator factor (or divisor numerator) with zero constant term cannot
// be series-expanded at the origin.
struct ZeroConstantTerm : std::invalid_argument {
    explicit ZeroConstantTerm(const std::string& what) : std::invalid_argument(what) {}
};

struct DegreeOutOfRange : std::out_of_range {
    explicit DegreeOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct GenusOutOfRange : std::out_of_range {
    explicit GenusOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct UnknownShape : std::invalid_argument {
    explicit UnknownShape(const std::string& what) : std::invalid_argument(what) {}
};

struct UnsupportedSubset : std::invalid_argument {
    explicit UnsupportedSubset(const std::string& what) : std::invalid_argument(what) {}
};

struct LogTerminalityViolated : std::invalid_argument {
    explicit LogTerminalityViolated(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace higgse

#endif
