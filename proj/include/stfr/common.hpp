#pragma once

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <system_error>

namespace stfr {

/// Bad input shapes, malformed files, inconsistent configuration.
/// CLI maps this to exit code 2.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: singular systems, divergent training, degenerate data.
/// CLI maps this to exit code 3.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw validation_error(msg);
}

/// Shortest decimal string that parses back to the exact same double.
/// Used by every file writer so that reruns are byte-identical and
/// round-trips are lossless.
inline std::string format_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

inline double parse_double(std::string_view text, const std::string& context) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw validation_error("not a number: '" + std::string(text) + "' (" + context + ")");
    return v;
}

inline long parse_long(std::string_view text, const std::string& context) {
    long v = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw validation_error("not an integer: '" + std::string(text) + "' (" + context + ")");
    return v;
}

} // namespace stfr
