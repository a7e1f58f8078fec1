#ifndef SATPART_ERRORS_HPP
#define SATPART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace satpart {

// Bad user-supplied data (files, ids out of range, malformed instances).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failure with a position; line/col are 1-based, col 0 = whole line.
struct ParseError : InputError {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_ = 0)
        : InputError("parse error at line " + std::to_string(line_) +
                     (col_ > 0 ? ", col " + std::to_string(col_) : std::string()) + ": " + msg),
          line(line_), col(col_) {}
};

// Instance exceeds a configured resource limit (e.g. the brute-force cap).
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Postcondition / invariant guard. Active in all build types; a failure
// signals an implementation bug, not bad input.
inline void internal_check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("internal error: ") + msg);
}

}  // namespace satpart

#endif
