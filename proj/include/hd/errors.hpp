#pragma once

#include <stdexcept>
#include <string>

namespace hd {

// Thrown when an operation lands on (or, in float mode, within the guard
// band of) the discontinuity set of the map being applied.
class discontinuity_error : public std::runtime_error {
public:
    explicit discontinuity_error(std::string what) : std::runtime_error(std::move(what)) {}
};

// Exact-mode rationals grow without bound under repeated inversion; this is
// raised once the combined numerator/denominator bit length of an operand
// exceeds the configured budget.
class resource_error : public std::runtime_error {
public:
    resource_error(std::string what, std::size_t bits)
        : std::runtime_error(std::move(what)), bits_(bits) {}
    std::size_t bits() const { return bits_; }

private:
    std::size_t bits_;
};

class parse_error : public std::runtime_error {
public:
    explicit parse_error(std::string what) : std::runtime_error(std::move(what)) {}
};

// Stepping a truncated coordinate word past its last known entry.
class exhausted_word_error : public std::runtime_error {
public:
    explicit exhausted_word_error(std::string what) : std::runtime_error(std::move(what)) {}
};

// Requested symbol window cannot be filled from the available word entries.
class window_error : public std::runtime_error {
public:
    window_error(std::string what, int fillable)
        : std::runtime_error(std::move(what)), fillable_(fillable) {}
    int fillable() const { return fillable_; }

private:
    int fillable_;
};

class empty_future_error : public std::runtime_error {
public:
    explicit empty_future_error(std::string what) : std::runtime_error(std::move(what)) {}
};

// A monotone sweep failed to bracket a sign change where one must exist.
class bracket_error : public std::runtime_error {
public:
    explicit bracket_error(std::string what) : std::runtime_error(std::move(what)) {}
};

// No curve branch realizes the requested sign pattern.
class branch_error : public std::runtime_error {
public:
    explicit branch_error(std::string what) : std::runtime_error(std::move(what)) {}
};

}  // namespace hd
