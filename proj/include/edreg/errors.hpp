#pragma once

#include <stdexcept>
#include <string>

namespace edreg {

// Every weight in the local neighborhood vanished; the fit has no data.
class DegenerateNeighborhoodError : public std::runtime_error {
public:
    explicit DegenerateNeighborhoodError(const std::string& msg)
        : std::runtime_error(msg) {}
};

// The penalized normal equations are numerically singular.
class RankDeficiencyError : public std::runtime_error {
public:
    explicit RankDeficiencyError(const std::string& msg)
        : std::runtime_error(msg) {}
};

// CSV or JSON input could not be parsed; message carries the location.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A parameter-selection stage could not produce any usable fit.
class SelectionError : public std::runtime_error {
public:
    explicit SelectionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace edreg
