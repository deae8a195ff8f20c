#pragma once

#include <stdexcept>
#include <string>

namespace fanreg {

/// Malformed input: bad graph data, invalid fan spec, unknown vertex label.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Input exceeds the exact engines' size limits (subset sweeps, 2^n work).
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// A closed-form theorem was asked to evaluate an instance outside its
/// stated hypotheses.  Distinct from validation_error so callers can tell
/// "formula inapplicable" apart from "input malformed".
class hypothesis_error : public std::runtime_error {
public:
    explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fanreg
