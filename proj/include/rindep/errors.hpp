#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rindep {

// Bad caller input: out-of-range ids, malformed specs, invalid parameters.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input; carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(const std::string& msg, int line)
        : InputError(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An exhaustive oracle was asked to run beyond its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// A runtime check of an internal guarantee failed; indicates a bug, not an
// input property. Callers should abort the run and surface diagnostics.
class InternalInvariantError : public std::runtime_error {
public:
    explicit InternalInvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by the refinement loop when its cowitness promise turns out to be
// false; names the offending set and the vertex whose removal exposed it.
class PromiseViolation : public InternalInvariantError {
public:
    PromiseViolation(std::vector<int> x, int w, const std::string& msg)
        : InternalInvariantError(msg), x_(std::move(x)), w_(w) {}
    const std::vector<int>& offending_set() const { return x_; }
    int removed_vertex() const { return w_; }

private:
    std::vector<int> x_;
    int w_;
};

} // namespace rindep
