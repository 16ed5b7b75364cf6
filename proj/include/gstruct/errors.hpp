#pragma once

#include <stdexcept>
#include <string>

namespace gstruct {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegreeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidFrame : std::runtime_error {
    int i, j, k;
    InvalidFrame(const std::string& what, int i_ = -1, int j_ = -1, int k_ = -1)
        : std::runtime_error(what), i(i_), j(j_), k(k_) {}
};

struct UnsupportedOperation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structure fails a hypothesis; `condition` names the violated equation.
struct NotAdmissible : std::runtime_error {
    std::string condition;
    NotAdmissible(std::string cond, const std::string& what)
        : std::runtime_error(what), condition(std::move(cond)) {}
};

struct InternalConsistency : std::logic_error {
    using std::logic_error::logic_error;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), column(c) {}
};

} // namespace gstruct
