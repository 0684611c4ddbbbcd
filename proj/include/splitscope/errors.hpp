#pragma once

#include <stdexcept>
#include <string>

namespace splitscope {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateSpan : Error {
    using Error::Error;
};

struct UnknownLabel : Error {
    explicit UnknownLabel(const std::string& label) : Error("unknown label: " + label) {}
};

struct InvalidConfiguration : Error {
    using Error::Error;
};

struct ZeroRay : Error {
    using Error::Error;
};

struct ImproperDiagram : Error {
    using Error::Error;
};

struct NotASplit : Error {
    using Error::Error;
};

struct MissingVertexSplit : Error {
    explicit MissingVertexSplit(const std::string& label)
        : Error("vertex admits no vertex split: " + label) {}
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct UnsupportedParameter : Error {
    using Error::Error;
};

struct InputError : Error {
    using Error::Error;
};

} // namespace splitscope
