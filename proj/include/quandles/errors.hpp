#pragma once

#include <stdexcept>
#include <string>

namespace quandles {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid arguments or violated hypotheses (out-of-range elements,
/// non-coprime parameters, malformed input).
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

/// A structure failed an invariant it was assumed to satisfy, e.g. a
/// right translation of an unvalidated structure turned out non-bijective,
/// or an internal consistency check did not hold.
class structural_error : public error {
public:
    explicit structural_error(const std::string& what) : error(what) {}
};

/// An enumeration or materialization guard was exceeded. The operation is
/// well-defined but refuses to run at this size.
class resource_error : public error {
public:
    explicit resource_error(const std::string& what) : error(what) {}
};

} // namespace quandles
