#pragma once

#include <stdexcept>
#include <string>

namespace setgraph
{
    /// Argument outside a configured cap or a domain (n, cardinality, label index).
    class RangeError : public std::out_of_range
    {
    public:
        using std::out_of_range::out_of_range;
    };

    /// Malformed input: bad mask, length mismatch, unknown claim id or format.
    class InvalidArgument : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Refusal to allocate or search beyond a resource guard.
    class ResourceError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}
