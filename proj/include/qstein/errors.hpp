#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qstein {

// Structured error categories used across the library.  Every failure that a
// caller can provoke through bad inputs maps onto one of these; internal
// logic errors stay plain std::logic_error.

struct ZeroParameter : std::runtime_error {
    explicit ZeroParameter(const std::string& what) : std::runtime_error(what) {}
};

struct IndexSetMismatch : std::runtime_error {
    explicit IndexSetMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct PairMismatch : std::runtime_error {
    explicit PairMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NonInvertibleZ : std::runtime_error {
    explicit NonInvertibleZ(const std::string& what) : std::runtime_error(what) {}
};

struct ModulusOne : std::runtime_error {
    explicit ModulusOne(const std::string& what) : std::runtime_error(what) {}
};

struct NotSubmultiplicativeData : std::runtime_error {
    explicit NotSubmultiplicativeData(const std::string& what) : std::runtime_error(what) {}
};

struct FamilyMismatch : std::runtime_error {
    explicit FamilyMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct GridNotClosed : std::runtime_error {
    explicit GridNotClosed(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySet : std::runtime_error {
    explicit EmptySet(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedDescriptor : std::runtime_error {
    explicit UnsupportedDescriptor(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownCommand : std::runtime_error {
    explicit UnknownCommand(const std::string& what) : std::runtime_error(what) {}
};

struct FlagError : std::runtime_error {
    explicit FlagError(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure with the offending position (0-based offset into the input)
// and a short description of what was expected there.
struct SyntaxError : std::runtime_error {
    SyntaxError(std::size_t position, const std::string& expected)
        : std::runtime_error("syntax error at position " + std::to_string(position) +
                             ": expected " + expected),
          position(position),
          expected(expected) {}

    std::size_t position;
    std::string expected;
};

}  // namespace qstein
