#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace realizability {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A closed term was required but the input has a free variable.
struct OpenTermError : Error {
    explicit OpenTermError(const std::string& variable)
        : Error("open term: free variable '" + variable + "'"), variable(variable) {}
    std::string variable;
};

struct DuplicateElementError : Error {
    explicit DuplicateElementError(const std::string& element)
        : Error("duplicate element '" + element + "'"), element(element) {}
    std::string element;
};

struct EmptyRealizerSetError : Error {
    explicit EmptyRealizerSetError(const std::string& element)
        : Error("element '" + element + "' has no realizers"), element(element) {}
    std::string element;
};

struct UnknownElementError : Error {
    explicit UnknownElementError(const std::string& element)
        : Error("unknown element '" + element + "'"), element(element) {}
    std::string element;
};

struct EmptyBlockError : Error {
    explicit EmptyBlockError(std::size_t index)
        : Error("block " + std::to_string(index) + " is empty"), index(index) {}
    std::size_t index;
};

struct OverlappingBlocksError : Error {
    OverlappingBlocksError(std::size_t i, std::size_t j, const std::string& witness)
        : Error("blocks " + std::to_string(i) + " and " + std::to_string(j) +
                " overlap: " + witness + " lies in both"),
          i(i), j(j), witness(witness) {}
    std::size_t i;
    std::size_t j;
    std::string witness;  // printed term convertible into both blocks
};

struct SignatureMismatchError : Error {
    using Error::Error;
};

struct TargetBlockNotFoundError : Error {
    explicit TargetBlockNotFoundError(const std::string& detail)
        : Error("no target block found: " + detail) {}
};

// Workspace / CLI surface.

struct SyntaxError : Error {
    SyntaxError(std::size_t line, std::size_t col, const std::string& expected)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) +
                ": expected " + expected),
          line(line), col(col), expected(expected) {}
    std::size_t line;
    std::size_t col;
    std::string expected;
};

struct UnboundNameError : Error {
    explicit UnboundNameError(const std::string& name)
        : Error("unbound name '" + name + "'"), name(name) {}
    std::string name;
};

struct DuplicateNameError : Error {
    explicit DuplicateNameError(const std::string& name)
        : Error("duplicate name '" + name + "'"), name(name) {}
    std::string name;
};

struct NameNotFoundError : Error {
    explicit NameNotFoundError(const std::string& name)
        : Error("name not found: '" + name + "'"), name(name) {}
    std::string name;
};

struct UnknownCommandError : Error {
    explicit UnknownCommandError(const std::string& command)
        : Error("unknown command '" + command + "'"), command(command) {}
    std::string command;
};

}  // namespace realizability
