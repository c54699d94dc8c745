#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace incalg {

struct FieldMismatch : std::runtime_error {
    explicit FieldMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownElement : std::runtime_error {
    explicit UnknownElement(const std::string& what) : std::runtime_error(what) {}
};

struct AntisymmetryViolation : std::runtime_error {
    std::vector<std::string> cycle;
    AntisymmetryViolation(const std::string& what, std::vector<std::string> c)
        : std::runtime_error(what), cycle(std::move(c)) {}
};

struct UnsupportedCharacteristic : std::runtime_error {
    explicit UnsupportedCharacteristic(const std::string& what) : std::runtime_error(what) {}
};

struct AlgebraMismatch : std::runtime_error {
    explicit AlgebraMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct EnumerationTooLarge : std::runtime_error {
    explicit EnumerationTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidCocycle : std::runtime_error {
    explicit InvalidCocycle(const std::string& what) : std::runtime_error(what) {}
};

struct NotUnitalDecomposition : std::runtime_error {
    explicit NotUnitalDecomposition(const std::string& what) : std::runtime_error(what) {}
};

struct NotOpen : std::runtime_error {
    explicit NotOpen(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace incalg
