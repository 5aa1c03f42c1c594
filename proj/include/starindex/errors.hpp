#pragma once

#include <stdexcept>
#include <string>

namespace starindex {

// Coarse classification used by the CLI to map failures to exit codes.
enum class ErrorClass {
    Input = 1,     // unreadable files, malformed records, bad arguments
    Geometry = 2,  // invalid polygons, points outside domains, escaped maps
    NotStar = 3,   // star-shapedness / admissible-center failures
    Degenerate = 4,// zero convexity index, numerically-identity maps
    Budget = 5,    // solver budget exhausted before reaching tolerance
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), cls_(cls), code_(std::move(code)) {}

    ErrorClass error_class() const noexcept { return cls_; }
    const std::string& code() const noexcept { return code_; }

private:
    ErrorClass cls_;
    std::string code_;
};

struct InputError : Error {
    InputError(std::string code, const std::string& what)
        : Error(ErrorClass::Input, std::move(code), what) {}
};

struct GeometryError : Error {
    GeometryError(std::string code, const std::string& what)
        : Error(ErrorClass::Geometry, std::move(code), what) {}
};

struct NotStarError : Error {
    NotStarError(std::string code, const std::string& what)
        : Error(ErrorClass::NotStar, std::move(code), what) {}
};

struct DegenerateError : Error {
    DegenerateError(std::string code, const std::string& what)
        : Error(ErrorClass::Degenerate, std::move(code), what) {}
};

struct BudgetError : Error {
    BudgetError(std::string code, const std::string& what)
        : Error(ErrorClass::Budget, std::move(code), what) {}
};

}  // namespace starindex
