#pragma once

#include <stdexcept>
#include <string>

namespace wqed {

// Exit-code contract shared by the C API and the CLI:
// invalid input -> 2, runtime abort (norm drift, boundary contamination,
// quadrature non-convergence, ...) -> 3.
class Error : public std::runtime_error {
public:
    enum class Code { invalid_input = 2, runtime_abort = 3 };

    Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const noexcept { return code_; }

private:
    Code code_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what)
        : Error(Code::invalid_input, what) {}
};

class RuntimeAbort : public Error {
public:
    explicit RuntimeAbort(const std::string& what)
        : Error(Code::runtime_abort, what) {}
};

}  // namespace wqed
