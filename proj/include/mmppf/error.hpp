#pragma once

#include <stdexcept>
#include <string>

namespace mmppf {

// All toolkit errors carry a stable machine-readable code next to the
// human-readable message. Tests match on the code.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Error parse_error(const std::string& where, const std::string& what) {
    return Error("PARSE_ERROR", where + ": " + what);
}

inline Error dangling_reference(const std::string& id, const std::string& where) {
    return Error("DANGLING_REFERENCE", id + " (at " + where + ")");
}

inline Error arity_error(const std::string& where, const std::string& what) {
    return Error("ARITY_ERROR", where + ": " + what);
}

}  // namespace mmppf
