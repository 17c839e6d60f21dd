#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linecast {

enum class ErrorKind {
    InvalidParams,
    Overflow,
    OutOfRange,
    RootHasNoParent,
    LeafHasNoChildren,
    SameVertex,
    PreconditionViolated,
    TooLarge,
    Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace linecast
