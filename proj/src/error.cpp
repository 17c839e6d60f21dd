#include "linecast/error.hpp"

namespace linecast {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::RootHasNoParent: return "RootHasNoParent";
    case ErrorKind::LeafHasNoChildren: return "LeafHasNoChildren";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

} // namespace linecast
