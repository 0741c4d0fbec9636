#include "probplan/errors.h"

using namespace std;

namespace probplan {
string SourceLocation::str() const {
    return file + ":" + std::to_string(line) + ":" + std::to_string(column);
}

SyntaxError::SyntaxError(SourceLocation location, const string &message)
    : InputError(location.str() + ": syntax error: " + message),
      location_(std::move(location)) {
}

SemanticError::SemanticError(SourceLocation location, const string &message)
    : InputError(location.str() + ": " + message),
      location_(std::move(location)) {
}

UnsupportedConstruct::UnsupportedConstruct(SourceLocation location, const string &construct)
    : InputError(location.str() + ": unsupported construct " + construct),
      location_(std::move(location)) {
}

BlowupLimitExceeded::BlowupLimitExceeded(const string &schema, size_t cap)
    : InputError("normalizing '" + schema + "' needs more than " +
                 std::to_string(cap) + " split copies") {
}
}
