#pragma once

#include <stdexcept>

namespace trib {

/// Index or argument outside the domain an operation is defined on.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// lo > hi for a range request.
class InvalidRange : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A relation that must hold exactly did not (e.g. a 41-divisibility).
/// Never expected in practice; indicates a bug or corrupted input.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Working precision too low for the requested numeric result.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace trib
