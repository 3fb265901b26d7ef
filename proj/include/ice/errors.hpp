#ifndef ICE_ERRORS_HPP
#define ICE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ice {

struct ZeroDivisionError : std::domain_error {
    explicit ZeroDivisionError(const std::string& what) : std::domain_error(what) {}
};

struct NonUnitSubstitutionError : std::invalid_argument {
    explicit NonUnitSubstitutionError(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyPolynomialError : std::domain_error {
    explicit EmptyPolynomialError(const std::string& what) : std::domain_error(what) {}
};

struct UnboundVariableError : std::invalid_argument {
    explicit UnboundVariableError(const std::string& what) : std::invalid_argument(what) {}
};

struct SizeMismatchError : std::invalid_argument {
    explicit SizeMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct MalformedSpecError : std::invalid_argument {
    explicit MalformedSpecError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotDwbcGraphError : std::invalid_argument {
    explicit NotDwbcGraphError(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidAsmError : std::invalid_argument {
    explicit InvalidAsmError(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexRangeError : std::out_of_range {
    explicit IndexRangeError(const std::string& what) : std::out_of_range(what) {}
};

} // namespace ice

#endif
