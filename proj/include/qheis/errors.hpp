#pragma once

#include <stdexcept>
#include <string>

namespace qheis {

/// Broad grouping of failures, used by the command-line front end to pick
/// an exit status.
enum class ErrorCategory { usage, parse, engine, verification };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

#define QHEIS_DEFINE_ERROR(Name, Category)                                   \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what)                                \
            : Error(ErrorCategory::Category, #Name ": " + what) {}           \
    };

// coefficient field
QHEIS_DEFINE_ERROR(DivisionByZero, engine)
QHEIS_DEFINE_ERROR(PoleAtPoint, engine)
QHEIS_DEFINE_ERROR(UnboundVariable, engine)

// free algebra
QHEIS_DEFINE_ERROR(AlphabetError, engine)
QHEIS_DEFINE_ERROR(UnboundGenerator, engine)

// rewriting
QHEIS_DEFINE_ERROR(OrientationError, engine)
QHEIS_DEFINE_ERROR(NonTermination, engine)

// catalog
QHEIS_DEFINE_ERROR(UnknownFamily, usage)
QHEIS_DEFINE_ERROR(ParamError, usage)
QHEIS_DEFINE_ERROR(NotOreShaped, engine)

// oracles and suite
QHEIS_DEFINE_ERROR(OracleOverflow, engine)
QHEIS_DEFINE_ERROR(OracleDivergence, engine)
QHEIS_DEFINE_ERROR(SelectionError, usage)

// text interfaces
QHEIS_DEFINE_ERROR(SchemaError, parse)

#undef QHEIS_DEFINE_ERROR

/// Syntax or symbol error in an expression, carrying the byte offset of the
/// offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorCategory::parse,
                "ParseError at " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace qheis
