#pragma once

#include <stdexcept>
#include <string>

namespace dcas {

enum class Errc {
    ZeroDenominator,
    InexactDivision,
    Parse,
    UnknownIdentifier,
    VariableMismatch,
    NotDependent,
    NotQuadratic,
    NonzeroConstantPullback,
    ConstantTerm,
    IrrationalConstant,
    InvalidParameter,
    NotExpandable,
    TooLarge,
    InvalidMap,
    DiscriminantDegreeTooHigh,
    DegenerateCurve,
    InsufficientTerms,
    WrongOrder,
    SeriesTooShort,
    UnknownCase,
    Registry,
    InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

class ParseError : public Error {
public:
    ParseError(Errc code, std::size_t offset, const std::string& what)
        : Error(code, what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace dcas
