#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bda {

enum class Errc {
    ParseError,
    MissingHeaderKey,
    InvalidHeaderValue,
    NonIntegerCell,
    CellCountMismatch,
    InvalidClassCode,
    IndexOutOfRange,
    InvalidGeometry,
    DuplicateFootprintId,
    DuplicatePointId,
    UnknownCategory,
    UnknownPoint,
    MissingEstimate,
    EmptySampleSet,
    NoPositiveSamples,
    InvalidScheme,
    InvalidSpec,
    SwathOutsideScene,
    Io,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace bda
