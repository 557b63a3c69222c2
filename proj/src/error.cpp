#include "bda/error.hpp"

namespace bda {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::ParseError: return "ParseError";
        case Errc::MissingHeaderKey: return "MissingHeaderKey";
        case Errc::InvalidHeaderValue: return "InvalidHeaderValue";
        case Errc::NonIntegerCell: return "NonIntegerCell";
        case Errc::CellCountMismatch: return "CellCountMismatch";
        case Errc::InvalidClassCode: return "InvalidClassCode";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::InvalidGeometry: return "InvalidGeometry";
        case Errc::DuplicateFootprintId: return "DuplicateFootprintId";
        case Errc::DuplicatePointId: return "DuplicatePointId";
        case Errc::UnknownCategory: return "UnknownCategory";
        case Errc::UnknownPoint: return "UnknownPoint";
        case Errc::MissingEstimate: return "MissingEstimate";
        case Errc::EmptySampleSet: return "EmptySampleSet";
        case Errc::NoPositiveSamples: return "NoPositiveSamples";
        case Errc::InvalidScheme: return "InvalidScheme";
        case Errc::InvalidSpec: return "InvalidSpec";
        case Errc::SwathOutsideScene: return "SwathOutsideScene";
        case Errc::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace bda
