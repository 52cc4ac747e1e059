#include "qradius/error.hpp"

namespace qradius {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::NegativeEigenvalue: return "NegativeEigenvalue";
        case ErrorKind::BadDimension: return "BadDimension";
        case ErrorKind::Dim2Required: return "Dim2Required";
        case ErrorKind::Dim1NotSupported: return "Dim1NotSupported";
        case ErrorKind::QOutOfRange: return "QOutOfRange";
        case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
        case ErrorKind::ZeroQUnsupported: return "ZeroQUnsupported";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ShapeError: return "ShapeError";
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace qradius
