#include "rugbypi/error.hpp"

namespace rugbypi {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::MissingHeader: return "MissingHeader";
    case ErrorCode::UnknownColumn: return "UnknownColumn";
    case ErrorCode::PairingViolation: return "PairingViolation";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::OpponentMismatch: return "OpponentMismatch";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::SampleTooSmall: return "SampleTooSmall";
    case ErrorCode::DegenerateSample: return "DegenerateSample";
    case ErrorCode::AllZeroDifferences: return "AllZeroDifferences";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ExactWithTies: return "ExactWithTies";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotBinary: return "NotBinary";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::EmptyStage: return "EmptyStage";
    case ErrorCode::IoError: return "IoError";
    }
    return "Error";
}

} // namespace rugbypi
