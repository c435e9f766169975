#ifndef GAIDS_ERROR_HPP
#define GAIDS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gaids {

enum class ErrorKind {
    MalformedRecord,
    NonNumericFeature,
    UnknownLabel,
    EmptyDataset,
    DimensionMismatch,
    EmptyModel,
    UnsetFitness,
    NoIntrusions,
    NoNormals,
    ModelVersionMismatch,
    ModelFormat,
    InvalidConfig,
    Io,
};

/// Broad family of an error, used by the CLI to pick an exit code.
enum class ErrorFamily { Parse, Model, Config, Runtime };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    ErrorFamily family() const noexcept;

private:
    ErrorKind kind_;
};

inline ErrorFamily Error::family() const noexcept {
    switch (kind_) {
    case ErrorKind::MalformedRecord:
    case ErrorKind::NonNumericFeature:
    case ErrorKind::UnknownLabel:
    case ErrorKind::EmptyDataset:
        return ErrorFamily::Parse;
    case ErrorKind::EmptyModel:
    case ErrorKind::ModelVersionMismatch:
    case ErrorKind::ModelFormat:
        return ErrorFamily::Model;
    case ErrorKind::InvalidConfig:
        return ErrorFamily::Config;
    default:
        return ErrorFamily::Runtime;
    }
}

}  // namespace gaids

#endif
