#ifndef QRG_ERROR_HPP_
#define QRG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrg {

enum class ErrorKind {
  InvalidArgument,
  InvalidPermutation,
  OddPermutation,
  ParseError,
  SingularMatrix,
  FieldMismatch,
  UnsupportedFamily,
  CapExceeded,
  ClassCapExceeded,
  WidthCapExceeded,
  MixedCarriers,
  NotNormal,
  GroupMismatch,
  NoSuitablePrime,
  TrivialGroup,
  Infeasible,
  NotUnitary,
  IdentityInput,
  NotHomomorphism,
  UnknownSuite,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::OddPermutation: return "OddPermutation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ClassCapExceeded: return "ClassCapExceeded";
    case ErrorKind::WidthCapExceeded: return "WidthCapExceeded";
    case ErrorKind::MixedCarriers: return "MixedCarriers";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NoSuitablePrime: return "NoSuitablePrime";
    case ErrorKind::TrivialGroup: return "TrivialGroup";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::IdentityInput: return "IdentityInput";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

//! Every failure raised by the library. The kind is the stable part of the
//! contract, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

//! Parse failure with the byte offset into the input and the tokens that
//! would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& what)
      : Error(ErrorKind::ParseError,
              what + " at offset " + std::to_string(offset) + " (expected " +
                  expected + ")"),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace qrg

#endif  // QRG_ERROR_HPP_
