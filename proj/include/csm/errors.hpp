#pragma once

#include <stdexcept>
#include <string>

namespace csm {

// Base class for every error raised by the library. Kind() lets the CLI map
// failures onto exit codes without a chain of dynamic_casts.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    kInvalidParameters,
    kNotAMatroid,
    kInvalidFlat,
    kInvalidDimension,
    kInvalidOperands,
    kInternalConsistency,
    kGenericVectorExhausted,
    kUnsupportedFamily,
    kParse,
  };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

#define CSM_DEFINE_ERROR(Name, KindValue)                                \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what) : Error(KindValue, what) {}  \
  };

CSM_DEFINE_ERROR(InvalidParameters, Kind::kInvalidParameters)
CSM_DEFINE_ERROR(NotAMatroid, Kind::kNotAMatroid)
CSM_DEFINE_ERROR(InvalidFlat, Kind::kInvalidFlat)
CSM_DEFINE_ERROR(InvalidDimension, Kind::kInvalidDimension)
CSM_DEFINE_ERROR(InvalidOperands, Kind::kInvalidOperands)
CSM_DEFINE_ERROR(InternalConsistency, Kind::kInternalConsistency)
CSM_DEFINE_ERROR(GenericVectorExhausted, Kind::kGenericVectorExhausted)
CSM_DEFINE_ERROR(UnsupportedFamily, Kind::kUnsupportedFamily)
CSM_DEFINE_ERROR(ParseError, Kind::kParse)

#undef CSM_DEFINE_ERROR

}  // namespace csm
