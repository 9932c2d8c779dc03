#pragma once

#include <stdexcept>
#include <string>

namespace qpoly {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QPOLY_DEFINE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

QPOLY_DEFINE_ERROR(InvalidElementError);
QPOLY_DEFINE_ERROR(ConstructionError);
QPOLY_DEFINE_ERROR(DomainError);
QPOLY_DEFINE_ERROR(LookupError);
QPOLY_DEFINE_ERROR(MeshError);
QPOLY_DEFINE_ERROR(SymmetryError);
QPOLY_DEFINE_ERROR(ClassificationError);
QPOLY_DEFINE_ERROR(SingularConfigurationError);
QPOLY_DEFINE_ERROR(DualConstructionError);
QPOLY_DEFINE_ERROR(DualityViolationError);
QPOLY_DEFINE_ERROR(IoError);

#undef QPOLY_DEFINE_ERROR

}  // namespace qpoly
