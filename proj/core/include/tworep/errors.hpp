#pragma once

#include <stdexcept>
#include <string>

namespace tworep {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TWOREP_ERROR(Name)                                   \
  class Name : public Error {                                \
   public:                                                   \
    explicit Name(const std::string& what) : Error(what) {}  \
  }

TWOREP_ERROR(DivisionByZero);
TWOREP_ERROR(DimensionMismatch);
TWOREP_ERROR(SingularMatrix);
TWOREP_ERROR(InvalidTable);
TWOREP_ERROR(InvalidModule);
TWOREP_ERROR(IncompatibleCochains);
TWOREP_ERROR(ObjectMismatch);
TWOREP_ERROR(NotComposable);
TWOREP_ERROR(InvalidCrossedModule);
TWOREP_ERROR(InvalidTriple);
TWOREP_ERROR(InvalidGauge);
TWOREP_ERROR(InvalidQuadruple);
TWOREP_ERROR(RepMismatch);
TWOREP_ERROR(NotEquivariant);
TWOREP_ERROR(InvalidStabilizerRep);
TWOREP_ERROR(IndexOutOfRange);

#undef TWOREP_ERROR

}  // namespace tworep
