#ifndef SPDC_ERROR_HPP
#define SPDC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace spdc {

enum class Err {
  OutOfRange,
  UnknownAxis,
  MissingData,
  NonPositiveInput,
  EnergyMismatch,
  ZeroMismatch,
  ZeroOrder,
  EvenOrder,
  WrongRegime,
  QuadratureNonConvergent,
  FilterTooWide,
  OverLossyStep,
  DivergentSeries,
  UnequalParameters,
  SingularDenominator,
  ZeroCoupling,
  GridTooCoarse,
  AsymmetricMatrix,
  ToleranceNotMet,
  CutoffTooSmall,
  NoCoincidences,
  ConfigError,
};

const char* to_string(Err code);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Err code, const std::string& what) {
  if (!ok) fail(code, what);
}

} // namespace spdc

#endif
