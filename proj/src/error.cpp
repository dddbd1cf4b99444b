#include "spdc/error.hpp"

namespace spdc {

const char* to_string(Err code) {
  switch (code) {
    case Err::OutOfRange: return "OutOfRange";
    case Err::UnknownAxis: return "UnknownAxis";
    case Err::MissingData: return "MissingData";
    case Err::NonPositiveInput: return "NonPositiveInput";
    case Err::EnergyMismatch: return "EnergyMismatch";
    case Err::ZeroMismatch: return "ZeroMismatch";
    case Err::ZeroOrder: return "ZeroOrder";
    case Err::EvenOrder: return "EvenOrder";
    case Err::WrongRegime: return "WrongRegime";
    case Err::QuadratureNonConvergent: return "QuadratureNonConvergent";
    case Err::FilterTooWide: return "FilterTooWide";
    case Err::OverLossyStep: return "OverLossyStep";
    case Err::DivergentSeries: return "DivergentSeries";
    case Err::UnequalParameters: return "UnequalParameters";
    case Err::SingularDenominator: return "SingularDenominator";
    case Err::ZeroCoupling: return "ZeroCoupling";
    case Err::GridTooCoarse: return "GridTooCoarse";
    case Err::AsymmetricMatrix: return "AsymmetricMatrix";
    case Err::ToleranceNotMet: return "ToleranceNotMet";
    case Err::CutoffTooSmall: return "CutoffTooSmall";
    case Err::NoCoincidences: return "NoCoincidences";
    case Err::ConfigError: return "ConfigError";
  }
  return "UnknownError";
}

} // namespace spdc
