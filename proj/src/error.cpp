#include "alcs/error.hpp"

namespace alcs {

const char* errc_name(errc c) {
    switch (c) {
        case errc::EmptyString:         return "EmptyString";
        case errc::TooFewStrings:       return "TooFewStrings";
        case errc::LetterOutOfAlphabet: return "LetterOutOfAlphabet";
        case errc::LengthMismatch:      return "LengthMismatch";
        case errc::EmptyLetterSet:      return "EmptyLetterSet";
        case errc::NegativeBudget:      return "NegativeBudget";
        case errc::IndexOutOfRange:     return "IndexOutOfRange";
        case errc::WrongMetric:         return "WrongMetric";
        case errc::ThresholdOutOfRange: return "ThresholdOutOfRange";
        case errc::SubsetExplosion:     return "SubsetExplosion";
        case errc::UnsupportedMetric:   return "UnsupportedMetric";
        case errc::BudgetExceeded:      return "BudgetExceeded";
        case errc::DimensionMismatch:   return "DimensionMismatch";
        case errc::ParseError:          return "ParseError";
        case errc::EmptySequence:       return "EmptySequence";
        case errc::UnknownIUPACCode:    return "UnknownIUPACCode";
    }
    return "UnknownError";
}

} // namespace alcs
