#include "langequity/errors.hpp"

namespace langequity {

std::string_view errc_name(Errc code) {
    switch (code) {
    case Errc::UnknownLanguage: return "UnknownLanguage";
    case Errc::AmbiguousName: return "AmbiguousName";
    case Errc::EmptyMemberSet: return "EmptyMemberSet";
    case Errc::UnknownCountry: return "UnknownCountry";
    case Errc::ZeroCountryPopulation: return "ZeroCountryPopulation";
    case Errc::ParseError: return "ParseError";
    case Errc::OutOfRangeScore: return "OutOfRangeScore";
    case Errc::ShareSumExceedsOne: return "ShareSumExceedsOne";
    case Errc::MissingContext: return "MissingContext";
    case Errc::DegenerateRange: return "DegenerateRange";
    case Errc::EmptyUniverse: return "EmptyUniverse";
    case Errc::AllZeroPopulations: return "AllZeroPopulations";
    case Errc::NoRowsForFlow: return "NoRowsForFlow";
    case Errc::UnmappedCountry: return "UnmappedCountry";
    case Errc::UniverseMismatch: return "UniverseMismatch";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::SelfPair: return "SelfPair";
    case Errc::EmptyGroup: return "EmptyGroup";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::GraphTooLarge: return "GraphTooLarge";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::UnknownTask: return "UnknownTask";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IoError: return "IoError";
    case Errc::Usage: return "Usage";
    }
    return "Internal";
}

} // namespace langequity
