#include "pgolay/error.hpp"

namespace pgolay {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::invalid_argument: return "InvalidArgument";
        case errc::odd_length: return "OddLength";
        case errc::negative_lambda: return "NegativeLambda";
        case errc::parameter_infeasible: return "ParameterInfeasible";
        case errc::decomposition_fails: return "DecompositionFails";
        case errc::not_a_unit: return "NotAUnit";
        case errc::not_a_representative: return "NotARepresentative";
        case errc::duplicate_index: return "DuplicateIndex";
        case errc::not_orbit_union: return "NotOrbitUnion";
        case errc::not_complementary: return "NotComplementary";
        case errc::odd_exponent: return "OddExponent";
        case errc::unreachable_cardinality: return "UnreachableCardinality";
        case errc::count_exceeds_lambda: return "CountExceedsLambda";
        case errc::incompatible_moduli: return "IncompatibleModuli";
        case errc::parse_error: return "ParseError";
        case errc::param_mismatch: return "ParamMismatch";
        case errc::io_error: return "IoError";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace pgolay
