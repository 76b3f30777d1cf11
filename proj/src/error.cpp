#include "dcdkit/error.hpp"

namespace dcdkit {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NonUniformDegree: return "NonUniformDegree";
        case ErrorKind::NonUniformBlockSize: return "NonUniformBlockSize";
        case ErrorKind::NotLinear: return "NotLinear";
        case ErrorKind::NotBalanced: return "NotBalanced";
        case ErrorKind::CrossIncidenceInvalid: return "CrossIncidenceInvalid";
        case ErrorKind::NotAdmissible: return "NotAdmissible";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::Timeout: return "Timeout";
        case ErrorKind::CertificateFailed: return "CertificateFailed";
        case ErrorKind::UnexpectedRank: return "UnexpectedRank";
        case ErrorKind::IncidenceMismatch: return "IncidenceMismatch";
        case ErrorKind::CenterHitsConfiguration: return "CenterHitsConfiguration";
        case ErrorKind::SpuriousIncidence: return "SpuriousIncidence";
        case ErrorKind::CollinearInput: return "CollinearInput";
        case ErrorKind::DegenerateArrangement: return "DegenerateArrangement";
        case ErrorKind::NotConcyclic: return "NotConcyclic";
        case ErrorKind::CollinearNeighborhood: return "CollinearNeighborhood";
        case ErrorKind::MultiEdgeInCover: return "MultiEdgeInCover";
        case ErrorKind::NotSemiregular: return "NotSemiregular";
        case ErrorKind::NonBipartiteBase: return "NonBipartiteBase";
        case ErrorKind::BudgetExhausted: return "BudgetExhausted";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace dcdkit
