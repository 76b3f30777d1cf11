#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dcdkit {

enum class ErrorKind {
    InvalidArgument,
    NonUniformDegree,
    NonUniformBlockSize,
    NotLinear,
    NotBalanced,
    CrossIncidenceInvalid,
    NotAdmissible,
    IndexOutOfRange,
    Timeout,
    CertificateFailed,
    UnexpectedRank,
    IncidenceMismatch,
    CenterHitsConfiguration,
    SpuriousIncidence,
    CollinearInput,
    DegenerateArrangement,
    NotConcyclic,
    CollinearNeighborhood,
    MultiEdgeInCover,
    NotSemiregular,
    NonBipartiteBase,
    BudgetExhausted,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (CLI, Python)
// can branch on it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace dcdkit
