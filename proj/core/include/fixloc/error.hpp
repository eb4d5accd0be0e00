#pragma once

#include <stdexcept>
#include <string>

namespace fixloc {

// Base of every error raised by the library. `kind()` is a stable
// identifier (used by the CLI and in report diagnostics).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define FIXLOC_DEFINE_ERROR(Name)                                      \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& message)                      \
            : Error(#Name, message) {}                                 \
    }

// dataset parsing and validation
FIXLOC_DEFINE_ERROR(SchemaError);
FIXLOC_DEFINE_ERROR(InvariantError);
FIXLOC_DEFINE_ERROR(NotDelzant);
FIXLOC_DEFINE_ERROR(NonIntegerVertex);
FIXLOC_DEFINE_ERROR(NotGeneric);

// algebra
FIXLOC_DEFINE_ERROR(RankMismatch);

// partitions and counting
FIXLOC_DEFINE_ERROR(NotPolarizing);
FIXLOC_DEFINE_ERROR(InfeasibleAssignment);
FIXLOC_DEFINE_ERROR(ModeMismatch);

// characters
FIXLOC_DEFINE_ERROR(NotPolynomial);
FIXLOC_DEFINE_ERROR(ReconstructionMismatch);

// verifiers
FIXLOC_DEFINE_ERROR(EmptyClass);
FIXLOC_DEFINE_ERROR(ShapeMismatch);

#undef FIXLOC_DEFINE_ERROR

} // namespace fixloc
