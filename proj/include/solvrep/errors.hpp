#pragma once

#include <stdexcept>
#include <string>

namespace solvrep {

/// Base class for all domain errors.  The `code` string is the stable
/// machine-readable name used by the CLI and by tests.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define SOLVREP_DEFINE_ERROR(NAME)                                 \
    class NAME : public Error {                                    \
    public:                                                        \
        explicit NAME(const std::string& what) : Error(#NAME, what) {} \
    }

// presentation
SOLVREP_DEFINE_ERROR(SyntaxError);
SOLVREP_DEFINE_ERROR(InconsistentPresentation);
SOLVREP_DEFINE_ERROR(SizeExceeded);
SOLVREP_DEFINE_ERROR(NotAbelian);

// cyclotomic
SOLVREP_DEFINE_ERROR(DivisionByZero);
SOLVREP_DEFINE_ERROR(NoRootFound);
SOLVREP_DEFINE_ERROR(ReconstructionFailed);

// grpalg
SOLVREP_DEFINE_ERROR(GroupMismatch);
SOLVREP_DEFINE_ERROR(NotASubgroup);

// cyclic_abelian
SOLVREP_DEFINE_ERROR(FactorMismatch);
SOLVREP_DEFINE_ERROR(NotPPowerCyclic);
SOLVREP_DEFINE_ERROR(NotCyclic);

// solvable
SOLVREP_DEFINE_ERROR(OrbitNotSingleton);
SOLVREP_DEFINE_ERROR(OrbitIsSingleton);
SOLVREP_DEFINE_ERROR(IntertwinerNotFound);
SOLVREP_DEFINE_ERROR(RootFailure);
SOLVREP_DEFINE_ERROR(NoWitness);
SOLVREP_DEFINE_ERROR(ScalarExtractionFailed);
SOLVREP_DEFINE_ERROR(ConjugatesNotDistinct);

// verify
SOLVREP_DEFINE_ERROR(IncompleteRepList);

#undef SOLVREP_DEFINE_ERROR

} // namespace solvrep
