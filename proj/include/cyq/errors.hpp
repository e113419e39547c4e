#pragma once

#include <stdexcept>
#include <string>

namespace cyq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define CYQ_DEFINE_ERROR(Name)                                                                    \
    struct Name : Error {                                                                         \
        explicit Name(const std::string &what) : Error(#Name ": " + what) {}                      \
    }

// exact-core
CYQ_DEFINE_ERROR(NonUnitConstantTerm);
CYQ_DEFINE_ERROR(NonzeroConstantTerm);
CYQ_DEFINE_ERROR(BadLowOrderTerms);
CYQ_DEFINE_ERROR(LogDegreeOverflow);

// symbolic-ring
CYQ_DEFINE_ERROR(DivisionByZeroPolynomial);
CYQ_DEFINE_ERROR(SingularMatrix);
CYQ_DEFINE_ERROR(DimensionMismatch);

// ode-qexpand
CYQ_DEFINE_ERROR(NoConsistentBranch);
CYQ_DEFINE_ERROR(SingularOrderSystem);
CYQ_DEFINE_ERROR(DegenerateBranch);
CYQ_DEFINE_ERROR(UnsupportedSystem);

// enumerative
CYQ_DEFINE_ERROR(BadPoleStructure);

// gm-verify
CYQ_DEFINE_ERROR(IdentityFails);

#undef CYQ_DEFINE_ERROR

} // namespace cyq
