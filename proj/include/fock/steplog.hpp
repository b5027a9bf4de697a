#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fock/rsk.hpp"
#include "fock/types.hpp"

namespace fock {

// Invertible pipeline steps.  Replaying a log forward from the input of
// `canonical` reproduces its output; replaying backward from the output
// reproduces the input.
struct RsStep {
    Int p;
    RecordingSymbol q;

    friend bool operator==(const RsStep&, const RsStep&) = default;
};

struct XiStep {
    Int k; // nonzero cyclage exponent

    friend bool operator==(const XiStep&, const XiStep&) = default;
};

struct PsiStep {
    Int alpha; // width of the deleted pseudoperiod

    friend bool operator==(const PsiStep&, const PsiStep&) = default;
};

using Step = std::variant<RsStep, XiStep, PsiStep>;

struct StepLog {
    std::vector<Step> steps;

    friend bool operator==(const StepLog&, const StepLog&) = default;
};

// One step per line, bit-exact:
//   RS p=<int> Q=<nested-int-lists-top-row-first>
//   XI k=<int>
//   PSI alpha=<int>
std::string to_string(const StepLog& log);
StepLog parse_steplog(const std::string& text);

} // namespace fock
