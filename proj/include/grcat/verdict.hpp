#pragma once

#include "grcat/group.hpp"

#include <string>
#include <utility>
#include <vector>

namespace grcat {

// Outcome of an exhaustive check: either it holds, or the lexicographically
// first counterexample together with a short description.
struct Verdict {
    bool holds = true;
    std::vector<GroupElement> witness;
    std::string detail;

    static Verdict ok() { return {}; }
    static Verdict fail(std::vector<GroupElement> witness, std::string detail) {
        return {false, std::move(witness), std::move(detail)};
    }

    explicit operator bool() const { return holds; }
};

}  // namespace grcat
