#pragma once

#include "hjj/linalg.hpp"

#include <string>
#include <vector>

namespace hjj {

/// One failing instance of an identity: the basis indices it was evaluated
/// at and the nonzero residual there.
struct Violation {
    std::vector<std::size_t> indices;
    Vector residual;
    std::string note;
};

struct CheckReport {
    std::string name;
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
    void add(std::vector<std::size_t> indices, Vector residual, std::string note = {}) {
        violations.push_back({std::move(indices), std::move(residual), std::move(note)});
    }
    /// "name: pass" or "name: FAIL (k violations), first at (i,j): residual [..]".
    std::string summary() const;
};

std::string format_vector(const Vector& v);
std::string format_indices(const std::vector<std::size_t>& idx);

}  // namespace hjj
