#pragma once

#include <cstddef>
#include <vector>

#include "omk/matgroup/group.hpp"
#include "omk/sectors/sectors.hpp"

namespace omk {

/// Indices (ascending) of the non-identity elements that fix a hyperplane.
/// Being a reflection is a class function, so one test per class suffices.
inline std::vector<std::size_t> find_reflections(const FiniteMatrixGroup& group) {
    std::vector<bool> reflective(group.class_count(), false);
    for (std::size_t c = 0; c < group.class_count(); ++c) {
        const std::size_t rep = group.class_reps()[c];
        if (rep == group.identity_index()) continue;
        reflective[c] = fixed_dim(group.element(rep)) + 1 == group.degree();
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < group.size(); ++i)
        if (reflective[group.class_of(i)]) out.push_back(i);
    return out;
}

}  // namespace omk
