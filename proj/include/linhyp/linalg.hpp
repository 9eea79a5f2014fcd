#pragma once

#include <optional>
#include <vector>

#include "linhyp/field.hpp"

namespace linhyp {

using Matrix = std::vector<std::vector<FElem>>;

// One solution of A x = b, if consistent.
std::optional<std::vector<FElem>> solve_linear(const Field& K, Matrix A, std::vector<FElem> b);

// Basis of the nullspace of A.
std::vector<std::vector<FElem>> nullspace(const Field& K, Matrix A);

}  // namespace linhyp
