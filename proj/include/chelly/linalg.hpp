#pragma once

#include <optional>
#include <vector>

#include "chelly/rational.hpp"

namespace chelly {

/// Row-major dense matrix; every row has the same length.
using Matrix = std::vector<Vector>;

/// Reduced row echelon form; returns the pivot column of each non-zero row.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of { x : m x = 0 } for a matrix with `cols` columns.
std::vector<Vector> nullspace(Matrix m, std::size_t cols);

/// Some solution of m x = rhs, or nullopt if the system is inconsistent.
std::optional<Vector> solve_any(const Matrix& m, const Vector& rhs, std::size_t cols);

/// Unique solution of m x = rhs, or nullopt if singular or inconsistent.
std::optional<Vector> solve_unique(const Matrix& m, const Vector& rhs, std::size_t cols);

bool linearly_independent(const std::vector<Vector>& vectors);

} // namespace chelly
