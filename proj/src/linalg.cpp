#include "chelly/linalg.hpp"

#include <utility>

#include "chelly/errors.hpp"

namespace chelly {

std::vector<std::size_t> row_reduce(Matrix& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && sgn(m[sel][col]) == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[row], m[sel]);
        const Rational inv = 1 / m[row][col];
        for (auto& x : m[row])
            x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0)
                continue;
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m)
{
    return row_reduce(m).size();
}

std::vector<Vector> nullspace(Matrix m, std::size_t cols)
{
    for (const auto& row : m)
        if (row.size() != cols)
            throw DimensionError("nullspace: ragged matrix");
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vector v = zero_vector(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve_any(const Matrix& m, const Vector& rhs, std::size_t cols)
{
    if (m.size() != rhs.size())
        throw DimensionError("solve: row count does not match right-hand side");
    Matrix aug;
    aug.reserve(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (m[r].size() != cols)
            throw DimensionError("solve: ragged matrix");
        Vector row = m[r];
        row.push_back(rhs[r]);
        aug.push_back(std::move(row));
    }
    auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == cols)
        return std::nullopt;
    Vector x = zero_vector(cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug[r][cols];
    return x;
}

std::optional<Vector> solve_unique(const Matrix& m, const Vector& rhs, std::size_t cols)
{
    if (rank(m) != cols)
        return std::nullopt;
    return solve_any(m, rhs, cols);
}

bool linearly_independent(const std::vector<Vector>& vectors)
{
    if (vectors.empty())
        return true;
    return rank(vectors) == vectors.size();
}

} // namespace chelly
