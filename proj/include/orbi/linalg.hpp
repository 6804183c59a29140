#ifndef ORBI_LINALG_HPP
#define ORBI_LINALG_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace orbi {

/// Dense integer matrix, row-major.
template <typename T>
using IntMatrix = std::vector<std::vector<T>>;

namespace detail {

inline bool mul_sub_div(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                        std::int64_t div, std::int64_t& out)
{
    std::int64_t ab, cd, diff;
    if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) ||
        __builtin_sub_overflow(ab, cd, &diff))
        return false;
    out = diff / div;
    return true;
}

inline Integer mul_sub_div(const Integer& a, const Integer& b, const Integer& c, const Integer& d,
                           const Integer& div)
{
    return (a * b - c * d) / div;
}

/// Returns std::nullopt on int64 overflow.
inline std::optional<std::size_t> bareiss_rank_fast(IntMatrix<std::int64_t> m)
{
    const std::size_t rows = m.size();
    if (rows == 0)
        return 0;
    const std::size_t cols = m[0].size();
    std::int64_t prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c)
    {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i)
        {
            for (std::size_t j = c + 1; j < cols; ++j)
                if (!mul_sub_div(m[r][c], m[i][j], m[i][c], m[r][j], prev, m[i][j]))
                    return std::nullopt;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

} // namespace detail

/**
 * Rank over Q by fraction-free (Bareiss) elimination. Every intermediate
 * entry is a minor of the input, so all divisions are exact.
 */
template <typename T>
std::size_t bareiss_rank(IntMatrix<T> m)
{
    const std::size_t rows = m.size();
    if (rows == 0)
        return 0;
    const std::size_t cols = m[0].size();
    T prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c)
    {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i)
        {
            if (m[i][c] == 0 && m[r][c] == prev)
                continue;  // row is unchanged: (prev * x - 0) / prev
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = detail::mul_sub_div(m[r][c], m[i][j], m[i][c], m[r][j], prev);
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

/// int64 fast path with an arbitrary-precision restart on overflow.
inline std::size_t exact_rank(const IntMatrix<std::int64_t>& m)
{
    if (auto r = detail::bareiss_rank_fast(m))
        return *r;
    IntMatrix<Integer> big(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        big[i].assign(m[i].begin(), m[i].end());
    return bareiss_rank(std::move(big));
}

} // namespace orbi

#endif // ORBI_LINALG_HPP
