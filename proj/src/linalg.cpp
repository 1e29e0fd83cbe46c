#include "qgroupoid/linalg.hpp"

#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace qg {

int integer_rank(IntMatrix m)
{
    using Rat = boost::multiprecision::cpp_rational;
    const size_t rows = m.size();
    if (rows == 0)
        return 0;
    const size_t cols = m[0].size();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            a[i][j] = Rat(m[i][j]);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0)
                continue;
            Rat f = a[i][c] / a[r][c];
            for (size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

IntMatrix to_int_matrix(const std::vector<std::vector<int>> &rows)
{
    IntMatrix m;
    m.reserve(rows.size());
    for (const auto &r : rows) {
        std::vector<BigInt> row;
        row.reserve(r.size());
        for (int x : r)
            row.emplace_back(x);
        m.push_back(std::move(row));
    }
    return m;
}

} // namespace qg
