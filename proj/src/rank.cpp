#include "gls/rank.hpp"

#include <algorithm>
#include <stdexcept>

namespace gls {

std::size_t RankAccumulator::pivot_of(const std::vector<Int>& row) {
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) return i;
    return row.size();
}

void RankAccumulator::normalize(std::vector<Int>& row) {
    Int content = 0;
    for (const auto& x : row) content = gcd(content, boost::multiprecision::abs(x));
    if (content > 1)
        for (auto& x : row) x /= content;
}

bool RankAccumulator::add(std::vector<Int> row) {
    if (row.size() != width_) throw std::invalid_argument("RankAccumulator: row width mismatch");
    for (const auto& basis_row : rows_) {
        std::size_t p = pivot_of(basis_row);
        if (row[p] == 0) continue;
        Int a = basis_row[p];
        Int b = row[p];
        for (std::size_t i = 0; i < width_; ++i) row[i] = row[i] * a - basis_row[i] * b;
        normalize(row);
    }
    if (std::all_of(row.begin(), row.end(), [](const Int& x) { return x == 0; })) return false;
    normalize(row);
    std::size_t p_new = pivot_of(row);
    for (auto& basis_row : rows_) {
        if (basis_row[p_new] == 0) continue;
        Int a = row[p_new];
        Int b = basis_row[p_new];
        for (std::size_t i = 0; i < width_; ++i) basis_row[i] = basis_row[i] * a - row[i] * b;
        normalize(basis_row);
    }
    rows_.push_back(std::move(row));
    return true;
}

} // namespace gls
