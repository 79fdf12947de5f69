#ifndef GLS_RANK_HPP
#define GLS_RANK_HPP

#include "gls/numeric.hpp"

#include <vector>

namespace gls {

/// Incremental exact rank of integer rows over Q. Fraction-free row
/// echelon with content reduction; basis rows are kept mutually
/// reduced so a single elimination pass per insertion is sound.
class RankAccumulator {
public:
    explicit RankAccumulator(std::size_t width) : width_(width) {}

    /// Returns true when the row increased the rank.
    bool add(std::vector<Int> row);

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }

private:
    static std::size_t pivot_of(const std::vector<Int>& row);
    static void normalize(std::vector<Int>& row);

    std::size_t width_;
    std::vector<std::vector<Int>> rows_;
};

} // namespace gls

#endif
