#include "gls/expvec.hpp"

#include <numeric>
#include <stdexcept>

namespace gls {

ExpVec::ExpVec(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

ExpVec::ExpVec(std::initializer_list<std::uint32_t> exps)
    : ExpVec(std::vector<std::uint32_t>(exps)) {}

bool ExpVec::divides(const ExpVec& other) const {
    if (size() != other.size())
        throw std::invalid_argument("ExpVec::divides: mismatched variable counts");
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

ExpVec ExpVec::operator*(const ExpVec& other) const {
    if (size() != other.size())
        throw std::invalid_argument("ExpVec::operator*: mismatched variable counts");
    std::vector<std::uint32_t> out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) out[i] = exps_[i] + other.exps_[i];
    return ExpVec(std::move(out));
}

bool ExpVec::lex_before(const ExpVec& a, const ExpVec& b) {
    return a.exps_ > b.exps_; // descending tuple order
}

std::string ExpVec::str(const std::vector<std::string>& names) const {
    if (names.size() != exps_.size())
        throw std::invalid_argument("ExpVec::str: name list does not match variable count");
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

} // namespace gls
