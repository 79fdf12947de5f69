#include "gls/lacunary.hpp"

#include <stdexcept>

namespace gls {

namespace {

Int minimal_next_threshold(const Int& prev, std::size_t j) {
    // smallest even integer exceeding 2^j * i_j
    Int bound = prev << j;
    Int next = bound + 1;
    if (next % 2 != 0) ++next;
    return next;
}

} // namespace

LacunarySeq::LacunarySeq() : thresholds_{Int(2)} {}

LacunarySeq::LacunarySeq(std::vector<Int> thresholds) : thresholds_(std::move(thresholds)) {
    if (thresholds_.empty() || thresholds_[0] != 2)
        throw std::invalid_argument("LacunarySeq: thresholds must start with i_1 = 2");
    for (std::size_t j = 0; j < thresholds_.size(); ++j) {
        if (thresholds_[j] % 2 != 0)
            throw std::invalid_argument("LacunarySeq: thresholds must be even");
        if (j + 1 < thresholds_.size()) {
            Int bound = thresholds_[j] << (j + 1); // 2^j * i_j, j 1-based = index+1
            if (thresholds_[j + 1] <= bound)
                throw std::invalid_argument(
                    "LacunarySeq: threshold growth rule i_{j+1} > 2^j*i_j violated");
        }
    }
}

void LacunarySeq::extend_until_locked(const Int& n) const {
    while (thresholds_.back() <= n) {
        std::size_t j = thresholds_.size(); // about to create i_{j+1}, j is 1-based index of last
        thresholds_.push_back(minimal_next_threshold(thresholds_.back(), j));
    }
}

Int LacunarySeq::sigma(const Int& n) const {
    if (n < 1) throw std::invalid_argument("sigma: n must be >= 1");
    if (n == 1) return 1;
    std::lock_guard<std::mutex> lock(mutex_);
    extend_until_locked(n);
    // unique j with i_j <= n < i_{j+1}
    std::size_t j = thresholds_.size() - 1;
    while (thresholds_[j] > n) --j;
    return thresholds_[j] / 2;
}

Rat LacunarySeq::sigma_ratio(const Int& n) const { return Rat(sigma(n), n); }

Int LacunarySeq::threshold(std::size_t j) const {
    if (j == 0) throw std::invalid_argument("threshold index is 1-based");
    std::lock_guard<std::mutex> lock(mutex_);
    while (thresholds_.size() < j) {
        std::size_t last = thresholds_.size();
        thresholds_.push_back(minimal_next_threshold(thresholds_.back(), last));
    }
    return thresholds_[j - 1];
}

std::vector<Int> LacunarySeq::thresholds_snapshot() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return thresholds_;
}

namespace {

void check_witness_args(const Int& r, const Rat& eps) {
    if (r < 1) throw std::invalid_argument("witness search: r must be >= 1");
    if (eps <= 0) throw std::invalid_argument("witness search: eps must be positive");
}

// nonnegative representative of x mod r
Int mod(const Int& x, const Int& r) {
    Int m = x % r;
    if (m < 0) m += r;
    return m;
}

} // namespace

SigmaWitness witness_near_half(const LacunarySeq& seq, const Int& a, const Int& r,
                               const Int& m, const Rat& eps) {
    check_witness_args(r, eps);
    const Rat half(1, 2);
    for (std::size_t j = 1;; ++j) {
        Int ij = seq.threshold(j);
        // unique candidate n = i_j + k, 0 <= k < r, with n == a (mod r)
        Int k = mod(a - ij, r);
        Int n = ij + k;
        if (n <= m) continue;
        Rat ratio = seq.sigma_ratio(n);
        if (abs(ratio - half) < eps) return {n, seq.sigma(n), ratio};
    }
}

SigmaWitness witness_near_zero(const LacunarySeq& seq, const Int& a, const Int& r,
                               const Int& m, const Rat& eps) {
    check_witness_args(r, eps);
    for (std::size_t j = 1;; ++j) {
        Int next = seq.threshold(j + 1);
        // unique candidate n = i_{j+1} - k, 0 < k <= r, with n == a (mod r)
        Int k = mod(next - a, r);
        if (k == 0) k = r;
        Int n = next - k;
        if (n <= m || n < 1) continue;
        Rat ratio = seq.sigma_ratio(n);
        if (abs(ratio) < eps) return {n, seq.sigma(n), ratio};
    }
}

std::optional<SigmaWitness> blind_scan_witness(const LacunarySeq& seq, const Int& a,
                                               const Int& r, const Int& m, const Rat& eps,
                                               const Rat& target, const Int& cap) {
    check_witness_args(r, eps);
    Int n = m + 1;
    Int k = mod(a - n, r);
    n += k;
    for (; n <= cap; n += r) {
        if (n < 1) continue;
        Rat ratio = seq.sigma_ratio(n);
        if (abs(ratio - target) < eps) return SigmaWitness{n, seq.sigma(n), ratio};
    }
    return std::nullopt;
}

} // namespace gls
