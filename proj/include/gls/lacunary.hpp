#ifndef GLS_LACUNARY_HPP
#define GLS_LACUNARY_HPP

#include "gls/numeric.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace gls {

/// Step function sigma(n) built from a sparse threshold sequence
/// i_1 = 2 < i_2 < ... of even integers with i_{j+1} > 2^j * i_j:
///
///   sigma(1) = 1,  sigma(n) = i_j / 2  for  i_j <= n < i_{j+1}.
///
/// The ratio sigma(n)/n then has accumulation points 1/2 (at the
/// thresholds) and 0 (just below them) along every arithmetic
/// progression, which is what defeats the growth limits downstream.
///
/// The default extension rule chooses the minimal admissible even
/// value i_{j+1} = 2^j * i_j + 2 (so 2, 6, 26, 210, 3362, ...); an
/// explicit prefix may be supplied instead and is validated against
/// the growth rule. Extension of the cached prefix is synchronized;
/// every query is otherwise pure.
class LacunarySeq {
public:
    LacunarySeq();
    explicit LacunarySeq(std::vector<Int> thresholds);

    /// sigma(n); extends the threshold prefix on demand. n >= 1.
    Int sigma(const Int& n) const;

    /// Exact ratio sigma(n)/n.
    Rat sigma_ratio(const Int& n) const;

    /// i_j (1-based); extends on demand.
    Int threshold(std::size_t j) const;

    /// Currently cached prefix (after any extension so far).
    std::vector<Int> thresholds_snapshot() const;

private:
    void extend_until_locked(const Int& n) const;

    mutable std::mutex mutex_;
    mutable std::vector<Int> thresholds_;
};

using LacunarySeqPtr = std::shared_ptr<LacunarySeq>;

/// A progression witness: the index n together with the exact ratio
/// sigma(n)/n it achieves.
struct SigmaWitness {
    Int n;
    Int sigma;
    Rat ratio;
};

/// Finds n == a (mod r), n > m, with |sigma(n)/n - 1/2| < eps.
/// Follows the constructive argument: candidates sit at n = i_j + k
/// with 0 <= k < r, taking the earliest threshold whose candidate
/// passes direct revalidation. Always terminates.
SigmaWitness witness_near_half(const LacunarySeq& seq, const Int& a, const Int& r,
                               const Int& m, const Rat& eps);

/// Finds n == a (mod r), n > m, with sigma(n)/n < eps; candidates sit
/// just below a threshold, n = i_{j+1} - k with 0 < k <= r.
SigmaWitness witness_near_zero(const LacunarySeq& seq, const Int& a, const Int& r,
                               const Int& m, const Rat& eps);

/// Brute-force cross-check: smallest witness with n <= cap, or nullopt.
/// target is the ratio the witness should approach (1/2 or 0).
std::optional<SigmaWitness> blind_scan_witness(const LacunarySeq& seq, const Int& a,
                                               const Int& r, const Int& m, const Rat& eps,
                                               const Rat& target, const Int& cap);

} // namespace gls

#endif
