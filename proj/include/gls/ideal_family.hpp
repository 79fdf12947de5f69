#ifndef GLS_IDEAL_FAMILY_HPP
#define GLS_IDEAL_FAMILY_HPP

#include "gls/lacunary.hpp"
#include "gls/monomial_ideal.hpp"
#include "gls/numeric.hpp"
#include "gls/quotient_ring.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gls {

/// Graded family of monomial ideals in a local quotient ring: a rule
/// n -> I_n with I_0 the unit ideal and (when the family axioms hold)
/// I_m * I_n contained in I_{m+n}.
struct GradedIdealFamily {
    QuotientRing ring;
    std::string label;
    std::map<std::string, std::string> params;
    std::function<MonomialIdeal(std::int64_t)> rule;
    /// Closed-form colength model when one is known (the lacunary
    /// family carries the count read off its standard-monomial basis
    /// description); validated against enumeration by
    /// colength_sequence and the test suite.
    std::function<Int(const Int&)> colength_model;
    LacunarySeqPtr seq;
};

/// The lacunary family I_n = (N_n, y * N_{n - sigma(n)}) inside
/// k[[x_1..x_d, y]]/(y^2), where N_i is the set of degree-i monomials
/// in x_1..x_d.
GradedIdealFamily make_family_e1(int d, LacunarySeqPtr seq = nullptr);

/// One containment failure: the offending generator product and where
/// it came from.
struct FamilyViolation {
    std::int64_t m;
    std::int64_t n;
    ExpVec witness;
};

struct FamilyCheckReport {
    bool ok = true;
    std::int64_t horizon = 0;
    std::vector<FamilyViolation> violations; // sorted by (m, n)
};

/// Exhaustively verifies I_0 = R, m-primarity of every I_n with
/// 1 <= n <= horizon, and generator-by-generator containment
/// I_m * I_n in I_{m+n} for all 1 <= m <= n with m + n <= horizon.
/// Containment is tested on the minimized generators of the product,
/// which suffices because membership is divisibility-monotone.
FamilyCheckReport check_family(const GradedIdealFamily& family, std::int64_t horizon,
                               std::size_t max_violations = 16);

struct ColengthRow {
    std::int64_t n;
    Int colength;        // exact, by standard-monomial enumeration
    std::optional<Int> model; // closed-form count when the family has one
};

/// Exact colengths for n = 0..horizon. Throws when some member is not
/// m-primary (naming the offending n) or when a closed-form model
/// disagrees with the enumeration.
std::vector<ColengthRow> colength_sequence(const GradedIdealFamily& family,
                                           std::int64_t horizon);

} // namespace gls

#endif
