#ifndef GLS_QUOTIENT_RING_HPP
#define GLS_QUOTIENT_RING_HPP

#include "gls/expvec.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gls {

/// Polynomial / power-series variable list together with monomial
/// relations (e.g. the single generator x1^2) defining nilpotents.
/// An empty relation list models an ordinary polynomial ring. Standard
/// grading: every variable has degree 1. Values are immutable after
/// construction.
class QuotientRing {
public:
    QuotientRing(std::vector<std::string> variable_names, std::vector<ExpVec> relations = {});

    static QuotientRing polynomial(std::vector<std::string> variable_names);

    std::size_t num_vars() const { return vars_.size(); }
    const std::vector<std::string>& variable_names() const { return vars_; }
    const std::vector<ExpVec>& relations() const { return relations_; }

    /// A monomial is zero in the quotient iff some relation generator
    /// divides it.
    bool is_zero(const ExpVec& m) const;

    /// Exact nilpotency test for a monomial: m^e is eventually zero iff
    /// some relation generator's support is contained in m's support.
    bool is_nilpotent(const ExpVec& m) const;

    /// True when some relation generator is a pure power of the given
    /// variable, so only finitely many standard monomials involve it.
    bool variable_nilpotent_bounded(std::size_t var) const;

    /// True when every relation generator is a pure power of a single
    /// variable. In such quotients any k-linear combination of
    /// nilpotent monomials is itself nilpotent, which is the validity
    /// domain of the lattice-rank Kodaira-Iitaka estimator.
    bool relations_are_pure_powers() const;

    bool operator==(const QuotientRing& other) const {
        return vars_ == other.vars_ && relation_exps_equal(other);
    }
    bool operator!=(const QuotientRing& other) const { return !(*this == other); }

private:
    bool relation_exps_equal(const QuotientRing& other) const;

    std::vector<std::string> vars_;
    std::vector<ExpVec> relations_; // minimized, canonical order
};

/// All monomials of the given total degree that are nonzero in the
/// quotient, each exactly once, in the canonical lex order.
std::vector<ExpVec> standard_monomials(const QuotientRing& ring, std::uint64_t degree);

/// Visitor form of the same enumeration; avoids materializing large
/// bases when only counting or streaming. Visits in canonical order.
void visit_standard_monomials(const QuotientRing& ring, std::uint64_t degree,
                              const std::function<void(const ExpVec&)>& visit);

/// Count of standard monomials of one degree, via the visitor.
std::uint64_t count_standard_monomials(const QuotientRing& ring, std::uint64_t degree);

} // namespace gls

#endif
