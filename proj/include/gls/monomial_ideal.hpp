#ifndef GLS_MONOMIAL_IDEAL_HPP
#define GLS_MONOMIAL_IDEAL_HPP

#include "gls/expvec.hpp"
#include "gls/numeric.hpp"
#include "gls/quotient_ring.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace gls {

/// Monomial ideal in a QuotientRing, stored by a minimized generator
/// list: no generator divides another and no generator is zero in the
/// quotient. The unit ideal is generated by the unit monomial; the
/// zero ideal has an empty generator list.
///
/// A packed fast path (one byte per exponent, at most 8 variables,
/// exponents below 256) backs membership tests and products; outside
/// that envelope the generic path is used. Exhaustive family checks at
/// horizon 60 in four variables run through the packed path.
class MonomialIdeal {
public:
    MonomialIdeal(QuotientRing ring, std::vector<ExpVec> generators);

    static MonomialIdeal unit(QuotientRing ring);
    static MonomialIdeal zero(QuotientRing ring);

    const QuotientRing& ring() const { return *ring_; }
    const std::vector<ExpVec>& generators() const { return gens_; }

    bool is_zero_ideal() const { return gens_.empty(); }
    bool is_unit_ideal() const { return gens_.size() == 1 && gens_[0].is_unit(); }

    /// True iff some generator divides m.
    bool contains(const ExpVec& m) const;

    bool operator==(const MonomialIdeal& other) const {
        return ring() == other.ring() && gens_ == other.gens_;
    }

private:
    friend MonomialIdeal ideal_product(const MonomialIdeal&, const MonomialIdeal&);

    struct Packed;

    std::shared_ptr<const QuotientRing> ring_;
    std::vector<ExpVec> gens_;                 // minimized, canonical lex order
    std::shared_ptr<const Packed> packed_;     // built eagerly when packable
};

/// Minimized generator set of the product {a*b : a in A, b in B}, with
/// monomials that vanish in the quotient discarded. Throws on
/// mismatched ambient rings.
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);

/// Membership alias matching the operation vocabulary.
inline bool ideal_contains(const MonomialIdeal& ideal, const ExpVec& m) {
    return ideal.contains(m);
}

/// Number of standard monomials (over all degrees) outside the ideal;
/// std::nullopt encodes an infinite colength. Cofiniteness is decided
/// by a bounded search for pure variable powers up to one past the
/// largest generator degree, then the count proceeds degree by degree
/// until a degree whose standard monomials all lie in the ideal.
std::optional<Int> colength(const QuotientRing& ring, const MonomialIdeal& ideal);

} // namespace gls

#endif
