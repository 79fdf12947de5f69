#ifndef GLS_MEMBERSHIP_HPP
#define GLS_MEMBERSHIP_HPP

#include "gls/numeric.hpp"

#include <string>
#include <vector>

namespace gls {

/// Decidable membership rule for a subset T of the positive integers,
/// used by the support-controlled example series. Parsed from compact
/// specs like "multiples:3", "powers:2", "evens", "odds", "all",
/// "none", "list:1,5,7".
class MembershipRule {
public:
    enum class Kind { All, None, Evens, Odds, Multiples, Powers, List };

    MembershipRule() : kind_(Kind::All) {}

    static MembershipRule multiples(Int k);
    static MembershipRule powers(Int p);
    static MembershipRule evens() { return MembershipRule(Kind::Evens); }
    static MembershipRule odds() { return MembershipRule(Kind::Odds); }
    static MembershipRule all() { return MembershipRule(Kind::All); }
    static MembershipRule none() { return MembershipRule(Kind::None); }
    static MembershipRule list(std::vector<Int> values);

    static MembershipRule parse(const std::string& spec);

    bool contains(const Int& n) const;

    /// True when both T and its complement in Z+ are infinite.
    bool infinite_with_infinite_complement() const;

    std::string str() const;

    Kind kind() const { return kind_; }
    const Int& param() const { return param_; }

private:
    explicit MembershipRule(Kind kind, Int param = 0) : kind_(kind), param_(std::move(param)) {}

    Kind kind_;
    Int param_;
    std::vector<Int> list_;
};

/// True iff n is p^k for some k >= 0 (so 1 counts), decided by
/// repeated exact division.
bool is_power_of(const Int& n, const Int& p);

/// Exact ceiling of log(n) and log(n)/2 in the natural base, decided
/// by comparing n against rational interval bounds for powers of e
/// whose width is below 2^-128. If a comparison ever falls inside the
/// interval the query refuses with BoundaryUndecidable instead of
/// guessing (this cannot happen for integer n, since e^k is
/// irrational for k >= 1, but the refusal is the documented contract).
class LogCeil {
public:
    struct BoundaryUndecidable : std::runtime_error {
        explicit BoundaryUndecidable(const std::string& what) : std::runtime_error(what) {}
    };

    LogCeil();

    /// smallest k >= 0 with n <= e^k, i.e. ceil(log n) for n >= 2 and 0 for n = 1.
    Int ceil_log(const Int& n) const;

    /// smallest k >= 0 with n <= e^{2k}, i.e. ceil(log(n)/2).
    Int ceil_log_half(const Int& n) const;

private:
    Int smallest_power_index(const Int& n, unsigned step) const;

    Rat e_lo_;
    Rat e_hi_;
};

} // namespace gls

#endif
