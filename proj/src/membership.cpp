#include "gls/membership.hpp"

#include <algorithm>
#include <stdexcept>

namespace gls {

MembershipRule MembershipRule::multiples(Int k) {
    if (k < 1) throw std::invalid_argument("multiples: modulus must be >= 1");
    return MembershipRule(Kind::Multiples, std::move(k));
}

MembershipRule MembershipRule::powers(Int p) {
    if (p < 2) throw std::invalid_argument("powers: base must be >= 2");
    return MembershipRule(Kind::Powers, std::move(p));
}

MembershipRule MembershipRule::list(std::vector<Int> values) {
    MembershipRule rule(Kind::List);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    rule.list_ = std::move(values);
    return rule;
}

MembershipRule MembershipRule::parse(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "all") return all();
    if (head == "none") return none();
    if (head == "evens") return evens();
    if (head == "odds") return odds();
    if (head == "multiples") return multiples(parse_int(tail));
    if (head == "powers") return powers(parse_int(tail));
    if (head == "list") {
        std::vector<Int> values;
        std::size_t pos = 0;
        while (pos < tail.size()) {
            auto comma = tail.find(',', pos);
            if (comma == std::string::npos) comma = tail.size();
            values.push_back(parse_int(tail.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return list(std::move(values));
    }
    throw std::invalid_argument(
        "unknown membership rule '" + spec +
        "'; expected all, none, evens, odds, multiples:K, powers:P or list:A,B,...");
}

bool is_power_of(const Int& n, const Int& p) {
    if (n < 1) return false;
    Int m = n;
    while (m > 1) {
        if (m % p != 0) return false;
        m /= p;
    }
    return true;
}

bool MembershipRule::contains(const Int& n) const {
    if (n < 1) return false;
    switch (kind_) {
        case Kind::All: return true;
        case Kind::None: return false;
        case Kind::Evens: return n % 2 == 0;
        case Kind::Odds: return n % 2 != 0;
        case Kind::Multiples: return n % param_ == 0;
        case Kind::Powers: return is_power_of(n, param_);
        case Kind::List: return std::binary_search(list_.begin(), list_.end(), n);
    }
    return false;
}

bool MembershipRule::infinite_with_infinite_complement() const {
    switch (kind_) {
        case Kind::All:
        case Kind::None:
        case Kind::List: return false;
        case Kind::Evens:
        case Kind::Odds:
        case Kind::Powers: return true;
        case Kind::Multiples: return param_ >= 2;
    }
    return false;
}

std::string MembershipRule::str() const {
    switch (kind_) {
        case Kind::All: return "all";
        case Kind::None: return "none";
        case Kind::Evens: return "evens";
        case Kind::Odds: return "odds";
        case Kind::Multiples: return "multiples:" + param_.str();
        case Kind::Powers: return "powers:" + param_.str();
        case Kind::List: {
            std::string out = "list:";
            for (std::size_t i = 0; i < list_.size(); ++i) {
                if (i) out += ",";
                out += list_[i].str();
            }
            return out;
        }
    }
    return "";
}

LogCeil::LogCeil() {
    // e = sum 1/i!; truncating at i = 36 leaves a tail below 2/36!,
    // well under 2^-128.
    Rat sum = 0;
    Int fact = 1;
    for (unsigned i = 0; i <= 36; ++i) {
        if (i > 0) fact *= i;
        sum += Rat(1, fact);
    }
    e_lo_ = sum;
    e_hi_ = sum + Rat(2, fact);
}

Int LogCeil::smallest_power_index(const Int& n, unsigned step) const {
    if (n < 1) throw std::invalid_argument("LogCeil: n must be >= 1");
    Rat lo = 1, hi = 1;
    Rat step_lo = e_lo_, step_hi = e_hi_;
    for (unsigned i = 1; i < step; ++i) {
        step_lo *= e_lo_;
        step_hi *= e_hi_;
    }
    Rat target(n);
    for (Int k = 0;; ++k) {
        if (target <= lo) return k;
        if (target <= hi)
            throw BoundaryUndecidable("cannot decide n <= e^" + (k * step).str() +
                                      " at 128-bit interval precision for n = " + n.str());
        lo *= step_lo;
        hi *= step_hi;
    }
}

Int LogCeil::ceil_log(const Int& n) const { return smallest_power_index(n, 1); }

Int LogCeil::ceil_log_half(const Int& n) const { return smallest_power_index(n, 2); }

} // namespace gls
