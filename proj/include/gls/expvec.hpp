#ifndef GLS_EXPVEC_HPP
#define GLS_EXPVEC_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gls {

/// Exponent vector of a monomial in a fixed variable set.
/// Immutable after construction; the total degree is cached.
class ExpVec {
public:
    ExpVec() = default;
    explicit ExpVec(std::vector<std::uint32_t> exps);
    ExpVec(std::initializer_list<std::uint32_t> exps);

    std::size_t size() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint64_t degree() const { return degree_; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    bool is_unit() const { return degree_ == 0; }

    /// Componentwise <=; both vectors must have the same length.
    bool divides(const ExpVec& other) const;

    /// Monomial multiplication: componentwise sum.
    ExpVec operator*(const ExpVec& other) const;

    bool operator==(const ExpVec& other) const { return exps_ == other.exps_; }
    bool operator!=(const ExpVec& other) const { return !(*this == other); }

    /// Canonical monomial order used for every deterministic listing:
    /// descending lexicographic comparison of exponent tuples, i.e.
    /// x0^2 before x0*x1 before x0*x2 before x1*x2 before x2^2.
    static bool lex_before(const ExpVec& a, const ExpVec& b);

    /// Rendering like "x0^2*x2" against a variable name list; "1" for
    /// the unit monomial.
    std::string str(const std::vector<std::string>& names) const;

private:
    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
};

struct ExpVecLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const { return ExpVec::lex_before(a, b); }
};

} // namespace gls

#endif
