#include "gls/quotient_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace gls {

namespace {

// Remove zero-support duplicates and generators divisible by another;
// returns canonical lex order.
std::vector<ExpVec> minimize_relations(std::vector<ExpVec> rel) {
    std::sort(rel.begin(), rel.end(), ExpVecLexLess{});
    rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
    std::vector<ExpVec> kept;
    for (const auto& g : rel) {
        bool redundant = false;
        for (const auto& h : kept)
            if (h.divides(g)) { redundant = true; break; }
        for (const auto& h : rel)
            if (&h != &g && h != g && h.divides(g)) { redundant = true; break; }
        if (!redundant) kept.push_back(g);
    }
    return kept;
}

} // namespace

QuotientRing::QuotientRing(std::vector<std::string> variable_names, std::vector<ExpVec> relations)
    : vars_(std::move(variable_names)) {
    if (vars_.empty()) throw std::invalid_argument("QuotientRing: at least one variable required");
    for (const auto& g : relations) {
        if (g.size() != vars_.size())
            throw std::invalid_argument("QuotientRing: relation length does not match variable count");
        if (g.is_unit())
            throw std::invalid_argument("QuotientRing: relation 1 = 0 collapses the ring");
    }
    relations_ = minimize_relations(std::move(relations));
}

QuotientRing QuotientRing::polynomial(std::vector<std::string> variable_names) {
    return QuotientRing(std::move(variable_names), {});
}

bool QuotientRing::is_zero(const ExpVec& m) const {
    for (const auto& g : relations_)
        if (g.divides(m)) return true;
    return false;
}

bool QuotientRing::is_nilpotent(const ExpVec& m) const {
    for (const auto& g : relations_) {
        bool support_contained = true;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] > 0 && m[i] == 0) { support_contained = false; break; }
        if (support_contained) return true;
    }
    return false;
}

bool QuotientRing::variable_nilpotent_bounded(std::size_t var) const {
    for (const auto& g : relations_) {
        bool pure = g[var] > 0;
        for (std::size_t i = 0; pure && i < g.size(); ++i)
            if (i != var && g[i] > 0) pure = false;
        if (pure) return true;
    }
    return false;
}

bool QuotientRing::relations_are_pure_powers() const {
    for (const auto& g : relations_) {
        std::size_t support = 0;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] > 0) ++support;
        if (support != 1) return false;
    }
    return true;
}

bool QuotientRing::relation_exps_equal(const QuotientRing& other) const {
    return relations_ == other.relations_;
}

namespace {

struct Enumerator {
    const QuotientRing& ring;
    const std::function<void(const ExpVec&)>& visit;
    std::vector<std::uint32_t> current;

    // True when the partial assignment [0, upto) already guarantees
    // divisibility by a relation whose support lies in the prefix.
    bool pruned(std::size_t upto) const {
        for (const auto& g : ring.relations()) {
            bool divides = true;
            for (std::size_t i = 0; divides && i < g.size(); ++i) {
                if (g[i] == 0) continue;
                if (i >= upto || current[i] < g[i]) divides = false;
            }
            if (divides) return true;
        }
        return false;
    }

    void recurse(std::size_t var, std::uint64_t remaining) {
        if (var + 1 == current.size()) {
            current[var] = static_cast<std::uint32_t>(remaining);
            if (!pruned(current.size())) visit(ExpVec(current));
            current[var] = 0;
            return;
        }
        for (std::uint64_t e = remaining + 1; e-- > 0;) {
            current[var] = static_cast<std::uint32_t>(e);
            if (!pruned(var + 1)) recurse(var + 1, remaining - e);
        }
        current[var] = 0;
    }
};

} // namespace

void visit_standard_monomials(const QuotientRing& ring, std::uint64_t degree,
                              const std::function<void(const ExpVec&)>& visit) {
    Enumerator en{ring, visit, std::vector<std::uint32_t>(ring.num_vars(), 0)};
    en.recurse(0, degree);
}

std::vector<ExpVec> standard_monomials(const QuotientRing& ring, std::uint64_t degree) {
    std::vector<ExpVec> out;
    visit_standard_monomials(ring, degree, [&](const ExpVec& m) { out.push_back(m); });
    return out;
}

std::uint64_t count_standard_monomials(const QuotientRing& ring, std::uint64_t degree) {
    std::uint64_t count = 0;
    visit_standard_monomials(ring, degree, [&](const ExpVec&) { ++count; });
    return count;
}

} // namespace gls
