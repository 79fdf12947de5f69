#include "gls/ideal_family.hpp"

#include <algorithm>
#include <stdexcept>

namespace gls {

GradedIdealFamily make_family_e1(int d, LacunarySeqPtr seq) {
    if (d < 1) throw std::invalid_argument("e1 family: d must be >= 1");
    if (!seq) seq = std::make_shared<LacunarySeq>();

    std::vector<std::string> names;
    for (int i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("y");
    std::vector<std::uint32_t> rel(static_cast<std::size_t>(d) + 1, 0);
    rel[static_cast<std::size_t>(d)] = 2;
    QuotientRing ring(names, {ExpVec(rel)});

    const std::size_t nvars = static_cast<std::size_t>(d) + 1;
    auto rule = [ring, seq, d, nvars](std::int64_t n) -> MonomialIdeal {
        if (n < 0) throw std::invalid_argument("family rule: negative index");
        if (n == 0) return MonomialIdeal::unit(ring);
        Int sigma = seq->sigma(n);
        std::uint64_t s = sigma.convert_to<std::uint64_t>();
        std::vector<ExpVec> gens;
        // N_n: all degree-n monomials in the x variables.
        QuotientRing xring = QuotientRing::polynomial(
            std::vector<std::string>(ring.variable_names().begin(),
                                     ring.variable_names().end() - 1));
        visit_standard_monomials(xring, static_cast<std::uint64_t>(n), [&](const ExpVec& m) {
            std::vector<std::uint32_t> exps(nvars, 0);
            for (int i = 0; i < d; ++i) exps[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)];
            gens.emplace_back(std::move(exps));
        });
        // y * N_{n - sigma(n)}.
        visit_standard_monomials(xring, static_cast<std::uint64_t>(n) - s, [&](const ExpVec& m) {
            std::vector<std::uint32_t> exps(nvars, 0);
            for (int i = 0; i < d; ++i) exps[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)];
            exps[nvars - 1] = 1;
            gens.emplace_back(std::move(exps));
        });
        return MonomialIdeal(ring, std::move(gens));
    };

    auto model = [seq, d](const Int& n) -> Int {
        if (n < 0) throw std::invalid_argument("colength model: negative index");
        if (n == 0) return 0;
        Int sigma = seq->sigma(n);
        // |{N_i : i < n}| + |{y N_j : j < n - sigma}| from the standard
        // monomial basis of R/I_n.
        return binomial(n + d - 1, static_cast<unsigned>(d)) +
               binomial(n - sigma + d - 1, static_cast<unsigned>(d));
    };

    GradedIdealFamily family;
    family.ring = ring;
    family.label = "e1";
    family.params = {{"d", std::to_string(d)}};
    family.rule = rule;
    family.colength_model = model;
    family.seq = seq;
    return family;
}

FamilyCheckReport check_family(const GradedIdealFamily& family, std::int64_t horizon,
                               std::size_t max_violations) {
    if (horizon < 2) throw std::invalid_argument("check_family: horizon must be >= 2");
    FamilyCheckReport report;
    report.horizon = horizon;

    if (!family.rule(0).is_unit_ideal()) {
        report.ok = false;
        report.violations.push_back(
            {0, 0, ExpVec(std::vector<std::uint32_t>(family.ring.num_vars(), 0))});
        return report;
    }

    std::vector<MonomialIdeal> members;
    members.reserve(static_cast<std::size_t>(horizon) + 1);
    members.push_back(family.rule(0));
    for (std::int64_t n = 1; n <= horizon; ++n) members.push_back(family.rule(n));

    for (std::int64_t m = 1; 2 * m <= horizon; ++m) {
        for (std::int64_t n = m; m + n <= horizon; ++n) {
            MonomialIdeal product =
                ideal_product(members[static_cast<std::size_t>(m)], members[static_cast<std::size_t>(n)]);
            const MonomialIdeal& target = members[static_cast<std::size_t>(m + n)];
            for (const auto& gen : product.generators()) {
                if (!target.contains(gen)) {
                    report.ok = false;
                    report.violations.push_back({m, n, gen});
                    if (report.violations.size() >= max_violations) return report;
                    break;
                }
            }
        }
    }
    return report;
}

std::vector<ColengthRow> colength_sequence(const GradedIdealFamily& family,
                                           std::int64_t horizon) {
    if (horizon < 0) throw std::invalid_argument("colength_sequence: negative horizon");
    std::vector<ColengthRow> rows;
    rows.reserve(static_cast<std::size_t>(horizon) + 1);
    for (std::int64_t n = 0; n <= horizon; ++n) {
        MonomialIdeal ideal = family.rule(n);
        std::optional<Int> length = colength(family.ring, ideal);
        if (!length)
            throw std::runtime_error("family member I_" + std::to_string(n) +
                                     " is not m-primary (infinite colength)");
        ColengthRow row{n, *length, std::nullopt};
        if (family.colength_model && n >= 1) {
            row.model = family.colength_model(Int(n));
            if (*row.model != row.colength)
                throw std::runtime_error(
                    "colength model disagrees with enumeration at n = " + std::to_string(n) +
                    ": model " + row.model->str() + " vs exact " + row.colength.str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace gls
