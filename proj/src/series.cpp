#include "gls/series.hpp"

#include "gls/rank.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gls {

namespace {

const LogCeil& log_ceil() {
    static const LogCeil instance;
    return instance;
}

LacunarySeqPtr ensure_seq(const LacunarySeqPtr& seq) {
    return seq ? seq : std::make_shared<LacunarySeq>();
}

// Enumerates exponent tuples over `slots` entries summing to `degree`,
// in descending lex order (first slot largest first).
void visit_compositions(std::size_t slots, std::uint64_t degree,
                        const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
    std::vector<std::uint32_t> current(slots, 0);
    auto recurse = [&](auto&& self, std::size_t slot, std::uint64_t remaining) -> void {
        if (slot + 1 == slots) {
            current[slot] = static_cast<std::uint32_t>(remaining);
            visit(current);
            current[slot] = 0;
            return;
        }
        for (std::uint64_t e = remaining + 1; e-- > 0;) {
            current[slot] = static_cast<std::uint32_t>(e);
            self(self, slot + 1, remaining - e);
        }
        current[slot] = 0;
    };
    if (slots == 0) throw std::invalid_argument("visit_compositions: no slots");
    recurse(recurse, 0, degree);
}

std::int64_t require_level(const Int& n) {
    auto lv = to_int64(n);
    if (!lv || *lv < 0)
        throw std::invalid_argument("graded level out of enumerable range: " + n.str());
    return *lv;
}

} // namespace

GradedSeries::GradedSeries(QuotientRing ring, int scale, std::string label,
                           std::map<std::string, std::string> params,
                           std::function<void(std::int64_t, const BasisVisitor&)> visit,
                           std::function<Int(const Int&)> dim_closed, LacunarySeqPtr seq)
    : ring_(std::move(ring)),
      scale_(scale),
      label_(std::move(label)),
      params_(std::move(params)),
      visit_(std::move(visit)),
      dim_closed_(std::move(dim_closed)),
      seq_(std::move(seq)) {
    if (scale_ < 1) throw std::invalid_argument("GradedSeries: scale must be >= 1");
}

void GradedSeries::visit_basis(std::int64_t n, const BasisVisitor& visitor) const {
    if (n < 0) throw std::invalid_argument("GradedSeries: negative level");
    visit_(n, visitor);
}

std::vector<ExpVec> GradedSeries::basis(std::int64_t n) const {
    std::vector<ExpVec> out;
    visit_basis(n, [&](const ExpVec& m) { out.push_back(m); });
    std::sort(out.begin(), out.end(), ExpVecLexLess{});
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::logic_error("GradedSeries: basis rule produced a duplicate monomial");
    return out;
}

Int GradedSeries::dim(const Int& n) const {
    if (dim_closed_) return dim_closed_(n);
    return dim_by_enumeration(require_level(n));
}

Int GradedSeries::dim_by_enumeration(std::int64_t n) const {
    std::uint64_t count = 0;
    visit_basis(n, [&](const ExpVec&) { ++count; });
    return Int(count);
}

namespace {

Example make_e25(const ExampleParams& p) {
    if (p.d < 1) throw std::invalid_argument("e25: d must be >= 1");
    const int d = p.d;
    LacunarySeqPtr seq = ensure_seq(p.seq);
    std::vector<std::string> names;
    for (int i = 0; i <= d + 1; ++i) names.push_back("x" + std::to_string(i));
    std::vector<std::uint32_t> rel(static_cast<std::size_t>(d) + 2, 0);
    rel[1] = 2;
    QuotientRing ring(names, {ExpVec(rel)});

    const std::size_t nvars = static_cast<std::size_t>(d) + 2;
    // M_i = monomials of degree i in x0, x2, ..., x_{d+1}; slot s maps
    // to variable 0 for s = 0 and s + 1 otherwise (skipping x1).
    auto emit_family = [nvars](std::uint64_t extra_x0, std::uint32_t x1, std::uint64_t mdeg,
                               const BasisVisitor& visit) {
        visit_compositions(nvars - 1, mdeg, [&](const std::vector<std::uint32_t>& slots) {
            std::vector<std::uint32_t> exps(nvars, 0);
            exps[0] = slots[0] + static_cast<std::uint32_t>(extra_x0);
            exps[1] = x1;
            for (std::size_t s = 1; s < slots.size(); ++s) exps[s + 1] = slots[s];
            visit(ExpVec(std::move(exps)));
        });
    };

    auto visit = [seq, emit_family, nvars](std::int64_t n, const BasisVisitor& v) {
        if (n == 0) {
            v(ExpVec(std::vector<std::uint32_t>(nvars, 0)));
            return;
        }
        Int sigma = seq->sigma(n);
        std::uint64_t s = sigma.convert_to<std::uint64_t>();
        // x0^n * M_n  and  x1 * x0^{n - sigma} * M_{n + sigma - 1};
        // the families are disjoint (x1-exponent 0 versus 1).
        emit_family(static_cast<std::uint64_t>(n), 0, static_cast<std::uint64_t>(n), v);
        emit_family(static_cast<std::uint64_t>(n) - s, 1, static_cast<std::uint64_t>(n) + s - 1, v);
    };
    auto dim_closed = [seq, d](const Int& n) -> Int {
        if (n < 0) throw std::invalid_argument("dim: negative level");
        if (n == 0) return 1;
        Int sigma = seq->sigma(n);
        return binomial(d + n, d) + binomial(d + n + sigma - 1, d);
    };
    return GradedSeries(std::move(ring), 2, "e25", {{"d", std::to_string(d)}}, visit, dim_closed,
                        seq);
}

Example make_e2(const ExampleParams& p) {
    MembershipRule t = p.t;
    QuotientRing ring({"x0", "x1", "x2"}, {ExpVec{0, 2, 0}});
    // The stated span {x1 x0^i x2^j : i + j = n} sits in degree n + 1;
    // it is placed in the degree-2n piece by the x0^{n-1} twist, which
    // preserves dimensions and products (every product vanishes on x1^2).
    auto visit = [](std::int64_t n, const BasisVisitor& v, const MembershipRule& rule) {
        if (n == 0) {
            v(ExpVec{0, 0, 0});
            return;
        }
        if (!rule.contains(n)) return;
        for (std::int64_t i = n; i >= 0; --i)
            v(ExpVec{static_cast<std::uint32_t>(n - 1 + i), 1, static_cast<std::uint32_t>(n - i)});
    };
    auto dim_closed = [t](const Int& n) -> Int {
        if (n < 0) throw std::invalid_argument("dim: negative level");
        if (n == 0) return 1;
        return t.contains(n) ? Int(n + 1) : Int(0);
    };
    return GradedSeries(std::move(ring), 2, "e2", {{"t", t.str()}},
                        [t, visit](std::int64_t n, const BasisVisitor& v) { visit(n, v, t); },
                        dim_closed);
}

Example make_t21(const ExampleParams& p) {
    MembershipRule t = p.t;
    if (!t.infinite_with_infinite_complement())
        throw std::invalid_argument(
            "t21: support rule must be infinite with infinite complement (got " + t.str() + ")");
    QuotientRing ring({"x0", "x1", "x2"}, {ExpVec{0, 2, 0}});
    auto lambda = [t](const Int& n) -> Int {
        return t.contains(n) ? log_ceil().ceil_log(n) : log_ceil().ceil_log_half(n);
    };
    auto visit = [lambda](std::int64_t n, const BasisVisitor& v) {
        if (n == 0) {
            v(ExpVec{0, 0, 0});
            return;
        }
        std::int64_t lam = lambda(Int(n)).convert_to<std::int64_t>();
        for (std::int64_t j = 0; j <= lam; ++j)
            v(ExpVec{static_cast<std::uint32_t>(2 * n - 1 - j), 1, static_cast<std::uint32_t>(j)});
    };
    auto dim_closed = [lambda](const Int& n) -> Int {
        if (n < 0) throw std::invalid_argument("dim: negative level");
        if (n == 0) return 1;
        return lambda(n) + 1;
    };
    return GradedSeries(std::move(ring), 2, "t21", {{"t", t.str()}}, visit, dim_closed);
}

Example make_pd_full(const ExampleParams& p) {
    if (p.d < 1) throw std::invalid_argument("pd_full: d must be >= 1");
    const int d = p.d;
    std::vector<std::string> names;
    for (int i = 0; i <= d; ++i) names.push_back("x" + std::to_string(i));
    QuotientRing ring = QuotientRing::polynomial(names);
    auto visit = [ring](std::int64_t n, const BasisVisitor& v) {
        visit_standard_monomials(ring, static_cast<std::uint64_t>(n), v);
    };
    auto dim_closed = [d](const Int& n) -> Int {
        if (n < 0) throw std::invalid_argument("dim: negative level");
        return binomial(n + d, d);
    };
    return GradedSeries(ring, 1, "pd_full", {{"d", std::to_string(d)}}, visit, dim_closed);
}

Example make_veronese(const ExampleParams& p) {
    if (p.d < 1 || p.c < 1) throw std::invalid_argument("veronese: require d >= 1 and c >= 1");
    const int d = p.d;
    const int c = p.c;
    std::vector<std::string> names;
    for (int i = 0; i <= d; ++i) names.push_back("x" + std::to_string(i));
    QuotientRing ring = QuotientRing::polynomial(names);
    auto visit = [ring, c](std::int64_t n, const BasisVisitor& v) {
        visit_standard_monomials(ring, static_cast<std::uint64_t>(c) * n, v);
    };
    auto dim_closed = [d, c](const Int& n) -> Int {
        if (n < 0) throw std::invalid_argument("dim: negative level");
        return binomial(c * n + d, d);
    };
    return GradedSeries(ring, c, "veronese",
                        {{"c", std::to_string(c)}, {"d", std::to_string(d)}}, visit, dim_closed);
}

Example make_e16(const ExampleParams& params) {
    if (params.d < 1) throw std::invalid_argument("e16: d must be >= 1");
    if (params.p < 2) throw std::invalid_argument("e16: p must be a prime >= 2");
    const int d = params.d;
    const Int p = params.p;
    GrowthModel model;
    model.label = "e16";
    model.params = {{"d", std::to_string(d)}, {"p", p.str()}};
    model.value = [d, p](const Int& n) -> Int {
        if (n < 0) throw std::invalid_argument("value: negative level");
        if (n == 0) return 1;
        return is_power_of(n, p) ? binomial(d + n - 1, d - 1) : Int(0);
    };
    model.interesting = [p](const Int& lo, const Int& hi) {
        std::vector<Int> out;
        for (Int q = 1; q <= hi; q *= p)
            if (q >= lo) out.push_back(q);
        return out;
    };
    return model;
}

Example make_e3(const ExampleParams& params) {
    if (params.d < 1) throw std::invalid_argument("e3: d must be >= 1");
    if (params.periods.empty()) throw std::invalid_argument("e3: need at least one period a_i");
    for (const Int& a : params.periods)
        if (a < 1) throw std::invalid_argument("e3: periods must be positive");
    const int d = params.d;
    const std::vector<Int> periods = params.periods;
    const Int bounded = params.bounded_term;
    GrowthModel model;
    model.label = "e3";
    std::string alist;
    for (std::size_t i = 0; i < periods.size(); ++i) {
        if (i) alist += ",";
        alist += periods[i].str();
    }
    model.params = {{"a_i", alist},
                    {"bounded", bounded.str()},
                    {"d", std::to_string(d)}};
    model.value = [d, periods, bounded](const Int& n) -> Int {
        if (n < 0) throw std::invalid_argument("value: negative level");
        if (n == 0) return 1;
        Int lambda = 0;
        for (const Int& a : periods)
            if (n % a == 0) ++lambda;
        return lambda * binomial(d + n - 1, d - 1) + bounded;
    };
    return model;
}

Example make_dhlb(const ExampleParams& params) {
    if (params.d < 1) throw std::invalid_argument("dhlb: d must be >= 1");
    const int d = params.d;
    const int a = params.twist;
    GrowthModel model;
    model.label = "dhlb";
    model.params = {{"a", std::to_string(a)}, {"d", std::to_string(d)}};
    model.value = [d, a](const Int& n) -> Int {
        if (n < 0) throw std::invalid_argument("value: negative level");
        Int top = n * a + d + 1;
        return binomial(top, d + 1) - binomial(top - 2, d + 1);
    };
    return model;
}

} // namespace

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names = {"e25",     "e2", "t21",      "e16",
                                                   "e3",      "pd_full", "veronese", "dhlb"};
    return names;
}

Example make_example(const std::string& name, const ExampleParams& params) {
    if (name == "e25") return make_e25(params);
    if (name == "e2") return make_e2(params);
    if (name == "t21") return make_t21(params);
    if (name == "e16") return make_e16(params);
    if (name == "e3") return make_e3(params);
    if (name == "pd_full") return make_pd_full(params);
    if (name == "veronese") return make_veronese(params);
    if (name == "dhlb" || name == "double_hyperplane_line_bundle") return make_dhlb(params);
    std::string valid;
    for (const auto& n : example_names()) {
        if (!valid.empty()) valid += ", ";
        valid += n;
    }
    throw std::invalid_argument("unknown example '" + name + "'; valid names: " + valid);
}

Int example_dim(const Example& ex, const Int& n) {
    if (std::holds_alternative<GradedSeries>(ex)) return std::get<GradedSeries>(ex).dim(n);
    return std::get<GrowthModel>(ex).value(n);
}

IndexEstimate index(const GradedSeries& series, std::int64_t horizon) {
    if (horizon < 1) throw std::invalid_argument("index: horizon must be >= 1");
    Int g = 0;
    for (std::int64_t n = 1; n <= horizon; ++n)
        if (series.dim(Int(n)) > 0) g = gcd(g, Int(n));
    if (g == 0)
        throw std::runtime_error("no nonzero piece up to horizon " + std::to_string(horizon));
    return {g, horizon};
}

KodairaReport kodaira_iitaka(const GradedSeries& series, std::int64_t horizon) {
    if (horizon < 1) throw std::invalid_argument("kodaira_iitaka: horizon must be >= 1");
    KodairaReport report;
    report.horizon = horizon;

    if (!series.ring().relations_are_pure_powers()) {
        // Outside the validity domain of the lattice estimator: report
        // only an empirical growth exponent fitted on the horizon.
        report.lattice_valid = false;
        Int d1 = 0, d2 = 0;
        std::int64_t n1 = 0, n2 = 0;
        for (std::int64_t n = 1; n <= horizon; ++n) {
            Int dim = series.dim(Int(n));
            if (dim > 0) {
                if (n1 == 0) { n1 = n; d1 = dim; }
                n2 = n; d2 = dim;
            }
        }
        if (n1 != 0 && n2 > n1) {
            double num = std::log(d2.convert_to<double>() / d1.convert_to<double>());
            double den = std::log(static_cast<double>(n2) / static_cast<double>(n1));
            report.empirical_slope = num / den;
        }
        return report;
    }

    RankAccumulator rank(series.ring().num_vars());
    const QuotientRing& ring = series.ring();
    for (std::int64_t n = 1; n <= horizon; ++n) {
        series.visit_basis(n, [&](const ExpVec& m) {
            if (ring.is_nilpotent(m)) return;
            std::vector<Int> row(m.size());
            for (std::size_t i = 0; i < m.size(); ++i) row[i] = Int(m[i]);
            rank.add(std::move(row));
        });
        if (rank.rank() == ring.num_vars()) break;
    }
    if (rank.rank() > 0) report.q = static_cast<int>(rank.rank()) - 1;
    return report;
}

} // namespace gls
