#include "gls/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace gls {

namespace {

constexpr std::size_t kMaxPackedVars = 8;
constexpr std::uint32_t kMaxPackedExp = 255;

bool packable(const ExpVec& m) {
    if (m.size() > kMaxPackedVars) return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > kMaxPackedExp) return false;
    return true;
}

// Variable 0 in the most significant byte, so numeric descending order
// on keys equals the canonical lex order on monomials.
std::uint64_t pack_key(const ExpVec& m) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        key |= static_cast<std::uint64_t>(m[i]) << (8 * (kMaxPackedVars - 1 - i));
    return key;
}

ExpVec unpack_key(std::uint64_t key, std::size_t nvars) {
    std::vector<std::uint32_t> exps(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
        exps[i] = static_cast<std::uint32_t>((key >> (8 * (kMaxPackedVars - 1 - i))) & 0xff);
    return ExpVec(std::move(exps));
}

// SWAR divisibility: g | m iff every byte of g is <= the matching byte
// of m. Valid while all bytes stay below 128.
constexpr std::uint64_t kHigh = 0x8080808080808080ull;

inline bool packed_divides(std::uint64_t g, std::uint64_t m) {
    return (((m | kHigh) - g) & kHigh) == kHigh;
}

inline unsigned packed_degree(std::uint64_t key) {
    unsigned deg = 0;
    for (std::size_t i = 0; i < kMaxPackedVars; ++i) deg += (key >> (8 * i)) & 0xff;
    return deg;
}

} // namespace

// Generators grouped by total degree (descending) with per-group sorted
// keys. Within one degree a divisor must be an exact match, which turns
// the dominant membership case into a binary search; smaller-degree
// groups are scanned with the SWAR test and skipped wholesale when the
// group's componentwise minimum already fails.
struct MonomialIdeal::Packed {
    struct Group {
        unsigned degree;
        std::uint64_t min_mask; // componentwise min over the group
        std::vector<std::uint64_t> keys; // descending
    };
    std::vector<Group> groups; // by degree, descending

    bool contains(std::uint64_t key, unsigned degree) const {
        for (const auto& g : groups) {
            if (g.degree > degree) continue;
            if (!packed_divides(g.min_mask, key)) continue;
            if (g.degree == degree) {
                auto it = std::lower_bound(g.keys.begin(), g.keys.end(), key,
                                           std::greater<std::uint64_t>{});
                if (it != g.keys.end() && *it == key) return true;
            } else {
                for (std::uint64_t gk : g.keys)
                    if (packed_divides(gk, key)) return true;
            }
        }
        return false;
    }
};

namespace {

std::shared_ptr<const MonomialIdeal::Packed> build_packed(const std::vector<ExpVec>& gens) {
    for (const auto& g : gens)
        if (!packable(g) || g.degree() >= 128) return nullptr;
    auto packed = std::make_shared<MonomialIdeal::Packed>();
    std::vector<std::pair<unsigned, std::uint64_t>> keyed;
    keyed.reserve(gens.size());
    for (const auto& g : gens)
        keyed.emplace_back(static_cast<unsigned>(g.degree()), pack_key(g));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    });
    for (const auto& [deg, key] : keyed) {
        if (packed->groups.empty() || packed->groups.back().degree != deg)
            packed->groups.push_back({deg, ~std::uint64_t{0}, {}});
        auto& group = packed->groups.back();
        group.keys.push_back(key);
        std::uint64_t mn = 0;
        for (std::size_t i = 0; i < kMaxPackedVars; ++i) {
            std::uint64_t a = (group.min_mask >> (8 * i)) & 0xff;
            std::uint64_t b = (key >> (8 * i)) & 0xff;
            mn |= std::min(a, b) << (8 * i);
        }
        group.min_mask = mn;
    }
    return packed;
}

// Minimization shared by the constructor and ideal_product: candidates
// arrive deduplicated and sorted ascending by (degree, lex); a
// candidate survives iff no kept generator of strictly smaller degree
// divides it (equal-degree distinct monomials never divide each other).
// Kept generators are bucketed by degree with a componentwise minimum
// so whole buckets are skipped in one test.
std::vector<ExpVec> minimize_sorted(std::vector<ExpVec> candidates) {
    struct Bucket {
        std::uint64_t degree;
        std::uint64_t min_mask = ~std::uint64_t{0};
        std::vector<std::uint64_t> keys;
        std::vector<std::size_t> plain; // indices into kept, unpackable entries
    };
    std::vector<ExpVec> kept;
    std::vector<Bucket> buckets;

    auto bucket_for = [&](std::uint64_t degree) -> Bucket& {
        if (buckets.empty() || buckets.back().degree != degree) buckets.push_back({degree});
        return buckets.back();
    };

    for (auto& c : candidates) {
        bool c_packable = packable(c) && c.degree() < 128;
        std::uint64_t c_key = c_packable ? pack_key(c) : 0;
        bool redundant = false;
        for (const auto& bucket : buckets) {
            if (bucket.degree >= c.degree()) break; // ascending processing order
            if (c_packable && !bucket.keys.empty() && packed_divides(bucket.min_mask, c_key))
                for (std::uint64_t gk : bucket.keys)
                    if (packed_divides(gk, c_key)) { redundant = true; break; }
            if (!redundant)
                for (std::size_t idx : bucket.plain)
                    if (kept[idx].divides(c)) { redundant = true; break; }
            if (!c_packable && !bucket.keys.empty() && !redundant) {
                // unpackable candidate against packed kept generators
                for (std::uint64_t gk : bucket.keys)
                    if (unpack_key(gk, c.size()).divides(c)) { redundant = true; break; }
            }
            if (redundant) break;
        }
        if (!redundant) {
            auto& bucket = bucket_for(c.degree());
            if (c_packable) {
                bucket.keys.push_back(c_key);
                std::uint64_t mn = 0;
                for (std::size_t i = 0; i < kMaxPackedVars; ++i) {
                    std::uint64_t a = (bucket.min_mask >> (8 * i)) & 0xff;
                    std::uint64_t b = (c_key >> (8 * i)) & 0xff;
                    mn |= std::min(a, b) << (8 * i);
                }
                bucket.min_mask = mn;
            } else {
                bucket.plain.push_back(kept.size());
            }
            kept.push_back(std::move(c));
        }
    }
    std::sort(kept.begin(), kept.end(), ExpVecLexLess{});
    return kept;
}

std::vector<ExpVec> canonicalize(const QuotientRing& ring, std::vector<ExpVec> gens) {
    std::vector<ExpVec> live;
    live.reserve(gens.size());
    for (auto& g : gens) {
        if (g.size() != ring.num_vars())
            throw std::invalid_argument("MonomialIdeal: generator length does not match ring");
        if (!ring.is_zero(g)) live.push_back(std::move(g));
    }
    std::sort(live.begin(), live.end(), [](const ExpVec& a, const ExpVec& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return ExpVec::lex_before(a, b);
    });
    live.erase(std::unique(live.begin(), live.end()), live.end());
    return minimize_sorted(std::move(live));
}

} // namespace

MonomialIdeal::MonomialIdeal(QuotientRing ring, std::vector<ExpVec> generators)
    : ring_(std::make_shared<QuotientRing>(std::move(ring))),
      gens_(canonicalize(*ring_, std::move(generators))) {
    packed_ = build_packed(gens_);
}

MonomialIdeal MonomialIdeal::unit(QuotientRing ring) {
    ExpVec one(std::vector<std::uint32_t>(ring.num_vars(), 0));
    return MonomialIdeal(std::move(ring), {one});
}

MonomialIdeal MonomialIdeal::zero(QuotientRing ring) {
    return MonomialIdeal(std::move(ring), {});
}

bool MonomialIdeal::contains(const ExpVec& m) const {
    if (m.size() != ring_->num_vars())
        throw std::invalid_argument("ideal_contains: monomial length does not match ring");
    if (packed_ && packable(m) && m.degree() < 128)
        return packed_->contains(pack_key(m), static_cast<unsigned>(m.degree()));
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ring() != b.ring())
        throw std::invalid_argument("ideal_product: mismatched ambient rings");
    const QuotientRing& ring = a.ring();

    bool fast = a.packed_ && b.packed_;
    std::uint64_t max_deg = 0;
    for (const auto& g : a.generators()) max_deg = std::max(max_deg, g.degree());
    std::uint64_t max_deg_b = 0;
    for (const auto& g : b.generators()) max_deg_b = std::max(max_deg_b, g.degree());
    fast = fast && (max_deg + max_deg_b < 128);

    if (fast) {
        std::vector<std::uint64_t> rel_keys;
        for (const auto& r : ring.relations()) {
            if (!packable(r)) { fast = false; break; }
            rel_keys.push_back(pack_key(r));
        }
        if (fast) {
            std::vector<std::uint64_t> keys;
            keys.reserve(a.generators().size() * b.generators().size());
            for (const auto& ga : a.generators()) {
                std::uint64_t ka = pack_key(ga);
                for (const auto& gb : b.generators()) {
                    std::uint64_t k = ka + pack_key(gb); // no carries below 128
                    bool zero = false;
                    for (std::uint64_t rk : rel_keys)
                        if (packed_divides(rk, k)) { zero = true; break; }
                    if (!zero) keys.push_back(k);
                }
            }
            std::sort(keys.begin(), keys.end());
            keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
            std::vector<ExpVec> candidates;
            candidates.reserve(keys.size());
            for (std::uint64_t k : keys) candidates.push_back(unpack_key(k, ring.num_vars()));
            return MonomialIdeal(ring, std::move(candidates));
        }
    }

    std::vector<ExpVec> products;
    products.reserve(a.generators().size() * b.generators().size());
    for (const auto& ga : a.generators())
        for (const auto& gb : b.generators()) {
            ExpVec p = ga * gb;
            if (!ring.is_zero(p)) products.push_back(std::move(p));
        }
    return MonomialIdeal(ring, std::move(products));
}

std::optional<Int> colength(const QuotientRing& ring, const MonomialIdeal& ideal) {
    if (ideal.ring() != ring)
        throw std::invalid_argument("colength: ideal does not live in the given ring");

    // Cofiniteness: every variable must either be nilpotent-bounded by
    // a ring relation or have a pure power inside the ideal. A pure
    // power v^e lies in a monomial ideal only if some generator is a
    // pure power of v with exponent <= e, so searching up to one past
    // the largest generator degree is exact.
    std::uint64_t cap = 1;
    for (const auto& g : ideal.generators()) cap = std::max(cap, g.degree() + 1);
    for (std::size_t v = 0; v < ring.num_vars(); ++v) {
        if (ring.variable_nilpotent_bounded(v)) continue;
        bool power_found = false;
        for (std::uint64_t e = 1; e <= cap && !power_found; ++e) {
            std::vector<std::uint32_t> exps(ring.num_vars(), 0);
            exps[v] = static_cast<std::uint32_t>(e);
            power_found = ideal.contains(ExpVec(std::move(exps)));
        }
        if (!power_found) return std::nullopt;
    }

    // Degree-by-degree count; stops at the first degree whose standard
    // monomials all lie in the ideal (membership is upward closed, so
    // all higher degrees are then inside too).
    Int total = 0;
    for (std::uint64_t degree = 0;; ++degree) {
        std::uint64_t outside = 0;
        visit_standard_monomials(ring, degree, [&](const ExpVec& m) {
            if (!ideal.contains(m)) ++outside;
        });
        if (outside == 0) return total;
        total += outside;
    }
}

} // namespace gls
