#include "core/engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <string>
#include <thread>

#include "core/rng.hpp"

namespace kset {

namespace {

// Pascal's triangle up to the widest supported DP (28 non-identity elements).
struct Binomials {
    uint64_t c[30][30] = {};
    Binomials() {
        for (int n = 0; n < 30; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
    uint64_t operator()(int n, int k) const {
        if (k < 0 || k > n) return 0;
        return c[n][k];
    }
};

const Binomials kBinom;

// Colexicographic rank of a subset word among subsets of its size.
inline uint32_t colex_rank(uint32_t s) {
    uint32_t r = 0;
    int j = 1;
    while (s) {
        r += uint32_t(kBinom(std::countr_zero(s), j));
        ++j;
        s &= s - 1;
    }
    return r;
}

// Inverse of colex_rank for k-subsets of m positions.
inline uint32_t colex_unrank(int m, int k, uint64_t r) {
    uint32_t s = 0;
    int p = m - 1;
    for (int j = k; j >= 1; --j) {
        while (kBinom(p, j) > r) --p;
        s |= uint32_t(1) << p;
        r -= kBinom(p, j);
        --p;
    }
    return s;
}

// Next subset word of the same popcount (Gosper).
inline uint32_t next_subset(uint32_t s) {
    uint32_t c = s & (0u - s);
    uint32_t r = s + c;
    return (((r ^ s) >> 2) / c) | r;
}

// Image of a product mask under right multiplication by one element, given
// that element's table column.
inline uint32_t scatter(uint32_t pm, const uint8_t* col) {
    uint32_t nm = 0;
    while (pm) {
        nm |= uint32_t(1) << col[std::countr_zero(pm)];
        pm &= pm - 1;
    }
    return nm;
}

int32_t effective_threads(const EnginePolicy& pol) {
    if (pol.threads > 0) return pol.threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int32_t(hw) : 1;
}

// Table columns for the non-identity elements: col[x][p] = p * (x+1).
std::vector<uint8_t> product_columns(const Group& g) {
    const int32_t order = g.order();
    const int32_t m = order - 1;
    std::vector<uint8_t> col(size_t(m) * order);
    for (int32_t x = 0; x < m; ++x)
        for (int32_t p = 0; p < order; ++p) col[size_t(x) * order + p] = uint8_t(g.at(p, x + 1));
    return col;
}

void check_exact_preconditions(const Group& g, const EnginePolicy& pol) {
    if (g.order() > pol.exact_order_cap || g.order() > 28)
        throw Error(ErrorKind::Resource,
                    "exact K-set order cap exceeded (order " + std::to_string(g.order()) +
                        ", cap " + std::to_string(std::min(pol.exact_order_cap, 28)) + ")");
}

void check_memory(uint64_t projected, const EnginePolicy& pol) {
    if (projected > pol.memory_cap)
        throw Error(ErrorKind::Resource,
                    "projected memory " + std::to_string(projected) + " bytes exceeds the cap of " +
                        std::to_string(pol.memory_cap));
}

// Expand every subset of layer k by every unused element, OR-ing product
// masks into the next layer. Output content is thread-count invariant
// because fetch_or is idempotent and order-insensitive.
void expand_layer(const std::vector<uint32_t>& cur, std::vector<uint32_t>& next, int m, int k,
                  uint32_t full, const std::vector<uint8_t>& col, int32_t order,
                  int32_t threads) {
    const uint64_t layer = kBinom(m, k);

    // atomic=false is the single-writer fast path; the OR-merge makes the
    // layer content identical either way.
    auto run = [&]<bool atomic>(uint64_t lo, uint64_t hi) {
        uint32_t s = k == 0 ? 0 : colex_unrank(m, k, lo);
        for (uint64_t r = lo; r < hi; ++r) {
            uint32_t pm = cur[r];
            uint32_t rem = full & ~s;
            while (rem) {
                int x = std::countr_zero(rem);
                rem &= rem - 1;
                uint32_t nm = scatter(pm, col.data() + size_t(x) * order);
                uint32_t nr = colex_rank(s | (uint32_t(1) << x));
                if constexpr (atomic)
                    std::atomic_ref<uint32_t>(next[nr]).fetch_or(nm, std::memory_order_relaxed);
                else
                    next[nr] |= nm;
            }
            if (r + 1 < hi) s = next_subset(s);
        }
    };

    if (threads <= 1 || layer < 4096) {
        run.template operator()<false>(0, layer);
        return;
    }
    const uint64_t chunk = (layer + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (int32_t t = 0; t < threads; ++t) {
        uint64_t lo = uint64_t(t) * chunk;
        if (lo >= layer) break;
        uint64_t hi = std::min(layer, lo + chunk);
        pool.emplace_back([&run, lo, hi] { run.template operator()<true>(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

uint64_t dp_peak_bytes(int m) {
    uint64_t peak = 4;
    for (int k = 0; k < m; ++k)
        peak = std::max(peak, (kBinom(m, k) + kBinom(m, k + 1)) * 4);
    return peak;
}

ElementSet subset_dp(const Group& g, const EnginePolicy& pol, KStats& stats) {
    const int32_t order = g.order();
    const int m = order - 1;
    const uint32_t full = m == 0 ? 0 : (m == 32 ? ~uint32_t(0) : (uint32_t(1) << m) - 1);

    stats.peak_bytes = dp_peak_bytes(m);
    check_memory(stats.peak_bytes, pol);

    const std::vector<uint8_t> col = product_columns(g);
    const int32_t threads = effective_threads(pol);

    std::vector<uint32_t> cur{uint32_t(1)}; // empty product = identity
    uint64_t states = 1;
    for (int k = 0; k < m; ++k) {
        std::vector<uint32_t> next(kBinom(m, k + 1), 0);
        expand_layer(cur, next, m, k, full, col, order, threads);
        states += next.size();
        cur.swap(next);
    }
    stats.states = states;
    return ElementSet::from_mask(order, cur[0]);
}

ElementSet meet_in_middle(const Group& g, const EnginePolicy& pol, KStats& stats) {
    const int32_t order = g.order();
    const int m = order - 1;
    if (m == 0) {
        stats.states = 1;
        stats.peak_bytes = 4;
        return ElementSet::single(order, 0);
    }
    const uint32_t full = (uint32_t(1) << m) - 1;
    const int h = m / 2;      // prefix size
    const int ce = m - h;     // suffix size

    uint64_t build_peak = 4;
    for (int k = 0; k < ce; ++k)
        build_peak = std::max(build_peak, (kBinom(m, k) + kBinom(m, k + 1)) * 4);
    stats.peak_bytes = build_peak + (h < ce ? kBinom(m, h) * 4 : 0);
    check_memory(stats.peak_bytes, pol);

    const std::vector<uint8_t> col = product_columns(g);
    const int32_t threads = effective_threads(pol);

    std::vector<uint32_t> cur{uint32_t(1)};
    std::vector<uint32_t> half;
    uint64_t states = 1;
    if (h == 0 && h < ce) half = cur;
    for (int k = 0; k < ce; ++k) {
        std::vector<uint32_t> next(kBinom(m, k + 1), 0);
        expand_layer(cur, next, m, k, full, col, order, threads);
        states += next.size();
        cur.swap(next);
        if (k + 1 == h && h < ce) half = cur;
    }
    const std::vector<uint32_t>& pre = h == ce ? cur : half;
    const std::vector<uint32_t>& suf = cur;

    // Every ordering splits as (prefix of size h) * (suffix over the
    // complement); S ranges over all h-subsets, so both sides of every
    // unordered split are visited.
    const uint64_t hl = kBinom(m, h);
    states += hl;

    auto combine = [&](uint64_t lo, uint64_t hi) {
        uint32_t acc = 0;
        uint32_t s = h == 0 ? 0 : colex_unrank(m, h, lo);
        for (uint64_t r = lo; r < hi; ++r) {
            uint32_t a = pre[r];
            uint32_t b = suf[colex_rank(full & ~s)];
            uint32_t am = a;
            while (am) {
                int p = std::countr_zero(am);
                am &= am - 1;
                const int32_t* rowp = g.row(p);
                uint32_t bm = b;
                while (bm) {
                    int q = std::countr_zero(bm);
                    bm &= bm - 1;
                    acc |= uint32_t(1) << rowp[q];
                }
            }
            if (r + 1 < hi) s = next_subset(s);
        }
        return acc;
    };

    uint32_t kmask = 0;
    if (threads <= 1 || hl < 4096) {
        kmask = combine(0, hl);
    } else {
        const uint64_t chunk = (hl + threads - 1) / threads;
        std::vector<uint32_t> partial(threads, 0);
        std::vector<std::thread> pool;
        for (int32_t t = 0; t < threads; ++t) {
            uint64_t lo = uint64_t(t) * chunk;
            if (lo >= hl) break;
            uint64_t hi = std::min(hl, lo + chunk);
            pool.emplace_back([&, t, lo, hi] { partial[t] = combine(lo, hi); });
        }
        for (auto& th : pool) th.join();
        for (uint32_t p : partial) kmask |= p;
    }

    stats.states = states;
    return ElementSet::from_mask(order, kmask);
}

// Structural annotations of a computed set.
void annotate(KSetResult& r, const Group& g, const ElementSet* commutant_hint) {
    const std::vector<int32_t> members = r.kset.to_vector();

    r.s1_contains_identity = r.kset.contains(0);

    r.s1_inverse_closed = true;
    for (int32_t k : members)
        if (!r.kset.contains(g.inverse(k))) {
            r.s1_inverse_closed = false;
            break;
        }

    r.s1_conjugation_invariant = true;
    for (int32_t k : members) {
        for (int32_t h = 0; h < g.order(); ++h)
            if (!r.kset.contains(g.conjugate(k, h))) {
                r.s1_conjugation_invariant = false;
                break;
            }
        if (!r.s1_conjugation_invariant) break;
    }

    ElementSet commutant = commutant_hint ? *commutant_hint : g.commutator_subgroup();
    r.s2_in_commutant = r.kset.is_subset_of(commutant);

    r.is_subgroup = r.s1_contains_identity;
    if (r.is_subgroup) {
        for (size_t i = 0; i < members.size() && r.is_subgroup; ++i)
            for (size_t j = 0; j < members.size(); ++j)
                if (!r.kset.contains(g.at(members[i], members[j]))) {
                    r.is_subgroup = false;
                    break;
                }
    }
}

} // namespace

const char* method_name(KMethod m) {
    switch (m) {
        case KMethod::AbelianShortcut: return "abelian_shortcut";
        case KMethod::SubsetDP: return "subset_dp";
        case KMethod::MeetInMiddle: return "meet_in_middle";
        case KMethod::Sample: return "sample";
    }
    return "?";
}

const char* certification_name(Certification c) {
    return c == Certification::Exact ? "exact" : "lower_bound";
}

bool verify_witness(const Group& g, const Witness& w) {
    if (w.ordering.size() != size_t(g.order() - 1)) return false;
    std::vector<char> seen(g.order(), 0);
    int32_t prod = 0;
    for (int32_t e : w.ordering) {
        if (e <= 0 || e >= g.order() || seen[e]) return false;
        seen[e] = 1;
        prod = g.at(prod, e);
    }
    return prod == w.target;
}

KSetResult kset_exact(const Group& g, KMethod method, const EnginePolicy& pol) {
    if (method != KMethod::SubsetDP && method != KMethod::MeetInMiddle)
        throw Error(ErrorKind::InvalidParam, "exact computation requires SubsetDP or MeetInMiddle");
    check_exact_preconditions(g, pol);

    auto t0 = std::chrono::steady_clock::now();
    KSetResult r;
    r.method = method;
    r.certification = Certification::Exact;
    r.kset = method == KMethod::SubsetDP ? subset_dp(g, pol, r.stats)
                                         : meet_in_middle(g, pol, r.stats);
    annotate(r, g, nullptr);
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

KSetResult kset_sample(const Group& g, uint64_t seed, uint64_t budget,
                       const ElementSet* stop_when_covers, [[maybe_unused]] const EnginePolicy& pol) {
    constexpr uint64_t kChunk = 1024;
    const int32_t order = g.order();

    auto t0 = std::chrono::steady_clock::now();
    KSetResult r;
    r.method = KMethod::Sample;
    r.certification = Certification::LowerBound;
    r.kset = ElementSet(order);

    std::vector<int32_t> base(size_t(order) - 1);
    for (int32_t i = 1; i < order; ++i) base[size_t(i) - 1] = i;

    uint64_t drawn = 0;
    uint64_t chunk_index = 0;
    bool covered = stop_when_covers && stop_when_covers->is_subset_of(r.kset);
    while (drawn < budget && !covered) {
        const uint64_t take = std::min(kChunk, budget - drawn);
        SplitMix64 rng(stream_seed(seed, chunk_index));
        std::vector<int32_t> elems = base; // chunk content depends only on (seed, chunk index)
        for (uint64_t i = 0; i < take; ++i) {
            seeded_shuffle(elems, rng);
            int32_t prod = 0;
            for (int32_t e : elems) prod = g.at(prod, e);
            r.kset.insert(prod);
            // The reversed ordering with every element inverted is itself a
            // valid ordering and realizes the inverse product.
            r.kset.insert(g.inverse(prod));
        }
        drawn += take;
        ++chunk_index;
        if (stop_when_covers && stop_when_covers->is_subset_of(r.kset)) covered = true;
    }

    r.stats.samples = drawn;
    r.stats.states = drawn;
    r.stats.peak_bytes = uint64_t((order + 63) / 64) * 8 + uint64_t(order) * 4;
    r.stats.covered_stop = covered;
    annotate(r, g, stop_when_covers);
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

KSetResult kset_auto(const Group& g, const EnginePolicy& pol) {
    if (g.is_abelian()) {
        auto t0 = std::chrono::steady_clock::now();
        KSetResult r;
        r.method = KMethod::AbelianShortcut;
        r.certification = Certification::Exact;
        // Order of factors is irrelevant, so K is this single product; for
        // odd abelian groups the inverse pairing makes it the identity.
        int32_t prod = 0;
        for (int32_t e = 1; e < g.order(); ++e) prod = g.at(prod, e);
        r.kset = ElementSet::single(g.order(), prod);
        annotate(r, g, nullptr);
        r.stats.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }
    if (g.order() <= pol.exact_limit) return kset_exact(g, KMethod::SubsetDP, pol);

    ElementSet commutant = g.commutator_subgroup();
    KSetResult r = kset_sample(g, pol.seed, pol.sample_budget, &commutant, pol);
    if (r.stats.covered_stop && g.is_odd()) r.stats.conditional_on_containment = true;
    return r;
}

FullProductDp::FullProductDp(const Group& g, const EnginePolicy& pol) : g_(g), m_(g.order() - 1) {
    check_exact_preconditions(g, pol);
    check_memory((uint64_t(1) << m_) * 4, pol);

    const std::vector<uint8_t> col = product_columns(g);
    const int32_t order = g.order();
    dp_.assign(uint64_t(1) << m_, 0);
    dp_[0] = 1;
    for (uint64_t mask = 1; mask < dp_.size(); ++mask) {
        uint32_t acc = 0;
        uint32_t mm = uint32_t(mask);
        while (mm) {
            int x = std::countr_zero(mm);
            mm &= mm - 1;
            acc |= scatter(dp_[mask ^ (uint64_t(1) << x)], col.data() + size_t(x) * order);
        }
        dp_[mask] = acc;
    }
}

bool FullProductDp::in_kset(int32_t target) const {
    return (dp_.back() >> target) & 1;
}

std::optional<Witness> FullProductDp::backtrace(int32_t target) const {
    if (target < 0 || target >= g_.order()) throw Error(ErrorKind::Range, "target out of range");
    if (!in_kset(target)) return std::nullopt;

    Witness w;
    w.target = target;
    uint32_t mask = uint32_t(dp_.size() - 1);
    int32_t t = target;
    while (mask) {
        bool stepped = false;
        uint32_t mm = mask;
        while (mm && !stepped) {
            int x = std::countr_zero(mm);
            mm &= mm - 1;
            uint32_t pm = dp_[mask ^ (uint32_t(1) << x)];
            while (pm) {
                int p = std::countr_zero(pm);
                pm &= pm - 1;
                if (g_.at(p, x + 1) == t) {
                    w.ordering.push_back(x + 1);
                    mask ^= uint32_t(1) << x;
                    t = p;
                    stepped = true;
                    break;
                }
            }
        }
        if (!stepped) throw Error(ErrorKind::Internal, "witness backtrace lost its path");
    }
    std::reverse(w.ordering.begin(), w.ordering.end());
    if (!verify_witness(g_, w)) throw Error(ErrorKind::Internal, "witness failed verification");
    return w;
}

std::optional<Witness> find_witness(const Group& g, int32_t target, const EnginePolicy& pol) {
    FullProductDp dp(g, pol);
    return dp.backtrace(target);
}

} // namespace kset
