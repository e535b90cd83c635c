#include "ramseycat/engine.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>

namespace ramseycat {

std::string to_string(ArrowVariant v) {
    return v == ArrowVariant::embedding ? "embedding" : "structural";
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t rand_below(std::uint64_t& state, std::uint64_t n) {
    return splitmix64(state) % n;
}

void require_engine_ready(const Category& cat, const ArrowQuery& q) {
    if (!cat.all_mono())
        throw std::invalid_argument("engine requires a category whose morphisms are all mono");
    if (q.a >= cat.object_count() || q.b >= cat.object_count() || q.c >= cat.object_count())
        throw std::invalid_argument("arrow query references unknown object");
    if (q.k < 1 || q.t < 1) throw std::invalid_argument("arrow query needs k >= 1 and t >= 1");
}

} // namespace

ArrowDomain build_arrow_domain(const Category& cat, const ArrowQuery& q) {
    ArrowDomain d;
    d.any_w = !cat.hom(q.b, q.c).empty();
    if (q.variant == ArrowVariant::embedding) {
        const auto& dom = cat.hom(q.a, q.c);
        d.size = dom.size();
        std::map<MorId, std::uint32_t> index;
        for (std::size_t i = 0; i < dom.size(); ++i) {
            index[dom[i]] = static_cast<std::uint32_t>(i);
            d.labels.push_back(cat.morphism_name(dom[i]));
        }
        for (MorId w : cat.hom(q.b, q.c)) {
            std::vector<std::uint32_t> tr;
            for (MorId f : cat.hom(q.a, q.b)) tr.push_back(index.at(cat.compose(w, f)));
            std::sort(tr.begin(), tr.end());
            tr.erase(std::unique(tr.begin(), tr.end()), tr.end());
            d.translates.push_back(std::move(tr));
        }
    } else {
        auto classes_ac = subobjects(cat, q.a, q.c);
        d.size = classes_ac.size();
        std::map<MorId, std::uint32_t> class_of;
        for (std::size_t i = 0; i < classes_ac.size(); ++i) {
            d.labels.push_back(cat.morphism_name(classes_ac[i].representative()));
            for (MorId m : classes_ac[i].members) class_of[m] = static_cast<std::uint32_t>(i);
        }
        auto classes_ab = subobjects(cat, q.a, q.b);
        for (MorId w : cat.hom(q.b, q.c)) {
            std::vector<std::uint32_t> tr;
            for (const auto& cls : classes_ab)
                tr.push_back(class_of.at(cat.compose(w, cls.representative())));
            std::sort(tr.begin(), tr.end());
            tr.erase(std::unique(tr.begin(), tr.end()), tr.end());
            d.translates.push_back(std::move(tr));
        }
    }
    return d;
}

bool revalidate_bad_coloring(const Category& cat, const ArrowQuery& q, const BadColoring& coloring) {
    ArrowDomain d = build_arrow_domain(cat, q);
    if (coloring.size() != d.size) return false;
    for (const auto& tr : d.translates) {
        std::set<std::uint16_t> colors;
        for (std::uint32_t idx : tr) colors.insert(coloring[idx]);
        if (colors.size() < q.t + 1) return false;
    }
    return true;
}

namespace {

// Search input: inclusion-minimal deduplicated translate sets. A coloring
// is bad iff every minimal set sees >= t+1 colors; supersets follow.
struct SearchProblem {
    std::size_t domain_size = 0;
    unsigned k_eff = 0;
    unsigned t = 0;
    std::vector<std::vector<std::uint32_t>> constraints;
    std::vector<std::vector<std::uint32_t>> touching; // per element, constraint ids
    std::vector<char> covered;
    std::vector<std::vector<std::uint32_t>> sym; // non-identity domain permutations
};

SearchProblem make_problem(const ArrowDomain& d, unsigned k_eff, unsigned t) {
    SearchProblem p;
    p.domain_size = d.size;
    p.k_eff = k_eff;
    p.t = t;
    std::set<std::vector<std::uint32_t>> unique(d.translates.begin(), d.translates.end());
    std::vector<std::vector<std::uint32_t>> sets(unique.begin(), unique.end());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < sets.size() && minimal; ++j) {
            if (i == j || sets[j].size() >= sets[i].size()) continue;
            minimal = !std::includes(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end());
        }
        if (minimal) p.constraints.push_back(sets[i]);
    }
    p.touching.resize(d.size);
    p.covered.assign(d.size, 0);
    for (std::size_t c = 0; c < p.constraints.size(); ++c) {
        for (std::uint32_t e : p.constraints[c]) {
            p.touching[e].push_back(static_cast<std::uint32_t>(c));
            p.covered[e] = 1;
        }
    }
    return p;
}

// Aut(C) acting on the domain by postcomposition; identity and duplicate
// permutations dropped.
std::vector<std::vector<std::uint32_t>> domain_symmetries(const Category& cat, const ArrowQuery& q) {
    std::vector<std::vector<std::uint32_t>> out;
    std::set<std::vector<std::uint32_t>> seen;
    auto auts = aut(cat, q.c);
    if (q.variant == ArrowVariant::embedding) {
        const auto& dom = cat.hom(q.a, q.c);
        std::map<MorId, std::uint32_t> index;
        for (std::size_t i = 0; i < dom.size(); ++i) index[dom[i]] = static_cast<std::uint32_t>(i);
        for (MorId alpha : auts) {
            std::vector<std::uint32_t> pi(dom.size());
            for (std::size_t i = 0; i < dom.size(); ++i)
                pi[i] = index.at(cat.compose(alpha, dom[i]));
            bool identity = true;
            for (std::size_t i = 0; i < pi.size() && identity; ++i) identity = pi[i] == i;
            if (!identity && seen.insert(pi).second) out.push_back(std::move(pi));
        }
    } else {
        auto classes = subobjects(cat, q.a, q.c);
        std::map<MorId, std::uint32_t> class_of;
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (MorId m : classes[i].members) class_of[m] = static_cast<std::uint32_t>(i);
        for (MorId alpha : auts) {
            std::vector<std::uint32_t> pi(classes.size());
            for (std::size_t i = 0; i < classes.size(); ++i)
                pi[i] = class_of.at(cat.compose(alpha, classes[i].representative()));
            bool identity = true;
            for (std::size_t i = 0; i < pi.size() && identity; ++i) identity = pi[i] == i;
            if (!identity && seen.insert(pi).second) out.push_back(std::move(pi));
        }
    }
    return out;
}

// One depth-first bad-coloring search over a fixed branch order. Colors are
// restricted to canonical form along the branch order (a fresh color only
// after all smaller ones appeared), which is sound because badness is
// invariant under color permutation.
struct Dfs {
    const SearchProblem& p;
    std::vector<std::uint32_t> order; // covered elements in branch order
    std::vector<int> color;
    std::vector<std::vector<std::uint16_t>> ccount;
    std::vector<std::uint32_t> distinct, uncolored;
    std::size_t satisfied = 0;
    std::uint64_t nodes = 0;
    const std::atomic<bool>* stop = nullptr;
    bool found = false;
    BadColoring result;

    explicit Dfs(const SearchProblem& problem, std::vector<std::uint32_t> branch_order)
        : p(problem), order(std::move(branch_order)), color(problem.domain_size, -1) {
        ccount.resize(p.constraints.size());
        for (std::size_t c = 0; c < p.constraints.size(); ++c)
            ccount[c].assign(p.k_eff, 0);
        distinct.assign(p.constraints.size(), 0);
        uncolored.resize(p.constraints.size());
        for (std::size_t c = 0; c < p.constraints.size(); ++c)
            uncolored[c] = static_cast<std::uint32_t>(p.constraints[c].size());
    }

    // Returns false when some constraint can no longer reach t+1 colors.
    bool assign(std::uint32_t e, int c) {
        color[e] = c;
        bool ok = true;
        for (std::uint32_t cons : p.touching[e]) {
            --uncolored[cons];
            if (++ccount[cons][c] == 1) {
                if (++distinct[cons] == p.t + 1) ++satisfied;
            }
            if (distinct[cons] + uncolored[cons] <= p.t) ok = false;
        }
        return ok;
    }

    void unassign(std::uint32_t e) {
        int c = color[e];
        for (std::uint32_t cons : p.touching[e]) {
            ++uncolored[cons];
            if (--ccount[cons][c] == 0) {
                if (distinct[cons]-- == p.t + 1) --satisfied;
            }
        }
        color[e] = -1;
    }

    bool symmetry_prunes(std::size_t depth) {
        for (const auto& pi : p.sym) {
            bool defined = true;
            int cmp = 0; // -1 smaller, 0 equal so far, 1 larger
            for (std::size_t i = 0; i <= depth; ++i) {
                int mapped = color[pi[order[i]]];
                if (mapped < 0) { defined = false; break; }
                if (cmp == 0) {
                    if (mapped < color[order[i]]) cmp = -1;
                    else if (mapped > color[order[i]]) cmp = 1;
                }
            }
            if (defined && cmp == -1) return true;
        }
        return false;
    }

    void emit_current() {
        found = true;
        result.assign(p.domain_size, 0);
        for (std::size_t e = 0; e < p.domain_size; ++e)
            result[e] = color[e] >= 0 ? static_cast<std::uint16_t>(color[e]) : 0;
    }

    // used = number of distinct colors already introduced along the branch.
    void run(std::size_t depth, unsigned used) {
        if (found || (stop && stop->load(std::memory_order_relaxed))) return;
        ++nodes;
        if (satisfied == p.constraints.size()) {
            emit_current();
            return;
        }
        if (depth == order.size()) {
            // No violation on the way down and everything colored: bad.
            emit_current();
            return;
        }
        std::uint32_t e = order[depth];
        unsigned limit = std::min(used + 1, p.k_eff);
        for (unsigned c = 0; c < limit; ++c) {
            bool ok = assign(e, static_cast<int>(c));
            if (ok && !p.sym.empty() && symmetry_prunes(depth)) ok = false;
            if (ok) run(depth + 1, std::max(used, c + 1));
            unassign(e);
            if (found || (stop && stop->load(std::memory_order_relaxed))) return;
        }
    }
};

std::vector<std::uint32_t> existence_order(const SearchProblem& p) {
    std::vector<std::uint32_t> order;
    for (std::uint32_t e = 0; e < p.domain_size; ++e)
        if (p.covered[e]) order.push_back(e);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        return p.touching[x].size() > p.touching[y].size();
    });
    return order;
}

std::vector<std::uint32_t> canonical_order(const SearchProblem& p) {
    std::vector<std::uint32_t> order;
    for (std::uint32_t e = 0; e < p.domain_size; ++e)
        if (p.covered[e]) order.push_back(e);
    return order;
}

struct ExistenceOutcome {
    bool found = false;
    std::uint64_t nodes = 0;
};

// Partial assignments of the first frontier_depth branch elements, produced
// with the same pruning the full search uses.
void build_frontier(Dfs& dfs, std::size_t depth, unsigned used, std::size_t frontier_depth,
                    std::vector<std::pair<std::vector<int>, unsigned>>& out) {
    if (depth == frontier_depth || depth == dfs.order.size()) {
        std::vector<int> prefix(depth);
        for (std::size_t i = 0; i < depth; ++i) prefix[i] = dfs.color[dfs.order[i]];
        out.push_back({std::move(prefix), used});
        return;
    }
    std::uint32_t e = dfs.order[depth];
    unsigned limit = std::min(used + 1, dfs.p.k_eff);
    for (unsigned c = 0; c < limit; ++c) {
        bool ok = dfs.assign(e, static_cast<int>(c));
        if (ok && !dfs.p.sym.empty() && dfs.symmetry_prunes(depth)) ok = false;
        if (ok) build_frontier(dfs, depth + 1, std::max(used, c + 1), frontier_depth, out);
        dfs.unassign(e);
    }
}

ExistenceOutcome existence_search(const SearchProblem& p, unsigned workers) {
    ExistenceOutcome outcome;
    auto order = existence_order(p);
    if (workers <= 1 || order.size() < 8) {
        Dfs dfs(p, order);
        dfs.run(0, 0);
        outcome.found = dfs.found;
        outcome.nodes = dfs.nodes;
        return outcome;
    }
    std::size_t frontier_depth = std::min<std::size_t>(order.size(), 6);
    std::vector<std::pair<std::vector<int>, unsigned>> frontier;
    {
        Dfs seed(p, order);
        build_frontier(seed, 0, 0, frontier_depth, frontier);
        outcome.nodes += seed.nodes;
    }
    std::atomic<bool> stop{false};
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> found{false};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= frontier.size() || stop.load()) return;
            Dfs dfs(p, order);
            dfs.stop = &stop;
            const auto& [prefix, used] = frontier[i];
            bool valid = true;
            for (std::size_t d = 0; d < prefix.size() && valid; ++d)
                valid = dfs.assign(order[d], prefix[d]);
            if (valid) dfs.run(prefix.size(), used);
            nodes.fetch_add(dfs.nodes);
            if (dfs.found) {
                found.store(true);
                stop.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    outcome.found = found.load();
    outcome.nodes += nodes.load();
    return outcome;
}

// Lexicographically least bad coloring: identity branch order, uncovered
// elements pinned to color 0, colors tried ascending.
BadColoring canonical_certificate(const SearchProblem& p, std::uint64_t& nodes_out) {
    Dfs dfs(p, canonical_order(p));
    dfs.run(0, 0);
    nodes_out = dfs.nodes;
    if (!dfs.found) throw std::logic_error("certificate search lost a known bad coloring");
    return dfs.result;
}

} // namespace

ArrowVerdict check_arrow(const Category& cat, const ArrowQuery& q, const ArrowOptions& options) {
    require_engine_ready(cat, q);
    ArrowVerdict v;
    v.query = q;
    v.symmetry_used = options.symmetry;
    ArrowDomain d = build_arrow_domain(cat, q);
    v.domain_size = d.size;
    v.k_effective = static_cast<unsigned>(std::min<std::size_t>(q.k, d.size));

    if (!d.any_w) {
        // No morphism B -> C at all: the arrow fails for any coloring, and
        // with an empty domain the unique empty coloring already refutes it.
        v.holds = false;
        v.reason = "no-w";
        v.coloring.resize(d.size);
        for (std::size_t i = 0; i < d.size; ++i)
            v.coloring[i] = static_cast<std::uint16_t>(std::min<std::size_t>(i, v.k_effective - 1));
        if (v.k_effective == 0) v.coloring.clear();
        return v;
    }
    if (d.size == 0) {
        v.holds = true;
        v.reason = "empty-domain";
        return v;
    }
    if (v.k_effective <= q.t) {
        v.holds = true;
        v.reason = "trivial";
        return v;
    }
    std::size_t min_translate = d.size + 1;
    for (const auto& tr : d.translates) min_translate = std::min(min_translate, tr.size());
    if (min_translate <= q.t) {
        v.holds = true;
        v.reason = "trivial";
        return v;
    }

    SearchProblem p = make_problem(d, v.k_effective, q.t);
    if (options.symmetry) p.sym = domain_symmetries(cat, q);
    ExistenceOutcome outcome = existence_search(p, options.workers);
    if (!outcome.found) {
        v.holds = true;
        v.reason = "exhausted";
        v.nodes = outcome.nodes;
        return v;
    }
    v.holds = false;
    v.reason = "bad-coloring";
    v.coloring = canonical_certificate(p, v.nodes);
    return v;
}

ArrowVerdict check_arrow_oracle(const Category& cat, const ArrowQuery& q, const OracleCaps& caps) {
    require_engine_ready(cat, q);
    ArrowDomain d = build_arrow_domain(cat, q);
    if (d.size > caps.max_domain) throw std::runtime_error("oracle cap exceeded: domain too large");
    std::uint64_t work = 1;
    for (std::size_t i = 0; i < d.size; ++i) {
        if (work > caps.max_work / std::max(1u, q.k))
            throw std::runtime_error("oracle cap exceeded: too many colorings");
        work *= q.k;
    }

    ArrowVerdict v;
    v.query = q;
    v.reason = "oracle";
    v.domain_size = d.size;
    v.k_effective = q.k;

    const std::size_t w_count = d.translates.size();
    std::vector<std::vector<std::uint32_t>> touching(d.size);
    for (std::size_t w = 0; w < w_count; ++w)
        for (std::uint32_t e : d.translates[w]) touching[e].push_back(static_cast<std::uint32_t>(w));

    std::vector<std::vector<std::uint32_t>> count(w_count);
    for (auto& c : count) c.assign(q.k, 0);
    std::vector<std::uint32_t> distinct(w_count, 0);
    // Number of w whose translate currently shows <= t colors; a coloring is
    // bad exactly when this hits zero at a leaf.
    std::size_t low = w_count;
    std::vector<std::uint16_t> coloring(d.size, 0);
    bool bad_found = false;

    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (bad_found) return;
        if (pos == d.size) {
            if (low == 0) {
                bad_found = true;
                v.coloring = coloring;
            }
            return;
        }
        for (unsigned c = 0; c < q.k && !bad_found; ++c) {
            coloring[pos] = static_cast<std::uint16_t>(c);
            for (std::uint32_t w : touching[pos])
                if (++count[w][c] == 1 && ++distinct[w] == q.t + 1) --low;
            rec(pos + 1);
            for (std::uint32_t w : touching[pos])
                if (--count[w][c] == 0 && distinct[w]-- == q.t + 1) ++low;
        }
    };
    rec(0);
    v.holds = !bad_found;
    if (bad_found) v.reason = "oracle";
    return v;
}

namespace {

constexpr unsigned kNoT = static_cast<unsigned>(-1);

std::size_t domain_size_of(const Category& cat, ObjId a, ObjId c, ArrowVariant variant) {
    if (variant == ArrowVariant::embedding) return cat.hom(a, c).size();
    return subobjects(cat, a, c).size();
}

// Least t making the arrow hold, or kNoT when no t works (exactly when
// hom(B,C) is empty: no w can ever exist).
unsigned t_min_for(const Category& cat, ObjId a, ObjId b, ObjId c, ArrowVariant variant,
                   unsigned k, const ArrowOptions& options) {
    if (cat.hom(b, c).empty()) return kNoT;
    std::size_t dac = domain_size_of(cat, a, c, variant);
    unsigned cap = static_cast<unsigned>(std::max<std::size_t>(dac, 1));
    for (unsigned t = 1; t <= cap; ++t) {
        ArrowQuery q{variant, a, b, c, k, t};
        if (check_arrow(cat, q, options).holds) return t;
    }
    throw std::logic_error("arrow failed beyond its trivial threshold");
}

} // namespace

DegreeReport degree_exact_finite(const Category& cat, ObjId a, ArrowVariant variant,
                                 const ArrowOptions& options) {
    if (!cat.all_mono())
        throw std::invalid_argument("engine requires a category whose morphisms are all mono");
    if (a >= cat.object_count()) throw std::invalid_argument("unknown object");
    const std::size_t oc = cat.object_count();
    DegreeReport report;
    report.variant = variant;
    report.exact = true;

    std::size_t k_star = 1;
    for (ObjId c = 0; c < oc; ++c)
        k_star = std::max(k_star, domain_size_of(cat, a, c, variant));
    report.k_star = static_cast<unsigned>(k_star);

    std::vector<std::vector<unsigned>> t_min(oc, std::vector<unsigned>(oc, kNoT));
    unsigned value = 1;
    ObjId blocking_b = 0;
    for (ObjId b = 0; b < oc; ++b) {
        unsigned best = kNoT;
        for (ObjId c = 0; c < oc; ++c) {
            t_min[b][c] = t_min_for(cat, a, b, c, variant, report.k_star, options);
            best = std::min(best, t_min[b][c]);
        }
        if (best == kNoT) throw std::logic_error("no witness object; C = B should always work");
        if (best > value) {
            value = best;
            blocking_b = b;
        }
    }

    report.lower = ExtendedNat(value);
    report.upper = ExtendedNat(value);
    report.lower_certified = true;
    for (ObjId b = 0; b < oc; ++b) {
        for (ObjId c = 0; c < oc; ++c) {
            if (t_min[b][c] <= value) {
                report.upper_witnesses.push_back({report.k_star, b, c});
                break;
            }
        }
    }
    if (value >= 2) {
        DegreeLowerCert cert;
        cert.k = report.k_star;
        cert.b = blocking_b;
        for (ObjId c = 0; c < oc; ++c) {
            ArrowQuery q{variant, a, blocking_b, c, report.k_star, value - 1};
            ArrowVerdict v = check_arrow(cat, q, options);
            if (v.holds) throw std::logic_error("lower-bound witness B unexpectedly satisfied");
            cert.colorings[c] = v.coloring;
        }
        report.lower_cert = std::move(cert);
    }
    return report;
}

DegreeReport degree_bounds(const Category& view, ObjId a, ArrowVariant variant,
                           const DegreeBudget& budget, const ArrowOptions& options) {
    if (a >= view.object_count()) throw std::invalid_argument("unknown object");
    DegreeReport report;
    report.variant = variant;
    report.exact = false;

    const ObjId max_b = static_cast<ObjId>(
        std::min<std::size_t>(budget.max_b_index, view.object_count() - 1));
    const ObjId max_c = static_cast<ObjId>(
        std::min<std::size_t>(budget.max_c_index, view.object_count() - 1));
    unsigned t_cap = 1;
    for (ObjId c = 0; c <= max_c; ++c)
        t_cap = std::max(t_cap, static_cast<unsigned>(domain_size_of(view, a, c, variant)));

    unsigned lower_evidence = 1;
    bool some_unwitnessed = false;
    unsigned upper_evidence = 1;
    std::optional<std::pair<unsigned, ObjId>> lower_pair;

    for (unsigned k = 1; k <= budget.max_k; ++k) {
        for (ObjId b = 0; b <= max_b; ++b) {
            unsigned witnessed_t = kNoT;
            ObjId witness_c = 0;
            for (unsigned t = 1; t <= t_cap && witnessed_t == kNoT; ++t) {
                for (ObjId c = 0; c <= max_c; ++c) {
                    ArrowQuery q{variant, a, b, c, k, t};
                    if (check_arrow(view, q, options).holds) {
                        witnessed_t = t;
                        witness_c = c;
                        break;
                    }
                }
            }
            if (witnessed_t == kNoT) {
                some_unwitnessed = true;
                continue;
            }
            report.upper_witnesses.push_back({k, b, witness_c});
            upper_evidence = std::max(upper_evidence, witnessed_t);
            if (witnessed_t > lower_evidence || !lower_pair) {
                lower_evidence = std::max(lower_evidence, witnessed_t);
                lower_pair = {k, b};
            }
        }
    }
    report.lower = ExtendedNat(lower_evidence);
    report.upper = some_unwitnessed ? ExtendedNat::infinity() : ExtendedNat(upper_evidence);
    report.lower_certified =
        view.complete() && max_c + 1 == view.object_count() && !some_unwitnessed;
    if (lower_pair && lower_evidence >= 2) {
        DegreeLowerCert cert;
        cert.k = lower_pair->first;
        cert.b = lower_pair->second;
        for (ObjId c = 0; c <= max_c; ++c) {
            ArrowQuery q{variant, a, cert.b, c, cert.k, lower_evidence - 1};
            ArrowVerdict v = check_arrow(view, q, options);
            if (v.holds) throw std::logic_error("budgeted lower evidence is inconsistent");
            cert.colorings[c] = v.coloring;
        }
        report.lower_cert = std::move(cert);
    }
    return report;
}

MultiplicativityReport verify_multiplicativity(const Category& c1, const Category& c2, ObjId a1,
                                               ObjId a2, const ArrowOptions& options) {
    MultiplicativityReport report;
    report.t1 = degree_exact_finite(c1, a1, ArrowVariant::embedding, options).value();
    report.t2 = degree_exact_finite(c2, a2, ArrowVariant::embedding, options).value();
    report.st1 = degree_exact_finite(c1, a1, ArrowVariant::structural, options).value();
    report.st2 = degree_exact_finite(c2, a2, ArrowVariant::structural, options).value();
    report.aut1 = aut(c1, a1).size();
    report.aut2 = aut(c2, a2).size();

    ProductCategory prod = product(c1, c2);
    ObjId pa = *prod.object_of(a1, a2);
    report.t_product = degree_exact_finite(prod.category, pa, ArrowVariant::embedding, options).value();
    report.st_product =
        degree_exact_finite(prod.category, pa, ArrowVariant::structural, options).value();
    report.aut_product = aut(prod.category, pa).size();

    report.ok = report.t_product == report.t1 * report.t2 &&
                report.st_product == report.st1 * report.st2 &&
                report.aut_product == report.aut1 * report.aut2;
    return report;
}

AutFactorReport verify_aut_factor(const Category& cat, ObjId a, const ArrowOptions& options) {
    AutFactorReport report;
    report.t = degree_exact_finite(cat, a, ArrowVariant::embedding, options).value();
    report.t_structural = degree_exact_finite(cat, a, ArrowVariant::structural, options).value();
    report.aut_size = aut(cat, a).size();
    report.ok = report.t == ExtendedNat(report.aut_size) * report.t_structural;
    return report;
}

SuiteReport verify_monotonicity(const Category& cat, std::size_t samples, std::uint64_t seed,
                                const ArrowOptions& options) {
    SuiteReport report;
    std::uint64_t state = seed;
    const std::size_t oc = cat.object_count();
    std::size_t guard = 0;
    while (report.checks < samples && guard < samples * 200) {
        ++guard;
        ArrowQuery q;
        q.variant = (splitmix64(state) & 1) ? ArrowVariant::embedding : ArrowVariant::structural;
        q.a = static_cast<ObjId>(rand_below(state, oc));
        q.b = static_cast<ObjId>(rand_below(state, oc));
        q.c = static_cast<ObjId>(rand_below(state, oc));
        q.k = 1 + static_cast<unsigned>(rand_below(state, 3));
        q.t = 1 + static_cast<unsigned>(rand_below(state, 2));
        ArrowVerdict v = check_arrow(cat, q, options);
        if (!v.holds) continue;
        // Clause (a)/(b): replace B by any D with D -> B.
        std::vector<ObjId> ds;
        for (ObjId d = 0; d < oc; ++d)
            if (!cat.hom(d, q.b).empty()) ds.push_back(d);
        if (!ds.empty()) {
            ObjId d = ds[rand_below(state, ds.size())];
            ArrowQuery q2 = q;
            q2.b = d;
            if (!check_arrow(cat, q2, options).holds)
                report.fail("monotonicity clause (a/b) violated at " + to_string(q.variant) + " A=" +
                            cat.object_name(q.a) + " B=" + cat.object_name(q.b) + " D=" +
                            cat.object_name(d) + " C=" + cat.object_name(q.c));
            ++report.checks;
        }
        // Clause (c)/(d): replace C by any D with C -> D.
        ds.clear();
        for (ObjId d = 0; d < oc; ++d)
            if (!cat.hom(q.c, d).empty()) ds.push_back(d);
        if (!ds.empty() && report.checks < samples) {
            ObjId d = ds[rand_below(state, ds.size())];
            ArrowQuery q2 = q;
            q2.c = d;
            if (!check_arrow(cat, q2, options).holds)
                report.fail("monotonicity clause (c/d) violated at " + to_string(q.variant) + " A=" +
                            cat.object_name(q.a) + " B=" + cat.object_name(q.b) + " C=" +
                            cat.object_name(q.c) + " D=" + cat.object_name(d));
            ++report.checks;
        }
    }
    if (report.checks < samples)
        report.fail("sampling exhausted before reaching the requested check count");
    return report;
}

SuiteReport verify_full_cofinal_inclusion(const Category& cat, const std::vector<ObjId>& sub_objects,
                                          const ArrowOptions& options) {
    SuiteReport report;
    FullSubcategory sub = full_subcategory(cat, sub_objects);
    FunctorProps props = functor_props(sub.category, cat, sub.inclusion);
    if (!props.is_functor || !props.is_full || !props.is_faithful ||
        !is_cofinal_object_set(cat, sub_objects)) {
        report.hypothesis_ok = false;
        return report;
    }
    for (ObjId s = 0; s < sub.category.object_count(); ++s) {
        ObjId ambient = sub.object_map[s];
        for (ArrowVariant variant : {ArrowVariant::embedding, ArrowVariant::structural}) {
            ExtendedNat inner = degree_exact_finite(sub.category, s, variant, options).value();
            ExtendedNat outer = degree_exact_finite(cat, ambient, variant, options).value();
            ++report.checks;
            if (inner != outer)
                report.fail("degree differs through full cofinal inclusion at " +
                            cat.object_name(ambient) + " (" + to_string(variant) + "): " +
                            inner.str() + " vs " + outer.str());
        }
    }
    return report;
}

SuiteReport verify_functor_arrow_transport(const Category& src, const Category& dst,
                                           const FunctorData& f, std::size_t samples,
                                           std::uint64_t seed, const ArrowOptions& options) {
    SuiteReport report;
    FunctorProps props = functor_props(src, dst, f);
    if (!props.is_functor || !props.is_full) {
        report.hypothesis_ok = false;
        return report;
    }
    std::uint64_t state = seed;
    const std::size_t oc = src.object_count();
    std::size_t guard = 0;
    while (report.checks < samples && guard < samples * 100) {
        ++guard;
        ArrowQuery q;
        bool structural = (splitmix64(state) & 1) != 0;
        if (structural && !props.preserves_aut_groups) structural = false;
        q.variant = structural ? ArrowVariant::structural : ArrowVariant::embedding;
        q.a = static_cast<ObjId>(rand_below(state, oc));
        q.b = static_cast<ObjId>(rand_below(state, oc));
        q.c = static_cast<ObjId>(rand_below(state, oc));
        q.k = 1 + static_cast<unsigned>(rand_below(state, 3));
        q.t = 1 + static_cast<unsigned>(rand_below(state, 2));
        ArrowQuery img = q;
        img.a = f.object_map[q.a];
        img.b = f.object_map[q.b];
        img.c = f.object_map[q.c];
        bool source_holds = check_arrow(src, q, options).holds;
        bool image_holds = check_arrow(dst, img, options).holds;
        ++report.checks;
        if (source_holds && !image_holds)
            report.fail("full functor failed to transport a holding arrow");
        if (props.is_faithful && !source_holds && image_holds)
            report.fail("full faithful functor transported a failing arrow");
    }
    return report;
}

SuiteReport verify_grothendieck_transport(const Category& cat, const SetValuedFunctor& h,
                                          const ArrowOptions& options) {
    SuiteReport report;
    GrothendieckCategory g = grothendieck(cat, h);
    if (is_directed(g.category).answer != TriBool::yes) {
        report.hypothesis_ok = false;
        return report;
    }
    // Cocone-transport hypothesis on generated diagrams: an image cocone in
    // the base must force one upstairs. Also checks the per-component
    // element agreement of every image cocone found.
    for (ObjId bottom = 0; bottom < g.category.object_count(); ++bottom) {
        for (ObjId top = 0; top < g.category.object_count(); ++top) {
            const auto& hom_bt = g.category.hom(bottom, top);
            if (hom_bt.empty()) continue;
            int b_elem = g.object_pairs[top].second;
            for (std::size_t n1 = 0; n1 < hom_bt.size(); ++n1) {
                for (std::size_t n2 = n1; n2 < hom_bt.size(); ++n2) {
                    for (int tops = 1; tops <= 2; ++tops) {
                        BinaryDiagram up;
                        up.bottom = bottom;
                        up.top = top;
                        up.top_count = tops;
                        up.bottoms.push_back({hom_bt[n1], 0, hom_bt[n2], tops - 1});
                        BinaryDiagram down;
                        down.bottom = g.object_pairs[bottom].first;
                        down.top = g.object_pairs[top].first;
                        down.top_count = tops;
                        down.bottoms.push_back(
                            {g.morphism_base[hom_bt[n1]], 0, g.morphism_base[hom_bt[n2]], tops - 1});
                        CoconeResult image = find_compatible_cocone(cat, down);
                        ++report.checks;
                        if (image.answer == TriBool::yes) {
                            for (const auto& component : connected_components(down)) {
                                int elem = -1;
                                for (int i : component) {
                                    int v = h.maps[image.cocone->legs[i]][b_elem];
                                    if (elem == -1) elem = v;
                                    if (v != elem)
                                        report.fail("cocone element agreement fails on a component");
                                }
                            }
                            CoconeResult lifted = find_compatible_cocone(g.category, up);
                            if (lifted.answer != TriBool::yes)
                                report.fail("image cocone exists but diagram has none upstairs");
                        }
                    }
                }
            }
        }
    }
    // The degree inequality itself.
    std::vector<std::optional<ExtendedNat>> base_degree(cat.object_count());
    for (ObjId go = 0; go < g.category.object_count(); ++go) {
        ObjId base = g.object_pairs[go].first;
        if (!base_degree[base])
            base_degree[base] = degree_exact_finite(cat, base, ArrowVariant::embedding, options).value();
        ExtendedNat upstairs =
            degree_exact_finite(g.category, go, ArrowVariant::embedding, options).value();
        ++report.checks;
        if (!(upstairs <= *base_degree[base]))
            report.fail("t_G(" + g.category.object_name(go) + ") = " + upstairs.str() + " > t_C(" +
                        cat.object_name(base) + ") = " + base_degree[base]->str());
    }
    return report;
}

SuiteReport verify_slice_transport(const Category& cat, ObjId x, const ArrowOptions& options) {
    SuiteReport report;
    if (has_amalgamation(cat).answer != TriBool::yes) {
        report.hypothesis_ok = false;
        return report;
    }
    SliceCategory s = slice(cat, x);
    std::vector<std::optional<ExtendedNat>> base_degree(cat.object_count());
    for (ObjId so = 0; so < s.category.object_count(); ++so) {
        ObjId base = s.object_pairs[so].second;
        if (!base_degree[base])
            base_degree[base] = degree_exact_finite(cat, base, ArrowVariant::embedding, options).value();
        ExtendedNat upstairs =
            degree_exact_finite(s.category, so, ArrowVariant::embedding, options).value();
        ++report.checks;
        if (!(upstairs <= *base_degree[base]))
            report.fail("t_slice(" + s.category.object_name(so) + ") = " + upstairs.str() +
                        " > t_C(" + cat.object_name(base) + ") = " + base_degree[base]->str());
    }
    return report;
}

SuiteReport verify_rp_implies_ap(const std::vector<Category>& cats, const ArrowOptions& options) {
    SuiteReport report;
    std::size_t applicable = 0;
    for (std::size_t i = 0; i < cats.size(); ++i) {
        const Category& cat = cats[i];
        if (!cat.all_mono()) continue;
        if (is_directed(cat).answer != TriBool::yes) continue;
        bool all_degree_one = true;
        for (ObjId a = 0; a < cat.object_count() && all_degree_one; ++a)
            all_degree_one =
                degree_exact_finite(cat, a, ArrowVariant::embedding, options).value() == ExtendedNat(1);
        if (!all_degree_one) continue;
        ++applicable;
        ++report.checks;
        if (has_amalgamation(cat).answer != TriBool::yes)
            report.fail("directed category with embedding Ramsey property lacks amalgamation (instance " +
                        std::to_string(i) + ")");
    }
    report.notes.push_back("instances with the hypothesis: " + std::to_string(applicable) + " of " +
                           std::to_string(cats.size()));
    return report;
}

} // namespace ramseycat
