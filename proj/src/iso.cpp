#include "ddgraph/iso.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <thread>

namespace ddg {

std::string Certificate::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(8 + bits.size() * 16);
    for (int s = 28; s >= 0; s -= 4) out.push_back(digits[(n >> s) & 15]);
    for (std::uint64_t w : bits)
        for (int s = 60; s >= 0; s -= 4) out.push_back(digits[(w >> s) & 15]);
    return out;
}

namespace {

constexpr std::uint32_t kIndivMark = 0xffffffffu;
constexpr std::uint32_t kSplitMark = 0xfffffffeu;

struct Searcher {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> adj;  // n rows

    // partition: order holds vertices, cells are contiguous runs
    struct Part {
        std::vector<int> order;
        std::vector<int> start;  // ascending cell starts, sentinel n at back
    };

    std::vector<std::uint32_t> trace;
    std::vector<std::uint32_t> best_trace;
    std::vector<std::uint64_t> best_cert;
    std::vector<int> best_perm;
    bool have_best = false;

    // orbit union-find fed by automorphisms discovered at tying leaves; used
    // to skip root branches whose outcome is forced by an earlier branch
    std::vector<int> orbit;
    std::vector<int> tried_roots;
    int cur_root = -1;

    int find(int x) {
        while (orbit[x] != x) x = orbit[x] = orbit[orbit[x]];
        return x;
    }

    bool root_redundant(int v) {
        for (int t : tried_roots)
            if (find(t) == find(v)) return true;
        return false;
    }

    // lexicographic standing of `trace` against `best_trace`
    enum Cmp { EQUAL, BETTER };

    bool push(std::uint32_t v, Cmp& cmp) {  // false = prune this subtree
        if (have_best && cmp == EQUAL) {
            if (trace.size() >= best_trace.size()) return false;  // longer = greater
            std::uint32_t b = best_trace[trace.size()];
            if (v > b) return false;
            if (v < b) cmp = BETTER;
        }
        trace.push_back(v);
        return true;
    }

    int neighbor_count(int v, const std::uint64_t* mask) const {
        const std::uint64_t* r = adj.data() + (std::size_t)v * words;
        int c = 0;
        for (int w = 0; w < words; ++w) c += std::popcount(r[w] & mask[w]);
        return c;
    }

    // returns false when the trace went above best (prune)
    bool refine(Part& p, Cmp& cmp) {
        std::vector<std::uint64_t> mask(words);
        std::vector<int> cnt(n), buf(n);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t ci = 0; ci + 1 < p.start.size(); ++ci) {
                std::fill(mask.begin(), mask.end(), 0);
                for (int k = p.start[ci]; k < p.start[ci + 1]; ++k)
                    mask[p.order[k] / 64] |= 1ull << (p.order[k] % 64);
                // split every other cell by edge count into cell ci
                for (std::size_t cj = 0; cj + 1 < p.start.size(); ++cj) {
                    int lo = p.start[cj], hi = p.start[cj + 1];
                    if (hi - lo < 2) continue;
                    int first = neighbor_count(p.order[lo], mask.data());
                    bool uniform = true;
                    for (int k = lo; k < hi; ++k) {
                        cnt[p.order[k]] = neighbor_count(p.order[k], mask.data());
                        if (cnt[p.order[k]] != first) uniform = false;
                    }
                    if (uniform) continue;
                    std::copy(p.order.begin() + lo, p.order.begin() + hi, buf.begin());
                    std::stable_sort(buf.begin(), buf.begin() + (hi - lo),
                                     [&](int a, int b) { return cnt[a] < cnt[b]; });
                    std::copy(buf.begin(), buf.begin() + (hi - lo), p.order.begin() + lo);
                    // record the split shape; everything pushed is iso-invariant
                    if (!push(kSplitMark, cmp)) return false;
                    if (!push((std::uint32_t)ci, cmp)) return false;
                    if (!push((std::uint32_t)cj, cmp)) return false;
                    std::vector<int> newstarts;
                    for (int k = lo + 1; k < hi; ++k)
                        if (cnt[p.order[k]] != cnt[p.order[k - 1]]) newstarts.push_back(k);
                    if (!push((std::uint32_t)newstarts.size() + 1, cmp)) return false;
                    int prev = lo;
                    for (std::size_t pi = 0; pi <= newstarts.size(); ++pi) {
                        int end = pi < newstarts.size() ? newstarts[pi] : hi;
                        if (!push((std::uint32_t)cnt[p.order[prev]], cmp)) return false;
                        if (!push((std::uint32_t)(end - prev), cmp)) return false;
                        prev = end;
                    }
                    p.start.insert(p.start.begin() + cj + 1, newstarts.begin(), newstarts.end());
                    changed = true;
                }
            }
        }
        return true;
    }

    std::vector<std::uint64_t> leaf_cert(const Part& p) const {
        std::vector<std::uint64_t> cert(((std::size_t)n * (n - 1) / 2 + 63) / 64, 0);
        std::size_t bit = 0;
        for (int i = 0; i < n; ++i) {
            const std::uint64_t* ri = adj.data() + (std::size_t)p.order[i] * words;
            for (int j = i + 1; j < n; ++j, ++bit) {
                int v = p.order[j];
                if ((ri[v / 64] >> (v % 64)) & 1)
                    cert[bit / 64] |= 1ull << (63 - bit % 64);
            }
        }
        return cert;
    }

    // returns true when the enclosing root branch is provably redundant
    bool search(const Part& p, Cmp cmp, int depth) {
        // find first largest non-singleton cell
        int target = -1, tsize = 1;
        for (std::size_t ci = 0; ci + 1 < p.start.size(); ++ci) {
            int sz = p.start[ci + 1] - p.start[ci];
            if (sz > tsize) {
                tsize = sz;
                target = (int)ci;
            }
        }
        if (target < 0) {  // discrete: a leaf
            std::vector<std::uint64_t> cert = leaf_cert(p);
            bool take;
            if (!have_best || cmp == BETTER) take = true;
            else if (trace.size() < best_trace.size()) take = true;  // shorter = smaller
            else take = cert < best_cert;
            if (take) {
                best_trace = trace;
                best_cert = std::move(cert);
                best_perm = p.order;
                have_best = true;
                return false;
            }
            if (trace.size() == best_trace.size() && cert == best_cert) {
                // two orderings with the same canonical bits: rank-by-rank
                // alignment of their permutations is an automorphism
                for (int r = 0; r < n; ++r) {
                    int a = find(best_perm[r]), b = find(p.order[r]);
                    if (a != b) orbit[a] = b;
                }
                return cur_root >= 0 && root_redundant(cur_root);
            }
            return false;
        }

        std::size_t mark = trace.size();
        std::vector<int> members(p.order.begin() + p.start[target],
                                 p.order.begin() + p.start[target + 1]);
        std::sort(members.begin(), members.end());
        for (int v : members) {
            if (depth == 0) {
                if (root_redundant(v)) continue;
                cur_root = v;
            }
            bool abort = false;
            Cmp c = cmp;
            trace.resize(mark);
            if (push(kIndivMark, c) && push((std::uint32_t)target, c)) {
                Part child = p;
                // pull v to the front of its cell, making it a singleton cell
                auto it = std::find(child.order.begin() + p.start[target],
                                    child.order.begin() + p.start[target + 1], v);
                std::rotate(child.order.begin() + p.start[target], it, it + 1);
                child.start.insert(child.start.begin() + target + 1, p.start[target] + 1);
                if (refine(child, c)) abort = search(child, c, depth + 1);
            }
            if (depth == 0) tried_roots.push_back(v);
            else if (abort) {
                trace.resize(mark);
                return true;
            }
        }
        trace.resize(mark);
        return false;
    }
};

}  // namespace

Certificate canonical_form(const Graph& g) {
    require(g.n() <= kMaxIsoN, "TooLarge",
            "canonical form capped at " + std::to_string(kMaxIsoN) + " vertices");
    Certificate out;
    out.n = g.n();
    if (g.n() == 0) return out;

    Searcher s;
    s.n = g.n();
    s.words = (g.n() + 63) / 64;
    s.adj.assign((std::size_t)s.n * s.words, 0);
    for (int u = 0; u < s.n; ++u)
        for (int v = 0; v < s.n; ++v)
            if (g.edge(u, v)) s.adj[(std::size_t)u * s.words + v / 64] |= 1ull << (v % 64);

    Searcher::Part root;
    root.order.resize(s.n);
    for (int i = 0; i < s.n; ++i) root.order[i] = i;
    root.start = {0, s.n};
    s.orbit.resize(s.n);
    for (int i = 0; i < s.n; ++i) s.orbit[i] = i;
    Searcher::Cmp cmp = Searcher::EQUAL;
    bool keep = s.refine(root, cmp);
    assert(keep);  // nothing to prune against yet
    (void)keep;
    s.search(root, cmp, 0);

    out.bits = std::move(s.best_cert);
    out.perm = std::move(s.best_perm);
    return out;
}

IsoResult are_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.n() != g2.n()) return {};
    std::vector<int> d1(g1.n()), d2(g2.n());
    for (int v = 0; v < g1.n(); ++v) {
        d1[v] = g1.degree(v);
        d2[v] = g2.degree(v);
    }
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2) return {};

    Certificate c1 = canonical_form(g1);
    Certificate c2 = canonical_form(g2);
    if (c1 != c2) return {};

    IsoResult out;
    out.mapping.assign(g1.n(), 0);
    for (int r = 0; r < g1.n(); ++r) out.mapping[c1.perm[r]] = c2.perm[r];
    // never report success on an unverified witness
    for (int u = 0; u < g1.n(); ++u)
        for (int v = u + 1; v < g1.n(); ++v)
            require(g1.edge(u, v) == g2.edge(out.mapping[u], out.mapping[v]),
                    "MalformedInput", "certificate witness failed edge verification");
    out.isomorphic = true;
    return out;
}

std::vector<std::vector<int>> classify(const std::vector<Graph>& graphs, int jobs) {
    std::vector<Certificate> certs(graphs.size());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, (int)graphs.size() ? (int)graphs.size() : 1);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < graphs.size(); ++i) certs[i] = canonical_form(graphs[i]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < graphs.size(); i += jobs)
                    certs[i] = canonical_form(graphs[i]);
            });
        for (auto& th : pool) th.join();
    }
    std::vector<std::vector<int>> classes;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        bool placed = false;
        for (auto& cls : classes)
            if (graphs[cls[0]].n() == graphs[i].n() && certs[cls[0]] == certs[i]) {
                cls.push_back((int)i);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({(int)i});
    }
    return classes;
}

}  // namespace ddg
