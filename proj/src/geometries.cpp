#include "mathon/geometries.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace mathon {

namespace {

// bit rows over num_points, for collinearity and line membership
struct BitRows {
    size_t words;
    std::vector<uint64_t> bits;
    BitRows(size_t rows, size_t cols) : words((cols + 63) / 64), bits(rows * words, 0) {}
    void set(size_t r, size_t c) { bits[r * words + c / 64] |= 1ull << (c % 64); }
    bool get(size_t r, size_t c) const { return bits[r * words + c / 64] >> (c % 64) & 1; }
    const uint64_t* row(size_t r) const { return bits.data() + r * words; }
    void or_into(size_t dst, const uint64_t* src) {
        for (size_t w = 0; w < words; ++w) bits[dst * words + w] |= src[w];
    }
};

int and_popcount(const uint64_t* a, const uint64_t* b, size_t words) {
    int c = 0;
    for (size_t w = 0; w < words; ++w) c += __builtin_popcountll(a[w] & b[w]);
    return c;
}

void run_chunked(int jobs, size_t n, const std::function<void(size_t, size_t)>& body) {
    if (jobs <= 1 || n < 2) {
        body(0, n);
        return;
    }
    size_t nthreads = std::min<size_t>(static_cast<size_t>(jobs), n);
    std::vector<std::thread> threads;
    size_t chunk = (n + nthreads - 1) / nthreads;
    for (size_t t = 0; t < nthreads; ++t) {
        size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back(body, lo, hi);
    }
    for (auto& th : threads) th.join();
}

} // namespace

IncidenceStructure IncidenceStructure::from_lines(int num_points,
                                                  std::vector<std::vector<int>> points_per_line) {
    IncidenceStructure inc;
    inc.num_points_ = num_points;
    inc.points_on_line_ = std::move(points_per_line);
    inc.lines_on_point_.resize(static_cast<size_t>(num_points));
    for (size_t l = 0; l < inc.points_on_line_.size(); ++l) {
        auto& pts = inc.points_on_line_[l];
        std::sort(pts.begin(), pts.end());
        if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
            throw Error("repeated incidence pair");
        for (int p : pts) {
            if (p < 0 || p >= num_points) throw Error("incidence references an invalid point id");
            inc.lines_on_point_[static_cast<size_t>(p)].push_back(static_cast<int>(l));
        }
    }
    // partial linear space: no point pair on two lines
    BitRows seen(static_cast<size_t>(num_points), static_cast<size_t>(num_points));
    for (const auto& pts : inc.points_on_line_)
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) {
                size_t a = static_cast<size_t>(pts[i]), b = static_cast<size_t>(pts[j]);
                if (seen.get(a, b)) throw Error("two points lie on two common lines");
                seen.set(a, b);
                seen.set(b, a);
            }
    return inc;
}

IncidenceStructure IncidenceStructure::from_pairs(int num_points, int num_lines,
                                                  const std::vector<std::pair<int, int>>& incidences) {
    std::vector<std::vector<int>> per_line(static_cast<size_t>(num_lines));
    for (auto [p, l] : incidences) {
        if (l < 0 || l >= num_lines) throw Error("incidence references an invalid line id");
        per_line[static_cast<size_t>(l)].push_back(p);
    }
    return from_lines(num_points, std::move(per_line));
}

bool IncidenceStructure::incident(int p, int l) const {
    const auto& pts = points_on_line_[static_cast<size_t>(l)];
    return std::binary_search(pts.begin(), pts.end(), p);
}

std::vector<std::pair<int, int>> all_duads() {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) out.emplace_back(i, j);
    return out;
}

std::vector<std::array<std::pair<int, int>, 3>> all_synthemes() {
    std::vector<std::array<std::pair<int, int>, 3>> out;
    for (int a = 1; a < 6; ++a) {
        std::vector<int> rest;
        for (int x = 1; x < 6; ++x)
            if (x != a) rest.push_back(x);
        for (int k = 1; k < 4; ++k) {
            std::array<std::pair<int, int>, 3> syn{};
            syn[0] = {0, a};
            syn[1] = {rest[0], rest[static_cast<size_t>(k)]};
            std::vector<int> last;
            for (int k2 = 1; k2 < 4; ++k2)
                if (k2 != k) last.push_back(rest[static_cast<size_t>(k2)]);
            syn[2] = {last[0], last[1]};
            std::sort(syn.begin(), syn.end());
            out.push_back(syn);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<int, 5>> all_spreads() {
    auto synthemes = all_synthemes();
    auto duads = all_duads();
    auto duad_index = [&duads](std::pair<int, int> d) {
        return static_cast<int>(std::find(duads.begin(), duads.end(), d) - duads.begin());
    };
    std::vector<int> masks;
    for (const auto& syn : synthemes) {
        int m = 0;
        for (auto d : syn) m |= 1 << duad_index(d);
        masks.push_back(m);
    }
    std::vector<std::array<int, 5>> out;
    const int full = (1 << 15) - 1;
    for (int a = 0; a < 15; ++a)
        for (int b = a + 1; b < 15; ++b) {
            if (masks[a] & masks[b]) continue;
            for (int c = b + 1; c < 15; ++c) {
                if ((masks[a] | masks[b]) & masks[c]) continue;
                for (int d = c + 1; d < 15; ++d) {
                    if ((masks[a] | masks[b] | masks[c]) & masks[d]) continue;
                    for (int e = d + 1; e < 15; ++e)
                        if ((masks[a] | masks[b] | masks[c] | masks[d] | masks[e]) == full)
                            out.push_back({a, b, c, d, e});
                }
            }
        }
    return out;
}

LineSet f10(const LineSet& f5_lines, const AlternatingForm& form) {
    if (f5_lines.size() != 5) throw Error("f10 needs the five-line set");
    if (!form.nondegenerate()) throw DegenerateForm("f10 needs a nondegenerate form");
    LineSet out{"F10", {}};
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
            Subspace pl = polar(span(f5_lines.lines[static_cast<size_t>(a)],
                                     f5_lines.lines[static_cast<size_t>(b)]),
                                form);
            if (pl.vdim() != 2)
                throw PipelineInvariantViolated("polar of a solid is not a line");
            if (out.contains_line(pl))
                throw PipelineInvariantViolated("duplicate line among the ten polars");
            out.lines.push_back(std::move(pl));
        }
    return out;
}

IncidenceStructure build_w2(const LineSet& f15_lines, const LineSet& f5_lines,
                            const LineSet& f10_lines, const AlternatingForm& form) {
    if (f15_lines.size() != 15 || f5_lines.size() != 5 || f10_lines.size() != 10)
        throw Error("build_w2 needs sets of sizes 15, 5, 10");
    std::vector<std::vector<int>> per_line(15);
    for (int li = 0; li < 15; ++li) {
        bool type_one = li < 5;
        const Subspace& l = type_one ? f5_lines.lines[static_cast<size_t>(li)]
                                     : f10_lines.lines[static_cast<size_t>(li - 5)];
        Subspace pl = polar(l, form);
        for (int pi = 0; pi < 15; ++pi) {
            const Subspace& pt = f15_lines.lines[static_cast<size_t>(pi)];
            bool inc = type_one ? meet(pt, pl).empty() : contains(pl, pt);
            if (inc) per_line[static_cast<size_t>(li)].push_back(pi);
        }
    }
    IncidenceStructure inc = IncidenceStructure::from_lines(15, std::move(per_line));
    for (int i = 0; i < 15; ++i) inc.point_labels.push_back("m" + std::to_string(i));
    for (int i = 0; i < 5; ++i) inc.line_labels.push_back("l" + std::to_string(i));
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            inc.line_labels.push_back("l" + std::to_string(a) + std::to_string(b));
    return inc;
}

namespace {

// collinearity rows; diagonal excluded
BitRows collinearity(const IncidenceStructure& inc) {
    BitRows adj(static_cast<size_t>(inc.num_points()), static_cast<size_t>(inc.num_points()));
    for (int l = 0; l < inc.num_lines(); ++l) {
        const auto& pts = inc.points_of_line(l);
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = 0; j < pts.size(); ++j)
                if (i != j) adj.set(static_cast<size_t>(pts[i]), static_cast<size_t>(pts[j]));
    }
    return adj;
}

void require_uniform(const IncidenceStructure& inc, int& line_size, int& point_degree,
                     const char* who) {
    if (inc.num_points() == 0 || inc.num_lines() == 0) throw Error(std::string(who) + ": empty structure");
    line_size = static_cast<int>(inc.points_of_line(0).size());
    point_degree = static_cast<int>(inc.lines_of_point(0).size());
    for (int l = 0; l < inc.num_lines(); ++l)
        if (static_cast<int>(inc.points_of_line(l).size()) != line_size)
            throw Error(std::string(who) + ": line sizes are not constant");
    for (int p = 0; p < inc.num_points(); ++p)
        if (static_cast<int>(inc.lines_of_point(p).size()) != point_degree)
            throw Error(std::string(who) + ": point degrees are not constant");
}

} // namespace

std::pair<int, int> check_gq(const IncidenceStructure& inc) {
    int line_size = 0, degree = 0;
    try {
        require_uniform(inc, line_size, degree, "check_gq");
    } catch (const Error& e) {
        throw NotAGQ(e.what());
    }
    BitRows adj = collinearity(inc);
    for (int p = 0; p < inc.num_points(); ++p)
        for (int l = 0; l < inc.num_lines(); ++l) {
            if (inc.incident(p, l)) continue;
            int c = 0;
            for (int q : inc.points_of_line(l))
                if (adj.get(static_cast<size_t>(p), static_cast<size_t>(q))) ++c;
            if (c != 1)
                throw NotAGQ("antiflag (point " + std::to_string(p) + ", line " + std::to_string(l) +
                             ") sees " + std::to_string(c) + " collinear points");
        }
    return {line_size - 1, degree - 1};
}

IncidenceStructure sylvester_model() {
    auto duads = all_duads();
    auto synthemes = all_synthemes();
    std::vector<std::vector<int>> per_line(synthemes.size());
    for (size_t s = 0; s < synthemes.size(); ++s)
        for (auto d : synthemes[s])
            per_line[s].push_back(static_cast<int>(std::find(duads.begin(), duads.end(), d) - duads.begin()));
    IncidenceStructure inc = IncidenceStructure::from_lines(15, std::move(per_line));
    for (auto [i, j] : duads) inc.point_labels.push_back(std::to_string(i) + std::to_string(j));
    for (const auto& syn : synthemes) {
        std::string s;
        for (auto [i, j] : syn) s += std::to_string(i) + std::to_string(j) + "|";
        s.pop_back();
        inc.line_labels.push_back(s);
    }
    return inc;
}

namespace {

struct IsoSearch {
    const IncidenceStructure& a;
    const IncidenceStructure& b;
    std::vector<int> pmap, pused;          // a-point -> b-point
    std::vector<int> lmap, lused;          // a-line  -> b-line
    std::vector<int> order;                // point assignment order

    bool consistent(int pa, int pb) {
        if (a.lines_of_point(pa).size() != b.lines_of_point(pb).size()) return false;
        // every a-line through pa whose image is already pinned must pass
        // through pb on the b side; lines not yet pinned get pinned when two
        // of their points are mapped
        for (int la : a.lines_of_point(pa)) {
            if (lmap[static_cast<size_t>(la)] >= 0) {
                if (!b.incident(pb, lmap[static_cast<size_t>(la)])) return false;
            }
        }
        // pb must not be incident with the image of any a-line avoiding pa
        // whose image is pinned -> checked lazily when pinning below
        return true;
    }

    bool pin_lines(int pa, std::vector<int>& pinned_here) {
        for (int la : a.lines_of_point(pa)) {
            if (lmap[static_cast<size_t>(la)] >= 0) continue;
            // count mapped points on la
            int other = -1;
            for (int q : a.points_of_line(la))
                if (q != pa && pmap[static_cast<size_t>(q)] >= 0) { other = q; break; }
            if (other < 0) continue;
            // the b-line through pmap[pa] and pmap[other]
            int pb = pmap[static_cast<size_t>(pa)], qb = pmap[static_cast<size_t>(other)];
            int found = -1;
            for (int lb : b.lines_of_point(pb))
                if (b.incident(qb, lb)) { found = lb; break; }
            if (found < 0 || lused[static_cast<size_t>(found)]) return false;
            if (a.points_of_line(la).size() != b.points_of_line(found).size()) return false;
            // all already-mapped points of la must land on it
            for (int q : a.points_of_line(la))
                if (pmap[static_cast<size_t>(q)] >= 0 && !b.incident(pmap[static_cast<size_t>(q)], found))
                    return false;
            lmap[static_cast<size_t>(la)] = found;
            lused[static_cast<size_t>(found)] = 1;
            pinned_here.push_back(la);
        }
        return true;
    }

    bool extend(size_t depth) {
        if (depth == order.size()) return finish();
        int pa = order[depth];
        for (int pb = 0; pb < b.num_points(); ++pb) {
            if (pused[static_cast<size_t>(pb)]) continue;
            if (!consistent(pa, pb)) continue;
            pmap[static_cast<size_t>(pa)] = pb;
            pused[static_cast<size_t>(pb)] = 1;
            std::vector<int> pinned;
            if (pin_lines(pa, pinned) && extend(depth + 1)) return true;
            for (int la : pinned) {
                lused[static_cast<size_t>(lmap[static_cast<size_t>(la)])] = 0;
                lmap[static_cast<size_t>(la)] = -1;
            }
            pmap[static_cast<size_t>(pa)] = -1;
            pused[static_cast<size_t>(pb)] = 0;
        }
        return false;
    }

    bool finish() {
        // lines with fewer than two points may still be unpinned
        for (int la = 0; la < a.num_lines(); ++la) {
            if (lmap[static_cast<size_t>(la)] >= 0) continue;
            for (int lb = 0; lb < b.num_lines(); ++lb) {
                if (lused[static_cast<size_t>(lb)]) continue;
                if (a.points_of_line(la).size() != b.points_of_line(lb).size()) continue;
                bool ok = true;
                for (int q : a.points_of_line(la))
                    if (!b.incident(pmap[static_cast<size_t>(q)], lb)) { ok = false; break; }
                if (ok) {
                    lmap[static_cast<size_t>(la)] = lb;
                    lused[static_cast<size_t>(lb)] = 1;
                    break;
                }
            }
            if (lmap[static_cast<size_t>(la)] < 0) return false;
        }
        // full verification, both directions
        for (int la = 0; la < a.num_lines(); ++la)
            for (int q : a.points_of_line(la))
                if (!b.incident(pmap[static_cast<size_t>(q)], lmap[static_cast<size_t>(la)])) return false;
        long long ia = 0, ib = 0;
        for (int l = 0; l < a.num_lines(); ++l) ia += static_cast<long long>(a.points_of_line(l).size());
        for (int l = 0; l < b.num_lines(); ++l) ib += static_cast<long long>(b.points_of_line(l).size());
        return ia == ib;
    }
};

} // namespace

std::optional<Isomorphism> isomorphism(const IncidenceStructure& a, const IncidenceStructure& b) {
    if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines()) return std::nullopt;
    {
        std::vector<size_t> da, db;
        for (int p = 0; p < a.num_points(); ++p) da.push_back(a.lines_of_point(p).size());
        for (int p = 0; p < b.num_points(); ++p) db.push_back(b.lines_of_point(p).size());
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db) return std::nullopt;
    }
    IsoSearch s{a, b, {}, {}, {}, {}, {}};
    s.pmap.assign(static_cast<size_t>(a.num_points()), -1);
    s.pused.assign(static_cast<size_t>(b.num_points()), 0);
    s.lmap.assign(static_cast<size_t>(a.num_lines()), -1);
    s.lused.assign(static_cast<size_t>(b.num_lines()), 0);
    // BFS order from the highest-degree point keeps new points adjacent to
    // mapped ones, so line pinning prunes early
    {
        int start = 0;
        for (int p = 1; p < a.num_points(); ++p)
            if (a.lines_of_point(p).size() > a.lines_of_point(start).size()) start = p;
        std::vector<char> seen(static_cast<size_t>(a.num_points()), 0);
        s.order.push_back(start);
        seen[static_cast<size_t>(start)] = 1;
        for (size_t head = 0; head < s.order.size(); ++head) {
            int p = s.order[head];
            for (int l : a.lines_of_point(p))
                for (int q : a.points_of_line(l))
                    if (!seen[static_cast<size_t>(q)]) {
                        seen[static_cast<size_t>(q)] = 1;
                        s.order.push_back(q);
                    }
        }
        for (int p = 0; p < a.num_points(); ++p)
            if (!seen[static_cast<size_t>(p)]) s.order.push_back(p);
    }
    if (!s.extend(0)) return std::nullopt;
    return Isomorphism{s.pmap, s.lmap};
}

std::vector<std::pair<int, int>> f15_duad_labels(const LineSet& f15_lines, const LineSet& f6_lines) {
    if (f15_lines.size() != 15 || f6_lines.size() != 6) throw Error("need the 15- and 6-line sets");
    std::vector<std::pair<int, int>> labels;
    for (const Subspace& l : f15_lines.lines) {
        int home_i = -1, home_j = -1, homes = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (contains(span(f6_lines.lines[static_cast<size_t>(i)],
                                  f6_lines.lines[static_cast<size_t>(j)]),
                             l)) {
                    home_i = i;
                    home_j = j;
                    ++homes;
                }
        if (homes != 1) throw PipelineInvariantViolated("induced line lies in " + std::to_string(homes) +
                                                        " of the fifteen solids");
        labels.emplace_back(home_i, home_j);
    }
    return labels;
}

bool duad_consistent(const Isomorphism& iso, const std::vector<std::pair<int, int>>& labels) {
    auto duads = all_duads();
    // sigma(u) = the common element of the image duads of the five points
    // whose label contains u
    std::vector<int> sigma(6, -1);
    for (int u = 0; u < 6; ++u) {
        std::vector<int> count(6, 0);
        int npts = 0;
        for (size_t p = 0; p < labels.size(); ++p) {
            if (labels[p].first != u && labels[p].second != u) continue;
            ++npts;
            auto [x, y] = duads[static_cast<size_t>(iso.point_map[p])];
            ++count[static_cast<size_t>(x)];
            ++count[static_cast<size_t>(y)];
        }
        if (npts != 5) return false;
        for (int v = 0; v < 6; ++v)
            if (count[static_cast<size_t>(v)] == 5) sigma[static_cast<size_t>(u)] = v;
        if (sigma[static_cast<size_t>(u)] < 0) return false;
    }
    std::vector<int> seen(6, 0);
    for (int u = 0; u < 6; ++u) {
        if (seen[static_cast<size_t>(sigma[static_cast<size_t>(u)])]) return false;
        seen[static_cast<size_t>(sigma[static_cast<size_t>(u)])] = 1;
    }
    for (size_t p = 0; p < labels.size(); ++p) {
        auto [i, j] = labels[p];
        int x = sigma[static_cast<size_t>(i)], y = sigma[static_cast<size_t>(j)];
        if (x > y) std::swap(x, y);
        if (duads[static_cast<size_t>(iso.point_map[p])] != std::make_pair(x, y)) return false;
    }
    return true;
}

IncidenceStructure linear_representation(const LineSet& m21) {
    if (m21.size() == 0) throw Error("linear representation of an empty line set");
    const int p = m21.lines[0].modulus();
    const int n = m21.lines[0].ambient_points();
    long long npoints = 1;
    for (int i = 0; i < n; ++i) npoints *= p;

    auto vec_id = [&](const std::vector<int>& v) {
        long long id = 0;
        for (int i = n - 1; i >= 0; --i) id = id * p + v[static_cast<size_t>(i)];
        return id;
    };

    std::vector<std::vector<int>> per_line;
    for (const Subspace& dir : m21.lines) {
        if (dir.vdim() != 2) throw Error("linear representation expects lines");
        // the 9 vectors of the direction subspace
        std::vector<std::vector<int>> subsp;
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                std::vector<int> v(static_cast<size_t>(n), 0);
                for (int j = 0; j < n; ++j)
                    v[static_cast<size_t>(j)] = (a * dir.basis()(0, j) + b * dir.basis()(1, j)) % p;
                subsp.push_back(std::move(v));
            }
        std::vector<char> used(static_cast<size_t>(npoints), 0);
        for (long long rep = 0; rep < npoints; ++rep) {
            if (used[static_cast<size_t>(rep)]) continue;
            std::vector<int> base(static_cast<size_t>(n));
            long long t = rep;
            for (int i = 0; i < n; ++i) {
                base[static_cast<size_t>(i)] = static_cast<int>(t % p);
                t /= p;
            }
            std::vector<int> coset;
            for (const auto& u : subsp) {
                std::vector<int> w(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i)
                    w[static_cast<size_t>(i)] = (base[static_cast<size_t>(i)] + u[static_cast<size_t>(i)]) % p;
                long long id = vec_id(w);
                used[static_cast<size_t>(id)] = 1;
                coset.push_back(static_cast<int>(id));
            }
            per_line.push_back(std::move(coset));
        }
    }
    return IncidenceStructure::from_lines(static_cast<int>(npoints), std::move(per_line));
}

PGParams check_partial_geometry(const IncidenceStructure& inc, int jobs) {
    int line_size = 0, degree = 0;
    try {
        require_uniform(inc, line_size, degree, "check_partial_geometry");
    } catch (const Error& e) {
        throw NotAPartialGeometry(e.what());
    }
    const size_t np = static_cast<size_t>(inc.num_points());
    BitRows adj = collinearity(inc);
    BitRows line_bits(static_cast<size_t>(inc.num_lines()), np);
    for (int l = 0; l < inc.num_lines(); ++l)
        for (int q : inc.points_of_line(l)) line_bits.set(static_cast<size_t>(l), static_cast<size_t>(q));

    std::vector<int> first_alpha(np, -2); // -2 = no antiflag seen
    run_chunked(jobs, np, [&](size_t lo, size_t hi) {
        for (size_t pt = lo; pt < hi; ++pt) {
            int alpha = -2;
            for (int l = 0; l < inc.num_lines(); ++l) {
                if (inc.incident(static_cast<int>(pt), l)) continue;
                int c = and_popcount(adj.row(pt), line_bits.row(static_cast<size_t>(l)), adj.words);
                if (alpha == -2) alpha = c;
                else if (c != alpha) { alpha = -1; break; } // deviation inside this point
            }
            first_alpha[pt] = alpha;
        }
    });
    int alpha = -2;
    for (size_t pt = 0; pt < np; ++pt) {
        if (first_alpha[pt] == -2) continue;
        if (first_alpha[pt] == -1)
            throw NotAPartialGeometry("antiflag constant deviates at point " + std::to_string(pt));
        if (alpha == -2) alpha = first_alpha[pt];
        else if (alpha != first_alpha[pt])
            throw NotAPartialGeometry("antiflag constant deviates at point " + std::to_string(pt));
    }
    if (alpha <= 0)
        throw NotAPartialGeometry("no antiflags or zero antiflag constant");
    return {line_size - 1, degree - 1, alpha};
}

SRGParams check_srg(const IncidenceStructure& inc, const PGParams& pg, int jobs) {
    const size_t np = static_cast<size_t>(inc.num_points());
    BitRows adj = collinearity(inc);
    std::vector<int> deg(np, 0);
    for (size_t pt = 0; pt < np; ++pt)
        deg[pt] = and_popcount(adj.row(pt), adj.row(pt), adj.words);
    for (size_t pt = 1; pt < np; ++pt)
        if (deg[pt] != deg[0]) throw NotSRG("collinearity graph is not regular");

    // lambda over adjacent pairs, mu over non-adjacent, each constant
    std::vector<int> lam(np, -1), mu(np, -1), bad(np, 0);
    run_chunked(jobs, np, [&](size_t lo, size_t hi) {
        for (size_t pt = lo; pt < hi; ++pt) {
            for (size_t q = pt + 1; q < np; ++q) {
                int common = and_popcount(adj.row(pt), adj.row(q), adj.words);
                int& slot = adj.get(pt, q) ? lam[pt] : mu[pt];
                if (slot == -1) slot = common;
                else if (slot != common) bad[pt] = 1;
            }
        }
    });
    int lambda = -1, mu_all = -1;
    for (size_t pt = 0; pt < np; ++pt) {
        if (bad[pt]) throw NotSRG("common neighbour count is not constant");
        if (lam[pt] != -1) {
            if (lambda == -1) lambda = lam[pt];
            else if (lambda != lam[pt]) throw NotSRG("lambda is not constant");
        }
        if (mu[pt] != -1) {
            if (mu_all == -1) mu_all = mu[pt];
            else if (mu_all != mu[pt]) throw NotSRG("mu is not constant");
        }
    }
    SRGParams out{static_cast<long long>(np), deg[0], lambda, mu_all};

    // the parameter formula from the partial-geometry parameters
    long long s = pg.s, t = pg.t, a = pg.alpha;
    if ((s + 1) * (s * t + a) % a != 0) throw NotSRG("formula v is not integral");
    SRGParams expect{(s + 1) * (s * t + a) / a, s * (t + 1), s - 1 + t * (a - 1), a * (t + 1)};
    if (out.v != expect.v || out.k != expect.k || out.lambda != expect.lambda || out.mu != expect.mu)
        throw NotSRG("counted parameters disagree with the formula");
    if (out.k * (out.k - out.lambda - 1) != (out.v - out.k - 1) * out.mu)
        throw NotSRG("feasibility identity fails");
    return out;
}

} // namespace mathon
