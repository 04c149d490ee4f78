#include "mathon/pipeline.hpp"

#include "mathon/geometries.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <unordered_set>

namespace mathon {

namespace {

constexpr int kP = 3;

Matrix block_x() { return Matrix::from_rows({{0, 1}, {2, 0}}, kP); }

std::vector<Subspace> sorted_lines(std::vector<Subspace> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

LineSet f4() { return {"F4", seed_lines()}; }

AlternatingForm m0() {
    Matrix X = block_x(), O = Matrix::zero(2, 2, kP);
    AlternatingForm f(from_blocks({{O, X, X}, {X, O, X}, {X, X, O}}));
    if (!f.nondegenerate()) throw PipelineInvariantViolated("m0 is degenerate");
    for (const Subspace& l : seed_lines())
        if (!is_totally_isotropic(l, f))
            throw PipelineInvariantViolated("seed line not isotropic for m0");
    return f;
}

Matrix distinguished_r() { return Matrix::from_rows({{2, 0}, {2, 2}}, kP); }
Matrix distinguished_s() { return Matrix::from_rows({{2, 2}, {0, 2}}, kP); }

std::vector<Matrix> eight_matrices() {
    std::vector<Matrix> out;
    const Matrix I = Matrix::identity(2, kP);
    for (int a = 0; a < kP; ++a)
        for (int b = 0; b < kP; ++b)
            for (int c = 0; c < kP; ++c)
                for (int d = 0; d < kP; ++d) {
                    Matrix y = Matrix::from_rows({{a, b}, {c, d}}, kP);
                    if (rank(y) != 2) continue;
                    if (rank(y - I) != 2) continue;
                    if (rank(y + I) != 1) continue;
                    out.push_back(std::move(y));
                }
    if (out.size() != 8) throw PipelineInvariantViolated("eight-matrix scan found " + std::to_string(out.size()));
    return out;
}

std::vector<std::pair<Matrix, Matrix>> admissible_rs_pairs() {
    std::vector<std::pair<Matrix, Matrix>> out;
    auto eight = eight_matrices();
    for (const Matrix& r : eight)
        for (const Matrix& s : eight)
            if (rank(r + s) == 1) out.emplace_back(r, s);
    if (out.size() != 24) throw PipelineInvariantViolated("expected 24 admissible (R,S) pairs");
    return out;
}

namespace {

// the three geometric membership conditions for L
bool line_in_l(const Subspace& l, const AlternatingForm& f0,
               const std::vector<Subspace>& pair_solids, const std::vector<Subspace>& seed_polars) {
    if (!is_totally_isotropic(l, f0)) return false;
    for (const Subspace& s : pair_solids)
        if (!meet(l, s).empty()) return false;
    for (const Subspace& sp : seed_polars)
        if (meet(l, sp).vdim() != 1) return false;
    return true;
}

void check_l_shape(const Subspace& l) {
    const Matrix& b = l.basis();
    // canonical form is (I R S): pivots in the first block
    if (b(0, 0) != 1 || b(1, 1) != 1 || b(0, 1) != 0 || b(1, 0) != 0)
        throw PipelineInvariantViolated("L member not of the form (I R S)");
    Matrix R(2, 2, kP), S(2, 2, kP);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            R.set(i, j, b(i, 2 + j));
            S.set(i, j, b(i, 4 + j));
        }
    const Matrix I = Matrix::identity(2, kP);
    bool ok = rank(R) == 2 && rank(S) == 2 && rank(R - I) == 2 && rank(S - I) == 2 &&
              rank(R + S) == 1 && rank(R + I) == 1 && rank(S + I) == 1 && rank(R + S + I) == 1;
    if (!ok) throw PipelineInvariantViolated("L member fails the (R,S) block conditions");
}

} // namespace

LineSet compute_L(const AmbientSpace& space) {
    const AlternatingForm f0 = m0();
    const auto seeds = seed_lines();
    std::vector<Subspace> pair_solids;
    for (size_t i = 0; i < seeds.size(); ++i)
        for (size_t j = i + 1; j < seeds.size(); ++j) pair_solids.push_back(span(seeds[i], seeds[j]));
    std::vector<Subspace> seed_polars;
    for (const Subspace& l : seeds) seed_polars.push_back(polar(l, f0));

    // route one: the 24 (I R S) candidates from the eight-matrix class
    std::vector<Subspace> from_pairs;
    const Matrix I = Matrix::identity(2, kP);
    for (const auto& [r, s] : admissible_rs_pairs()) {
        Subspace l = Subspace::span_of_rows(hstack(hstack(I, r), s));
        if (!line_in_l(l, f0, pair_solids, seed_polars))
            throw PipelineInvariantViolated("(I R S) candidate fails the geometric conditions");
        from_pairs.push_back(std::move(l));
    }

    // route two: filter every line of the space
    std::vector<Subspace> filtered;
    for (const Subspace& l : space.lines())
        if (line_in_l(l, f0, pair_solids, seed_polars)) filtered.push_back(l);

    if (sorted_lines(from_pairs) != sorted_lines(filtered))
        throw PipelineInvariantViolated("the two derivations of L disagree");
    if (filtered.size() != 24)
        throw PipelineInvariantViolated("|L| = " + std::to_string(filtered.size()) + ", expected 24");
    for (const Subspace& l : filtered) check_l_shape(l);
    return {"L", filtered}; // already lexicographic from the line scan
}

std::vector<Subspace> seed_order(const LineSet& L) {
    const Matrix I = Matrix::identity(2, kP);
    Subspace dist = Subspace::span_of_rows(hstack(hstack(I, distinguished_r()), distinguished_s()));
    if (!L.contains_line(dist)) throw PipelineInvariantViolated("distinguished line missing from L");
    std::vector<Subspace> out{dist};
    for (const Subspace& l : sorted_lines(L.lines))
        if (!(l == dist)) out.push_back(l);
    return out;
}

LineSet f5(const LineSet& L, int seed_index) {
    auto order = seed_order(L);
    if (seed_index < 0 || seed_index >= static_cast<int>(order.size()))
        throw Error("seed index out of range");
    LineSet out{"F5", seed_lines()};
    out.lines.push_back(order[static_cast<size_t>(seed_index)]);
    return out;
}

LineSet f5_from_pair(const LineSet& L, const Matrix& R, const Matrix& S) {
    const Matrix I = Matrix::identity(2, kP);
    Subspace cand = Subspace::span_of_rows(hstack(hstack(I, R), S));
    if (!L.contains_line(cand)) throw NotInL("(I R S) is not a member of L");
    LineSet out{"F5", seed_lines()};
    out.lines.push_back(std::move(cand));
    return out;
}

MatrixGroup block_scalar_group() {
    // GL(2,3) = <[[1,1],[0,1]], [[0,1],[1,0]]> (dets 1 and 2)
    Matrix e1 = Matrix::from_rows({{1, 1}, {0, 1}}, kP);
    Matrix e2 = Matrix::from_rows({{0, 1}, {1, 0}}, kP);
    Matrix O = Matrix::zero(2, 2, kP);
    return {{from_blocks({{e1, O, O}, {O, e1, O}, {O, O, e1}}),
             from_blocks({{e2, O, O}, {O, e2, O}, {O, O, e2}})}};
}

Matrix mapping_element(const MatrixGroup& h, const Subspace& from, const Subspace& to) {
    for (const Matrix& g : closure(h))
        if (line_action(g, from) == to) return g;
    throw PipelineInvariantViolated("no group element maps the given line onto the target");
}

MatrixGroup f5_stabilizer() {
    Matrix c0 = Matrix::from_rows({{2, 1}, {0, 1}}, kP);
    Matrix O = Matrix::zero(2, 2, kP);
    Matrix C = from_blocks({{O, O, c0}, {O, c0, O}, {c0, O, O}});
    Matrix D = Matrix::from_rows({{1, 1, 0, 0, 0, 0},
                                  {1, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 0, 2, 2},
                                  {0, 0, 0, 0, 0, 1},
                                  {0, 1, 0, 1, 0, 1},
                                  {1, 0, 1, 0, 1, 0}},
                                 kP);
    return {{C, D}};
}

MatrixGroup f5_stabilizer(const LineSet& L, int seed_index) {
    MatrixGroup base = f5_stabilizer();
    if (seed_index == 0) return base;
    auto order = seed_order(L);
    if (seed_index < 0 || seed_index >= static_cast<int>(order.size()))
        throw Error("seed index out of range");
    Matrix h = mapping_element(block_scalar_group(), order[0], order[static_cast<size_t>(seed_index)]);
    Matrix hi = inverse(h);
    MatrixGroup out;
    for (const Matrix& g : base.generators) out.generators.push_back(hi * g * h);
    return out;
}

LineSet f6(const MatrixGroup& stabilizer, const AmbientSpace& space) {
    auto elements = closure(stabilizer, 1 << 12);
    auto five_cycles = elements_of_projective_order(elements, 5);
    if (five_cycles.size() != 24)
        throw PipelineInvariantViolated("expected 24 projective elements of order 5, got " +
                                        std::to_string(five_cycles.size()));
    LineSet out{"F6", {}};
    for (const Matrix& g : five_cycles) {
        auto fixed = fixed_lines(g, space);
        if (fixed.size() != 1)
            throw PipelineInvariantViolated("an order-5 element fixes " +
                                            std::to_string(fixed.size()) + " lines, expected 1");
        if (!out.contains_line(fixed[0])) out.lines.push_back(fixed[0]);
    }
    if (out.size() != 6)
        throw PipelineInvariantViolated("fixed-line union has size " + std::to_string(out.size()));
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!meet(out.lines[i], out.lines[j]).empty())
                throw PipelineInvariantViolated("the six fixed lines are not pairwise disjoint");
    return out;
}

AlternatingForm m15() {
    Matrix A = Matrix::from_rows({{2, 2}, {0, 0}}, kP);
    Matrix B = Matrix::from_rows({{0, 0}, {1, 1}}, kP);
    Matrix C = Matrix::from_rows({{0, 0}, {1, 0}}, kP);
    Matrix O = Matrix::zero(2, 2, kP);
    Matrix gram = from_blocks({{O, A, B},
                               {-A.transpose(), O, C},
                               {-B.transpose(), -C.transpose(), O}});
    AlternatingForm f{gram};
    if (!f.nondegenerate()) throw PipelineInvariantViolated("invariant Gram is degenerate");
    auto symmetric = [](const Matrix& m) { return m.transpose() == m; };
    const Matrix R = distinguished_r(), S = distinguished_s();
    if (!symmetric(A + B + C) ||
        !symmetric(A * R.transpose() + B * S.transpose() + R * C * S.transpose()))
        throw PipelineInvariantViolated("invariant Gram fails the block symmetry conditions");
    return f;
}

AlternatingForm m15(const LineSet& L, int seed_index) {
    if (seed_index == 0) return m15();
    auto order = seed_order(L);
    if (seed_index < 0 || seed_index >= static_cast<int>(order.size()))
        throw Error("seed index out of range");
    Matrix h = mapping_element(block_scalar_group(), order[0], order[static_cast<size_t>(seed_index)]);
    Matrix hi = inverse(h);
    // lines transform by ell -> ell*h, so the Gram goes to h^-1 M h^-T
    return AlternatingForm(hi * m15().gram() * hi.transpose());
}

LineSet f15(const LineSet& f6_lines, const AlternatingForm& form) {
    if (f6_lines.size() != 6) throw Error("f15 needs the six-line set");
    if (!form.nondegenerate()) throw DegenerateForm("f15 needs a nondegenerate form");
    std::vector<Subspace> solids;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            Subspace s = span(f6_lines.lines[i], f6_lines.lines[j]);
            if (s.vdim() != 4) throw PipelineInvariantViolated("span of two of the six lines is not a solid");
            solids.push_back(std::move(s));
        }
    LineSet out{"F15", {}};
    for (size_t a = 0; a < solids.size(); ++a) {
        std::vector<Subspace> candidates;
        for (const Subspace& l : subspaces_of(solids[a], 2)) {
            bool ok = true;
            for (const Subspace& m : f6_lines.lines)
                if (!are_opposite(l, m, form)) { ok = false; break; }
            if (!ok) continue;
            for (size_t b = 0; b < solids.size() && ok; ++b)
                if (b != a && !meet(l, solids[b]).empty()) ok = false;
            if (ok) candidates.push_back(l);
        }
        if (candidates.size() != 1)
            throw UniquenessViolated("solid " + std::to_string(a) + " admits " +
                                     std::to_string(candidates.size()) + " candidate lines");
        out.lines.push_back(candidates[0]);
    }
    return out;
}

MathonResult mathon_perp_system(const AmbientSpace& space, int seed_index) {
    LineSet l_lines = compute_L(space);
    LineSet f5_lines = f5(l_lines, seed_index);
    MatrixGroup stab = f5_stabilizer(l_lines, seed_index);
    LineSet f6_lines = f6(stab, space);
    AlternatingForm form21 = m15(l_lines, seed_index);
    LineSet f15_lines = f15(f6_lines, form21);
    LineSet m21{"M21", f6_lines.lines};
    for (const Subspace& l : f15_lines.lines) {
        if (m21.contains_line(l)) throw PipelineInvariantViolated("six and fifteen overlap");
        m21.lines.push_back(l);
    }
    if (m21.size() != 21) throw PipelineInvariantViolated("perp-system is not 21 lines");
    PerpSystemReport report = verify_perp_system(m21.lines, form21);
    if (!(report.is_partial_perp_system && report.pairwise_disjoint && report.is_maximal))
        throw PipelineInvariantViolated("the 21 lines fail perp-system verification");
    return MathonResult{f4(),
                        std::move(l_lines),
                        std::move(f5_lines),
                        std::move(f6_lines),
                        std::move(f15_lines),
                        std::move(m21),
                        m0(),
                        std::move(form21),
                        std::move(stab),
                        std::move(report),
                        seed_index};
}

namespace {

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

ComplementReport complement_analysis(const LineSet& m21, const AmbientSpace& space, int jobs) {
    ComplementReport rep;
    const auto& pts = space.points();
    std::vector<char> covered(pts.size(), 0);
    for (const Subspace& l : m21.lines)
        for (const Subspace& pt : points_of(l)) covered[static_cast<size_t>(space.point_index(pt))] = 1;
    rep.covered_points = static_cast<int>(std::count(covered.begin(), covered.end(), 1));
    rep.complement_points = static_cast<int>(pts.size()) - rep.covered_points;

    const auto& solids = space.solids();
    std::vector<char> keep(solids.size(), 0);
    run_chunked(jobs, solids.size(), [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            bool clean = true;
            for (const Subspace& pt : points_of(solids[i])) {
                if (covered[static_cast<size_t>(space.point_index(pt))]) { clean = false; break; }
            }
            keep[i] = clean ? 1 : 0;
        }
    });
    for (size_t i = 0; i < solids.size(); ++i)
        if (keep[i]) rep.solids.push_back(solids[i]);
    rep.solid_count = static_cast<int>(rep.solids.size());

    rep.meets_are_lines = true;
    for (size_t i = 0; i < rep.solids.size(); ++i)
        for (size_t j = i + 1; j < rep.solids.size(); ++j)
            if (meet(rep.solids[i], rep.solids[j]).vdim() != 2) rep.meets_are_lines = false;

    std::vector<int> through(pts.size(), 0);
    for (const Subspace& s : rep.solids)
        for (const Subspace& pt : points_of(s)) ++through[static_cast<size_t>(space.point_index(pt))];
    rep.three_solids_per_point = true;
    for (size_t i = 0; i < pts.size(); ++i) {
        int expected = covered[i] ? 0 : 3;
        if (through[i] != expected) rep.three_solids_per_point = false;
    }
    return rep;
}

SynthemeRecovery recover_f5(const LineSet& f6_lines) {
    if (f6_lines.size() != 6) throw Error("recover_f5 needs the six-line set");
    SynthemeRecovery rec;
    auto synthemes = all_synthemes();
    auto spreads = all_spreads();
    rec.syntheme_count = static_cast<int>(synthemes.size());
    rec.spread_count = static_cast<int>(spreads.size());

    std::vector<std::pair<std::array<int, 5>, std::vector<Subspace>>> qualifying;
    for (const auto& spread : spreads) {
        std::vector<Subspace> met;
        bool ok = true;
        for (int si : spread) {
            const auto& syn = synthemes[static_cast<size_t>(si)];
            Subspace inter = span(f6_lines.lines[static_cast<size_t>(syn[0].first)],
                                  f6_lines.lines[static_cast<size_t>(syn[0].second)]);
            for (int k = 1; k < 3 && !inter.empty(); ++k)
                inter = meet(inter, span(f6_lines.lines[static_cast<size_t>(syn[static_cast<size_t>(k)].first)],
                                         f6_lines.lines[static_cast<size_t>(syn[static_cast<size_t>(k)].second)]));
            if (inter.vdim() != 2) { ok = false; break; }
            met.push_back(std::move(inter));
        }
        if (ok) qualifying.emplace_back(spread, std::move(met));
    }
    rec.qualifying_spreads = static_cast<int>(qualifying.size());
    if (rec.qualifying_spreads != 1)
        throw RecoveryAmbiguous(std::to_string(rec.qualifying_spreads) +
                                " syntheme spreads qualify, expected exactly 1");
    rec.recovered = {"F5R", qualifying[0].second};
    for (int si : qualifying[0].first) rec.spread.push_back(synthemes[static_cast<size_t>(si)]);
    return rec;
}

namespace {

// fast all-pairs opposite test against a symmetric Gram, early exit
bool all_pairs_opposite_sym(const std::vector<Subspace>& lines, const Matrix& s) {
    const int p = s.modulus();
    const size_t n = lines.size();
    std::vector<Matrix> half(n); // basis * s
    for (size_t i = 0; i < n; ++i) half[i] = lines[i].basis() * s;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            Matrix pm = half[i] * lines[j].basis().transpose();
            int det = (static_cast<int>(pm(0, 0)) * pm(1, 1) - static_cast<int>(pm(0, 1)) * pm(1, 0)) % p;
            if (det == 0) return false;
        }
    return true;
}

struct SplitMix64 {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

} // namespace

PolaritySearchResult find_epsilon_polarities(const LineSet& m21, const MatrixGroup& stabilizer,
                                             const AmbientSpace& space, uint64_t search_seed,
                                             long long random_budget) {
    if (m21.size() == 0) throw Error("polarity search needs the perp-system lines");
    PolaritySearchResult res;
    bool have_h = false, have_e = false;

    auto consider = [&](const Matrix& sym, const std::string& provenance) {
        ++res.candidates_tested;
        if (rank(sym) != 6) return;
        if (!all_pairs_opposite_sym(m21.lines, sym)) return;
        QuadraticForm q(sym);
        auto [type, singular] = classify_quadric(q, space);
        PolarityWitness w{sym, type, singular, provenance};
        if (type == QuadricType::hyperbolic && !have_h) {
            res.hyperbolic = std::move(w);
            have_h = true;
        } else if (type == QuadricType::elliptic && !have_e) {
            res.elliptic = std::move(w);
            have_e = true;
        }
    };

    // candidate coordinate vectors, first nonzero entry 1 (forms up to scalar)
    auto sweep_space = [&](const std::vector<Matrix>& basis, const std::string& provenance) {
        const int k = static_cast<int>(basis.size());
        if (k == 0 || k > 7) return;
        std::vector<int> c(static_cast<size_t>(k), 0);
        while (true) {
            int i = k - 1;
            while (i >= 0 && c[static_cast<size_t>(i)] == kP - 1) c[static_cast<size_t>(i--)] = 0;
            if (i < 0) break;
            ++c[static_cast<size_t>(i)];
            int lead = 0;
            while (c[static_cast<size_t>(lead)] == 0) ++lead;
            if (c[static_cast<size_t>(lead)] != 1) continue;
            Matrix sym = Matrix::zero(6, 6, kP);
            for (int b = 0; b < k; ++b)
                if (c[static_cast<size_t>(b)] != 0) sym = sym + scale(c[static_cast<size_t>(b)], basis[static_cast<size_t>(b)]);
            consider(sym, provenance);
            if (have_h && have_e) return;
        }
    };

    auto elements = closure(stabilizer, 1 << 12);

    // first pass: the invariant quadratic space of the cyclic group <CD>
    if (stabilizer.generators.size() >= 2) {
        Matrix cd = stabilizer.generators[0] * stabilizer.generators[1];
        for (const auto& cs : invariant_quadratic_forms({{cd}}))
            if (!(have_h && have_e)) sweep_space(cs.basis, "invariant space of <CD>");
    }

    // second pass: semi-invariant spaces of every cyclic subgroup, closure order
    if (!(have_h && have_e)) {
        std::unordered_set<Matrix, MatrixHash> seen_spaces;
        for (size_t gi = 1; gi < elements.size() && !(have_h && have_e); ++gi) {
            for (const auto& cs : invariant_quadratic_forms({{elements[gi]}})) {
                if (have_h && have_e) break;
                if (cs.basis.empty() || cs.basis.size() > 7) continue;
                Matrix key(static_cast<int>(cs.basis.size()), 36, kP);
                for (size_t r = 0; r < cs.basis.size(); ++r)
                    for (int i = 0; i < 6; ++i)
                        for (int j = 0; j < 6; ++j) key.set(static_cast<int>(r), i * 6 + j, cs.basis[r](i, j));
                if (!seen_spaces.insert(key).second) continue;
                sweep_space(cs.basis, "invariant space of cyclic subgroup, element " + std::to_string(gi));
            }
        }
    }

    // last resort: seeded random symmetric matrices
    if (!(have_h && have_e)) {
        res.used_random_fallback = true;
        SplitMix64 rng{search_seed};
        for (long long t = 0; t < random_budget && !(have_h && have_e); ++t) {
            Matrix sym(6, 6, kP);
            for (int i = 0; i < 6; ++i)
                for (int j = i; j < 6; ++j) {
                    int v = static_cast<int>(rng.next() % kP);
                    sym.set(i, j, v);
                    sym.set(j, i, v);
                }
            consider(sym, "random candidate, seed " + std::to_string(search_seed));
        }
    }

    if (!have_h || !have_e) {
        std::string missing = !have_h && !have_e ? "hyperbolic and elliptic"
                              : !have_h          ? "hyperbolic"
                                                 : "elliptic";
        throw WitnessNotFound("no " + missing + " witness within budget (" +
                              std::to_string(res.candidates_tested) + " candidates tested)");
    }
    return res;
}

} // namespace mathon
