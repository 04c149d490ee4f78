#include "mathon/groups.hpp"

#include <unordered_set>

namespace mathon {

std::vector<Matrix> closure(const MatrixGroup& g, size_t cap) {
    if (cap < 1) throw Error("closure cap must be >= 1");
    if (g.generators.empty()) throw Error("closure of an empty generator list");
    const int n = g.generators[0].rows();
    const int p = g.generators[0].modulus();
    for (const Matrix& gen : g.generators) {
        if (gen.rows() != n || gen.cols() != n || gen.modulus() != p)
            throw AmbientMismatch("generators of mixed shape");
        if (rank(gen) != n) throw SingularMatrix("generator is not invertible");
    }
    std::vector<Matrix> out;
    std::unordered_set<Matrix, MatrixHash> seen;
    Matrix id = Matrix::identity(n, p);
    out.push_back(id);
    seen.insert(id);
    for (size_t head = 0; head < out.size(); ++head) {
        Matrix x = out[head]; // copy: out may reallocate
        for (const Matrix& gen : g.generators) {
            Matrix y = x * gen;
            if (seen.insert(y).second) {
                if (out.size() + 1 > cap) throw CapExceeded("group closure exceeds cap");
                out.push_back(std::move(y));
            }
        }
    }
    return out;
}

Matrix projective_normalize(const Matrix& m) {
    const int p = m.modulus();
    for (uint8_t b : m.bytes()) {
        if (b == 0) continue;
        int inv = 1, x = b;
        for (int i = 0; i < p - 2; ++i) inv = inv * x % p;
        return scale(inv, m);
    }
    return m; // zero matrix
}

std::vector<Matrix> projective_quotient(const std::vector<Matrix>& elements) {
    std::vector<Matrix> out;
    std::unordered_set<Matrix, MatrixHash> seen;
    for (const Matrix& m : elements) {
        Matrix n = projective_normalize(m);
        if (seen.insert(n).second) out.push_back(std::move(n));
    }
    return out;
}

int projective_order(const Matrix& g) {
    const Matrix id = Matrix::identity(g.rows(), g.modulus());
    Matrix x = g;
    for (int m = 1; m <= 100000; ++m) {
        if (projective_normalize(x) == id) return m;
        x = x * g;
    }
    throw Error("projective order not found (element not of finite order?)");
}

std::vector<Matrix> elements_of_projective_order(const std::vector<Matrix>& elements, int n) {
    std::vector<Matrix> out;
    std::unordered_set<Matrix, MatrixHash> seen;
    for (const Matrix& m : elements) {
        Matrix nm = projective_normalize(m);
        if (!seen.insert(nm).second) continue;
        if (projective_order(nm) == n) out.push_back(std::move(nm));
    }
    return out;
}

Subspace line_action(const Matrix& g, const Subspace& line) {
    return Subspace::span_of_rows(line.basis() * g);
}

std::vector<Subspace> orbit(const MatrixGroup& g, const Subspace& seed, size_t cap) {
    std::vector<Subspace> out{seed};
    std::unordered_set<Matrix, MatrixHash> seen{seed.basis()};
    for (size_t head = 0; head < out.size(); ++head) {
        Subspace x = out[head];
        for (const Matrix& gen : g.generators) {
            Subspace y = line_action(gen, x);
            if (seen.insert(y.basis()).second) {
                if (out.size() + 1 > cap) throw CapExceeded("orbit exceeds cap");
                out.push_back(std::move(y));
            }
        }
    }
    return out;
}

std::vector<Subspace> fixed_lines(const Matrix& g, const AmbientSpace& space) {
    std::vector<Subspace> out;
    for (const Subspace& l : space.lines())
        if (line_action(g, l) == l) out.push_back(l);
    return out;
}

RelationReport check_relations(const Matrix& c, const Matrix& d) {
    const Matrix id = Matrix::identity(c.rows(), c.modulus());
    const Matrix ci = inverse(c), di = inverse(d);
    auto comm = [&](const Matrix& a, const Matrix& ai, const Matrix& b, const Matrix& bi) {
        return ai * bi * a * b;
    };
    RelationReport rep;
    rep.c_squared = pow(c, 2) == id;
    rep.d_eighth = pow(d, 8) == id;
    Matrix d4 = pow(d, 4);
    rep.c_commutes_d4 = comm(c, ci, d4, inverse(d4)) == id;
    rep.cd_fifth = pow(c * d, 5) == id;
    rep.commutator_cubed = pow(comm(c, ci, d, di), 3) == id;
    return rep;
}

namespace {

// coordinates of the two form spaces: alternating (i<j), symmetric (i<=j)
std::vector<std::pair<int, int>> alt_coords(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> sym_coords(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) out.emplace_back(i, j);
    return out;
}

Matrix alt_from_coords(const Matrix& coords, int row, int n) {
    Matrix m(n, n, coords.modulus());
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            m.set(i, j, coords(row, k));
            m.set(j, i, -static_cast<long long>(coords(row, k)));
            ++k;
        }
    return m;
}

Matrix sym_from_coords(const Matrix& coords, int row, int n) {
    Matrix m(n, n, coords.modulus());
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            m.set(i, j, coords(row, k));
            m.set(j, i, coords(row, k));
            ++k;
        }
    return m;
}

// linear operator M -> g M g^T on the coordinate space, minus lambda
Matrix conjugation_constraints(const Matrix& g, int lambda, bool alternating) {
    const int n = g.rows();
    const int p = g.modulus();
    auto coords = alternating ? alt_coords(n) : sym_coords(n);
    const int dim = static_cast<int>(coords.size());
    Matrix rows(dim, dim, p);
    for (int r = 0; r < dim; ++r) {
        auto [i, j] = coords[r];
        for (int c = 0; c < dim; ++c) {
            auto [k, l] = coords[c];
            long long v;
            if (alternating) {
                v = static_cast<long long>(g(i, k)) * g(j, l) - static_cast<long long>(g(i, l)) * g(j, k);
            } else if (k == l) {
                v = static_cast<long long>(g(i, k)) * g(j, k);
            } else {
                v = static_cast<long long>(g(i, k)) * g(j, l) + static_cast<long long>(g(i, l)) * g(j, k);
            }
            if (r == c) v -= lambda;
            rows.set(r, c, v);
        }
    }
    return rows;
}

std::vector<CharacterSpace> invariant_forms(const MatrixGroup& g, int n, bool alternating) {
    const int p = g.generators.empty() ? 3 : g.generators[0].modulus();
    const int ngens = static_cast<int>(g.generators.size());
    auto coords = alternating ? alt_coords(n) : sym_coords(n);
    const int dim = static_cast<int>(coords.size());

    std::vector<CharacterSpace> out;
    // characters run over (1..p-1)^ngens, lexicographic with 1 first
    std::vector<int> chi(ngens, 1);
    while (true) {
        Matrix stacked(0, dim, p);
        for (int gi = 0; gi < ngens; ++gi)
            stacked = vstack(stacked, conjugation_constraints(g.generators[gi], chi[gi], alternating));
        Matrix sol = ngens == 0 ? Matrix::identity(dim, p) : kernel_basis(stacked);
        if (sol.rows() > 0) {
            CharacterSpace cs;
            cs.character = chi;
            for (int r = 0; r < sol.rows(); ++r)
                cs.basis.push_back(alternating ? alt_from_coords(sol, r, n) : sym_from_coords(sol, r, n));
            out.push_back(std::move(cs));
        }
        if (ngens == 0) break;
        int i = ngens - 1;
        while (i >= 0 && chi[i] == p - 1) {
            chi[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++chi[i];
    }
    return out;
}

} // namespace

std::vector<Matrix> forms_vanishing_on_lines(const std::vector<Subspace>& lines, int n, int p) {
    auto coords = alt_coords(n);
    const int dim = static_cast<int>(coords.size());
    // for an alternating M the 2x2 value ell M ell^T vanishes iff its (0,1)
    // entry u M v^T does
    Matrix constraints(static_cast<int>(lines.size()), dim, p);
    for (size_t li = 0; li < lines.size(); ++li) {
        const Matrix& b = lines[li].basis();
        if (b.rows() != 2) throw Error("forms_vanishing_on_lines expects lines");
        for (int c = 0; c < dim; ++c) {
            auto [i, j] = coords[c];
            constraints.set(static_cast<int>(li), c,
                            static_cast<long long>(b(0, i)) * b(1, j) -
                                static_cast<long long>(b(0, j)) * b(1, i));
        }
    }
    Matrix sol = lines.empty() ? Matrix::identity(dim, p) : kernel_basis(constraints);
    std::vector<Matrix> out;
    for (int r = 0; r < sol.rows(); ++r) out.push_back(alt_from_coords(sol, r, n));
    return out;
}

std::vector<CharacterSpace> invariant_alternating_forms(const MatrixGroup& g, int n) {
    return invariant_forms(g, n, true);
}

std::vector<CharacterSpace> invariant_quadratic_forms(const MatrixGroup& g, int n) {
    return invariant_forms(g, n, false);
}

int total_dimension(const std::vector<CharacterSpace>& spaces) {
    int d = 0;
    for (const auto& s : spaces) d += static_cast<int>(s.basis.size());
    return d;
}

bool form_in_span(const Matrix& target, const std::vector<Matrix>& basis) {
    if (basis.empty()) return target.is_zero();
    const int len = target.rows() * target.cols();
    Matrix stacked(static_cast<int>(basis.size()), len, target.modulus());
    for (size_t r = 0; r < basis.size(); ++r)
        for (int i = 0; i < target.rows(); ++i)
            for (int j = 0; j < target.cols(); ++j)
                stacked.set(static_cast<int>(r), i * target.cols() + j, basis[r](i, j));
    Matrix flat(1, len, target.modulus());
    for (int i = 0; i < target.rows(); ++i)
        for (int j = 0; j < target.cols(); ++j) flat.set(0, i * target.cols() + j, target(i, j));
    return rank(vstack(stacked, flat)) == rank(stacked);
}

} // namespace mathon
