#include "mathon/projective.hpp"

#include <algorithm>

namespace mathon {

Subspace Subspace::span_of_rows(const Matrix& rows) {
    auto res = rref(rows);
    int k = static_cast<int>(res.pivots.size());
    Matrix basis(k, rows.cols(), rows.modulus());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < rows.cols(); ++j) basis.set(i, j, res.reduced(i, j));
    return Subspace(std::move(basis));
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient_points() != b.ambient_points() || a.modulus() != b.modulus())
        throw AmbientMismatch("subspaces live in different ambient spaces");
}

} // namespace

Subspace span(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    return Subspace::span_of_rows(vstack(a.basis(), b.basis()));
}

Subspace meet(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    const int n = a.ambient_points();
    if (a.empty() || b.empty())
        return Subspace::span_of_rows(Matrix(0, n, a.modulus()));
    // z = (u|w) with u*A = w*B  <=>  z * [A; -B] = 0
    Matrix stacked = vstack(a.basis(), -b.basis());
    Matrix z = kernel_basis(stacked.transpose());
    if (z.rows() == 0) return Subspace::span_of_rows(Matrix(0, n, a.modulus()));
    Matrix u(z.rows(), a.vdim(), a.modulus());
    for (int i = 0; i < z.rows(); ++i)
        for (int j = 0; j < a.vdim(); ++j) u.set(i, j, z(i, j));
    return Subspace::span_of_rows(u * a.basis());
}

bool contains(const Subspace& outer, const Subspace& inner) {
    require_same_ambient(outer, inner);
    if (inner.empty()) return true;
    if (outer.empty()) return false;
    return rank(vstack(outer.basis(), inner.basis())) == outer.vdim();
}

bool LineSet::contains_line(const Subspace& l) const {
    return std::find(lines.begin(), lines.end(), l) != lines.end();
}

bool LineSet::same_lines_as(const LineSet& other) const {
    auto a = lines, b = other.lines;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::vector<Subspace> points_of(const Subspace& s) {
    std::vector<Subspace> out;
    const int k = s.vdim();
    const int p = s.modulus();
    if (k == 0) return out;
    // projective coefficient vectors: first nonzero coordinate = 1
    std::vector<int> c(k, 0);
    for (int lead = 0; lead < k; ++lead) {
        std::fill(c.begin(), c.end(), 0);
        c[lead] = 1;
        const int nfree = k - lead - 1;
        long long total = 1;
        for (int i = 0; i < nfree; ++i) total *= p;
        for (long long it = 0; it < total; ++it) {
            long long t = it;
            for (int i = 0; i < nfree; ++i) {
                c[lead + 1 + i] = static_cast<int>(t % p);
                t /= p;
            }
            Matrix row(1, s.ambient_points(), p);
            for (int j = 0; j < s.ambient_points(); ++j) {
                long long acc = 0;
                for (int i = 0; i < k; ++i) acc += static_cast<long long>(c[i]) * s.basis()(i, j);
                row.set(0, j, acc);
            }
            out.push_back(Subspace::span_of_rows(row));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// All canonical k x n RREF matrices over GF(p), by pivot pattern.
std::vector<Matrix> canonical_bases(int k, int n, int p) {
    std::vector<Matrix> out;
    std::vector<int> piv(k);
    // iterate k-subsets of columns as pivot sets
    for (int i = 0; i < k; ++i) piv[i] = i;
    auto emit = [&]() {
        std::vector<std::pair<int, int>> freepos;
        for (int i = 0; i < k; ++i)
            for (int c = piv[i] + 1; c < n; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end()) freepos.emplace_back(i, c);
        long long total = 1;
        for (size_t i = 0; i < freepos.size(); ++i) total *= p;
        for (long long it = 0; it < total; ++it) {
            Matrix m(k, n, p);
            for (int i = 0; i < k; ++i) m.set(i, piv[i], 1);
            long long t = it;
            for (auto [r, c] : freepos) {
                m.set(r, c, static_cast<int>(t % p));
                t /= p;
            }
            out.push_back(std::move(m));
        }
    };
    if (k == 0) return out;
    while (true) {
        emit();
        int i = k - 1;
        while (i >= 0 && piv[i] == n - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    return out;
}

} // namespace

std::vector<Subspace> subspaces_of(const Subspace& s, int k) {
    std::vector<Subspace> out;
    if (k > s.vdim()) return out;
    if (k == 0) return out;
    for (const Matrix& coeffs : canonical_bases(k, s.vdim(), s.modulus()))
        out.push_back(Subspace::span_of_rows(coeffs * s.basis()));
    std::sort(out.begin(), out.end());
    return out;
}

unsigned long long gaussian_binomial(int n, int k, int q) {
    if (k < 0 || k > n) return 0;
    // prod_{i=0..k-1} (q^(n-i) - 1) / (q^(i+1) - 1), exact at every step
    // when multiplied out in the standard telescoping order
    unsigned long long num = 1;
    for (int i = 0; i < k; ++i) {
        unsigned long long qa = 1, qb = 1;
        for (int j = 0; j < n - i; ++j) qa *= static_cast<unsigned long long>(q);
        for (int j = 0; j < i + 1; ++j) qb *= static_cast<unsigned long long>(q);
        num = num * (qa - 1) / (qb - 1);
    }
    return num;
}

AmbientSpace::AmbientSpace(int d, int q) : d_(d), q_(q) {
    if (!is_valid_modulus(q)) throw Error("unsupported field order " + std::to_string(q));
    if (d < 1) throw Error("ambient dimension must be >= 1");
}

std::vector<Subspace> AmbientSpace::enumerate(int k) const {
    if (gaussian_binomial(d_ + 1, k, q_) > 10000000ull)
        throw TooLarge("subspace enumeration too large");
    std::vector<Subspace> out;
    for (const Matrix& m : canonical_bases(k, d_ + 1, q_)) out.push_back(Subspace::span_of_rows(m));
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Subspace>& AmbientSpace::points() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!points_) {
        points_ = enumerate(1);
        // base-q code of the canonical row -> index
        long long codes = 1;
        for (int i = 0; i <= d_; ++i) codes *= q_;
        point_lookup_.assign(static_cast<size_t>(codes), -1);
        for (size_t i = 0; i < points_->size(); ++i) {
            const Matrix& b = (*points_)[i].basis();
            long long code = 0;
            for (int j = d_; j >= 0; --j) code = code * q_ + b(0, j);
            point_lookup_[static_cast<size_t>(code)] = static_cast<int>(i);
        }
    }
    return *points_;
}

const std::vector<Subspace>& AmbientSpace::lines() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!lines_) lines_ = enumerate(2);
    return *lines_;
}

const std::vector<Subspace>& AmbientSpace::solids() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!solids_) solids_ = enumerate(4);
    return *solids_;
}

int AmbientSpace::point_index(const Subspace& pt) const {
    points(); // materialize lookup
    if (pt.vdim() != 1 || pt.ambient_points() != d_ + 1) return -1;
    long long code = 0;
    for (int j = d_; j >= 0; --j) code = code * q_ + pt.basis()(0, j);
    std::lock_guard<std::mutex> lock(mu_);
    return point_lookup_[static_cast<size_t>(code)];
}

std::vector<Subspace> enumerate_lines(const AmbientSpace& space) { return space.lines(); }

} // namespace mathon
