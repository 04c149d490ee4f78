#include "mathon/gf.hpp"

#include <algorithm>
#include <sstream>

namespace mathon {

bool is_valid_modulus(int p) {
    switch (p) {
    case 2:
    case 3:
    case 5:
    case 7:
    case 11:
    case 13:
        return true;
    default:
        return false;
    }
}

namespace {

int reduce(long long v, int p) {
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

int inv_mod(int a, int p) {
    if (a % p == 0) throw SingularMatrix("inverse of 0 in GF(" + std::to_string(p) + ")");
    // Fermat: a^(p-2); p <= 13 so a plain loop is fine
    int r = 1;
    for (int i = 0; i < p - 2; ++i) r = r * a % p;
    return r;
}

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.modulus() != b.modulus())
        throw AmbientMismatch("matrix shape/modulus mismatch");
}

} // namespace

Fp::Fp(long long value, int modulus) : modulus_(modulus) {
    if (!is_valid_modulus(modulus)) throw Error("unsupported modulus " + std::to_string(modulus));
    value_ = reduce(value, modulus);
}

Fp Fp::operator+(Fp o) const { return Fp(value_ + o.value_, modulus_); }
Fp Fp::operator-(Fp o) const { return Fp(value_ - o.value_, modulus_); }
Fp Fp::operator*(Fp o) const { return Fp(static_cast<long long>(value_) * o.value_, modulus_); }
Fp Fp::operator-() const { return Fp(-value_, modulus_); }
Fp Fp::inverse() const { return Fp(inv_mod(value_, modulus_), modulus_); }

Matrix::Matrix(int rows, int cols, int modulus)
    : rows_(rows), cols_(cols), modulus_(modulus),
      e_(static_cast<size_t>(rows) * cols, 0) {
    if (!is_valid_modulus(modulus)) throw Error("unsupported modulus " + std::to_string(modulus));
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
}

Matrix Matrix::identity(int n, int modulus) {
    Matrix m(n, n, modulus);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows, int modulus) {
    std::vector<std::vector<int>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v, modulus);
}

Matrix Matrix::from_rows(const std::vector<std::vector<int>>& rows, int modulus) {
    int nr = static_cast<int>(rows.size());
    int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(nr, nc, modulus);
    for (int i = 0; i < nr; ++i) {
        if (static_cast<int>(rows[i].size()) != nc) throw Error("ragged rows");
        for (int j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void Matrix::set(int r, int c, long long v) {
    e_[static_cast<size_t>(r) * cols_ + c] = static_cast<uint8_t>(reduce(v, modulus_));
}

Matrix Matrix::row(int r) const {
    Matrix m(1, cols_, modulus_);
    for (int j = 0; j < cols_; ++j) m.set(0, j, (*this)(r, j));
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_, modulus_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(j, i, (*this)(i, j));
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](uint8_t x) { return x == 0; });
}

bool Matrix::operator<(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return e_ < o.e_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r(a.rows(), a.cols(), a.modulus());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a(i, j) + b(i, j));
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r(a.rows(), a.cols(), a.modulus());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a(i, j) - b(i, j));
    return r;
}

Matrix operator-(const Matrix& a) { return scale(-1, a); }

Matrix scale(long long s, const Matrix& a) {
    Matrix r(a.rows(), a.cols(), a.modulus());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, s * a(i, j));
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || a.modulus() != b.modulus())
        throw AmbientMismatch("matrix product shape mismatch");
    const int p = a.modulus();
    Matrix r(a.rows(), b.cols(), p);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            // entries < 13, so a row-dot fits in 32 bits for any sane size
            uint32_t acc = 0;
            for (int k = 0; k < a.cols(); ++k) acc += static_cast<uint32_t>(a(i, k)) * b(k, j);
            r.set(i, j, acc % p);
        }
    }
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows() == 0 && (a.cols() == 0 || a.cols() == b.cols())) return b;
    if (b.rows() == 0 && (b.cols() == 0 || b.cols() == a.cols())) return a;
    if (a.cols() != b.cols() || a.modulus() != b.modulus())
        throw AmbientMismatch("vstack shape mismatch");
    Matrix r(a.rows() + b.rows(), a.cols(), a.modulus());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.set(a.rows() + i, j, b(i, j));
    return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.modulus() != b.modulus())
        throw AmbientMismatch("hstack shape mismatch");
    Matrix r(a.rows(), a.cols() + b.cols(), a.modulus());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a(i, j));
        for (int j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b(i, j));
    }
    return r;
}

Matrix from_blocks(const std::vector<std::vector<Matrix>>& grid) {
    Matrix out;
    bool first = true;
    for (const auto& brow : grid) {
        Matrix rowm = brow.at(0);
        for (size_t j = 1; j < brow.size(); ++j) rowm = hstack(rowm, brow[j]);
        out = first ? rowm : vstack(out, rowm);
        first = false;
    }
    return out;
}

RrefResult rref(const Matrix& m) {
    const int p = m.modulus();
    Matrix a = m;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a(i, c) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < a.cols(); ++j) {
                int t = a(r, j);
                a.set(r, j, a(pr, j));
                a.set(pr, j, t);
            }
        int inv = inv_mod(a(r, c), p);
        for (int j = c; j < a.cols(); ++j) a.set(r, j, a(r, j) * inv);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            int f = a(i, c);
            if (f == 0) continue;
            for (int j = c; j < a.cols(); ++j) a.set(i, j, a(i, j) - static_cast<long long>(f) * a(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return {a, pivots};
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw Error("inverse of non-square matrix");
    const int n = m.rows();
    auto res = rref(hstack(m, Matrix::identity(n, m.modulus())));
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(res.pivots.size()) <= i || res.pivots[i] != i)
            throw SingularMatrix("matrix is singular");
    Matrix inv(n, n, m.modulus());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.set(i, j, res.reduced(i, n + j));
    return inv;
}

Matrix kernel_basis(const Matrix& constraints) {
    const int p = constraints.modulus();
    const int n = constraints.cols();
    auto res = rref(constraints);
    std::vector<bool> is_pivot(n, false);
    for (int c : res.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix basis(static_cast<int>(free_cols.size()), n, p);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int f = free_cols[k];
        basis.set(static_cast<int>(k), f, 1);
        for (size_t i = 0; i < res.pivots.size(); ++i)
            basis.set(static_cast<int>(k), res.pivots[i], -static_cast<long long>(res.reduced(static_cast<int>(i), f)));
    }
    return basis;
}

Matrix eigenspace(const Matrix& m, Fp lam) {
    if (!m.is_square()) throw Error("eigenspace of non-square matrix");
    if (m.modulus() != lam.modulus()) throw AmbientMismatch("eigenvalue modulus mismatch");
    Matrix shifted = m - scale(lam.value(), Matrix::identity(m.rows(), m.modulus()));
    // row vectors x with x*shifted = 0
    return kernel_basis(shifted.transpose());
}

Matrix pow(const Matrix& m, unsigned k) {
    Matrix r = Matrix::identity(m.rows(), m.modulus());
    for (unsigned i = 0; i < k; ++i) r = r * m;
    return r;
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << static_cast<int>(m(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

size_t MatrixHash::operator()(const Matrix& m) const {
    // FNV-1a over dims + bytes
    size_t h = 1469598103934665603ull;
    auto mix = [&h](uint8_t b) {
        h ^= b;
        h *= 1099511628211ull;
    };
    mix(static_cast<uint8_t>(m.rows()));
    mix(static_cast<uint8_t>(m.cols()));
    for (uint8_t b : m.bytes()) mix(b);
    return h;
}

} // namespace mathon
