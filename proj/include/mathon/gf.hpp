#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

// Exact dense linear algebra over a prime field GF(p), p <= 13.
// Everything is a value; operations return fresh objects and never
// mutate their arguments.

namespace mathon {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularMatrix : Error {
    using Error::Error;
};
struct AmbientMismatch : Error {
    using Error::Error;
};

constexpr int kMaxModulus = 13;

bool is_valid_modulus(int p);

/// One element of GF(p), always stored reduced.
class Fp {
  public:
    Fp(long long value, int modulus);

    int value() const { return value_; }
    int modulus() const { return modulus_; }

    Fp operator+(Fp o) const;
    Fp operator-(Fp o) const;
    Fp operator*(Fp o) const;
    Fp operator-() const;
    Fp inverse() const; // throws SingularMatrix on 0

    bool operator==(const Fp&) const = default;

  private:
    int value_;
    int modulus_;
};

/// Dense row-major matrix over GF(p). Entries are bytes in [0, p).
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0), modulus_(3) {}
    Matrix(int rows, int cols, int modulus);

    static Matrix identity(int n, int modulus);
    static Matrix zero(int rows, int cols, int modulus) { return Matrix(rows, cols, modulus); }
    /// Rows given as integer lists; entries are reduced mod p.
    static Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows, int modulus);
    static Matrix from_rows(const std::vector<std::vector<int>>& rows, int modulus);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int modulus() const { return modulus_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    uint8_t operator()(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, long long v);

    const std::vector<uint8_t>& bytes() const { return e_; }

    Matrix row(int r) const;
    Matrix transpose() const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    bool operator==(const Matrix&) const = default;
    /// Lexicographic on (rows, cols, entries); gives the deterministic
    /// orders used for subspace and group-element sets.
    bool operator<(const Matrix& o) const;

  private:
    int rows_, cols_, modulus_;
    std::vector<uint8_t> e_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix scale(long long s, const Matrix& a);

Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
/// Assemble from a grid of equally-sized blocks.
Matrix from_blocks(const std::vector<std::vector<Matrix>>& grid);

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivots;
};

/// Unique reduced row echelon form; idempotent.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

/// Exact inverse; throws SingularMatrix when rank < n.
Matrix inverse(const Matrix& m);

/// Basis (as rows, possibly 0 of them) of {x : constraints * x^T = 0}.
/// dim = cols - rank(constraints).
Matrix kernel_basis(const Matrix& constraints);

/// Row eigenvectors: basis of {x : x * m = lam * x}, i.e. the kernel of
/// (m - lam*I) acting on row vectors. Matches the right line action
/// ell -> ell * g used by the group code.
Matrix eigenspace(const Matrix& m, Fp lam);

Matrix pow(const Matrix& m, unsigned k);

std::string to_string(const Matrix& m);

struct MatrixHash {
    size_t operator()(const Matrix& m) const;
};

} // namespace mathon
