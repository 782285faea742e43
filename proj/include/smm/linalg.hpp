#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace smm {

using Scalar = std::uint32_t;

constexpr Scalar kDefaultModulus = 32003;

class LinalgError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arithmetic in F_p. All inputs are assumed reduced.
inline Scalar add_mod(Scalar a, Scalar b, Scalar p) { Scalar s = a + b; return s >= p ? s - p : s; }
inline Scalar sub_mod(Scalar a, Scalar b, Scalar p) { return a >= b ? a - b : a + p - b; }
inline Scalar mul_mod(Scalar a, Scalar b, Scalar p)
{
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p);
}
inline Scalar neg_mod(Scalar a, Scalar p) { return a == 0 ? 0 : p - a; }
Scalar pow_mod(Scalar a, std::uint64_t e, Scalar p);
Scalar inv_mod(Scalar a, Scalar p);
Scalar reduce_mod(long long v, Scalar p);
bool is_prime(Scalar p);

// Dense row-major matrix over F_p. The modulus travels with the matrix so that
// mixing moduli is caught at the operation that mixes them.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(std::size_t rows, std::size_t cols, Scalar p = kDefaultModulus);

    static FieldMatrix identity(std::size_t n, Scalar p = kDefaultModulus);
    static FieldMatrix from_rows(const std::vector<std::vector<long long>>& rows, Scalar p = kDefaultModulus);
    static FieldMatrix column(const std::vector<Scalar>& v, Scalar p = kDefaultModulus);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar modulus() const { return p_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Scalar operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<Scalar>& data() const { return a_; }

    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix operator+(const FieldMatrix& o) const;
    FieldMatrix operator-(const FieldMatrix& o) const;
    FieldMatrix scaled(Scalar c) const;
    FieldMatrix transpose() const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    std::vector<Scalar> col(std::size_t j) const;
    std::vector<Scalar> row(std::size_t i) const;

    bool is_zero() const;
    bool operator==(const FieldMatrix& o) const = default;

    FieldMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const FieldMatrix& b);
    void add_block(std::size_t r0, std::size_t c0, const FieldMatrix& b);
    FieldMatrix select_columns(const std::vector<std::size_t>& idx) const;
    FieldMatrix select_rows(const std::vector<std::size_t>& idx) const;

    static FieldMatrix hstack(const FieldMatrix& a, const FieldMatrix& b);
    static FieldMatrix vstack(const FieldMatrix& a, const FieldMatrix& b);
    static FieldMatrix direct_sum(const FieldMatrix& a, const FieldMatrix& b);

    std::string to_string() const;

private:
    void check_same_modulus(const FieldMatrix& o) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Scalar p_ = kDefaultModulus;
    std::vector<Scalar> a_;
};

struct RrefResult {
    FieldMatrix rref;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

RrefResult rref_decompose(const FieldMatrix& m);

struct LinearSolution {
    std::optional<std::vector<Scalar>> particular;  // empty when inconsistent
    FieldMatrix kernel;                              // columns form a basis of ker A
    bool consistent() const { return particular.has_value(); }
};

LinearSolution solve_linear(const FieldMatrix& a, const std::vector<Scalar>& b);

struct KernelCokernel {
    FieldMatrix kernel;     // cols(A) x dim ker, columns a basis
    FieldMatrix cokernel;   // (rows(A) - rank) x rows(A), annihilates im A
};

KernelCokernel kernel_cokernel(const FieldMatrix& a);

std::size_t rank(const FieldMatrix& a);
FieldMatrix kernel_basis(const FieldMatrix& a);
FieldMatrix cokernel_projection(const FieldMatrix& a);
FieldMatrix column_space_basis(const FieldMatrix& a);
std::optional<FieldMatrix> inverse(const FieldMatrix& a);
bool is_invertible(const FieldMatrix& a);
// For A with full column rank: L with L*A = I.
FieldMatrix left_inverse(const FieldMatrix& a);
// For A with full row rank: R with A*R = I.
FieldMatrix right_inverse(const FieldMatrix& a);
FieldMatrix power(const FieldMatrix& a, std::size_t e);
Scalar trace(const FieldMatrix& a);

// Characteristic polynomial, coefficients low degree first, monic.
std::vector<Scalar> characteristic_polynomial(const FieldMatrix& a);
// Distinct roots in F_p of a polynomial (low degree first), ascending.
std::vector<Scalar> polynomial_roots(const std::vector<Scalar>& f, Scalar p, std::mt19937_64& rng);
// Distinct eigenvalues of a square matrix lying in F_p.
std::vector<Scalar> eigenvalues(const FieldMatrix& a, std::mt19937_64& rng);

// Incrementally maintained row space of vectors in F_p^n.
// Supports membership, reduction and coordinates relative to the inserted vectors.
class VectorSpan {
public:
    VectorSpan(std::size_t n, Scalar p);

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    Scalar modulus() const { return p_; }

    // Reduce v against the current basis; returns the remainder.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;
    bool contains(const std::vector<Scalar>& v) const;
    // Inserts v; returns true when v was independent of the span.
    bool insert(const std::vector<Scalar>& v);
    // Coordinates of v in terms of the independent inserted vectors (in insertion order).
    std::optional<std::vector<Scalar>> coordinates(const std::vector<Scalar>& v) const;

private:
    std::size_t n_;
    Scalar p_;
    std::vector<std::vector<Scalar>> rows_;   // echelon rows, pivot entry 1
    std::vector<std::size_t> pivot_;
    std::vector<std::vector<Scalar>> combo_;  // row in terms of inserted vectors
};

bool is_zero_vector(const std::vector<Scalar>& v);

}  // namespace smm
