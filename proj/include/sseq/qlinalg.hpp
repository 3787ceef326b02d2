#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sseq {

using Rational = mpq_class;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parses "n", "-n" or "n/d"; the result is canonical.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

// Dense row-major matrix over Q.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(std::size_t cols, const std::vector<std::vector<Rational>>& rows);
    static RatMatrix from_ints(const std::vector<std::vector<long>>& rows, std::size_t cols = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    bool is_zero() const;
    RatMatrix transpose() const;
    RatMatrix select_rows(const std::vector<std::size_t>& idx) const;
    RatMatrix select_cols(const std::vector<std::size_t>& idx) const;
    RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const RatMatrix& b);
    void append_row(std::span<const Rational> r);

    static RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom);
    static RatMatrix hstack(const RatMatrix& left, const RatMatrix& right);

    std::string to_string() const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a);
    friend RatMatrix operator*(const Rational& s, const RatMatrix& a);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Reduced row-echelon basis of the row space together with its pivot columns.
struct Echelon {
    RatMatrix basis;
    std::vector<std::size_t> pivots;
};

// Fraction-free Gauss-Jordan elimination. echelon() updates rows in parallel,
// echelon_serial() is the single-threaded reference; both return identical results.
Echelon echelon(const RatMatrix& m);
Echelon echelon_serial(const RatMatrix& m);

RatMatrix rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

// Some X with a * X == b, if one exists.
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b);
RatMatrix inverse(const RatMatrix& m);

// Linear map Q^source -> Q^target, acting on column vectors.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(std::size_t source_dim, std::size_t target_dim, RatMatrix matrix);
    explicit LinearMap(RatMatrix matrix);

    static LinearMap zero(std::size_t source_dim, std::size_t target_dim);
    static LinearMap identity(std::size_t n);

    std::size_t source_dim() const { return source_; }
    std::size_t target_dim() const { return target_; }
    const RatMatrix& matrix() const { return m_; }

    // Images of the row vectors of v, again as rows.
    RatMatrix apply_rows(const RatMatrix& v) const;

    std::size_t rank() const;
    bool is_zero() const { return m_.is_zero(); }
    bool is_injective() const { return rank() == source_; }
    bool is_surjective() const { return rank() == target_; }
    bool is_iso() const { return source_ == target_ && is_injective(); }

    friend bool operator==(const LinearMap&, const LinearMap&) = default;
    friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
    friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
    friend LinearMap operator*(const Rational& s, const LinearMap& a);

private:
    std::size_t source_ = 0;
    std::size_t target_ = 0;
    RatMatrix m_;
};

// g after f.
LinearMap compose(const LinearMap& g, const LinearMap& f);
// Block diagonal sum.
LinearMap direct_sum(const LinearMap& a, const LinearMap& b);

// Subspace of Q^n, stored as its canonical reduced row-echelon basis, so that
// equal subspaces compare equal.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t n);
    static Subspace full(std::size_t n);
    static Subspace span(std::size_t n, const RatMatrix& generators);

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == n_; }
    bool contains(std::span<const Rational> v) const;
    bool contains(const Subspace& u) const;

    // Canonical remainder of each row modulo this subspace (zero at every pivot column).
    RatMatrix reduce(const RatMatrix& rows) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t n_ = 0;
    RatMatrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const LinearMap& f);
Subspace image(const LinearMap& f);
Subspace image(const LinearMap& f, const Subspace& u);

struct Lattice {
    Subspace sum;
    Subspace intersection;
};
Lattice lattice(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

// f^{-1}(u).
Subspace preimage(const LinearMap& f, const Subspace& u);

// num / den with canonical coordinates: the complement is the reduced basis of
// num reduced modulo den, and coordinates are read at its pivot columns.
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(Subspace numerator, Subspace denominator);

    std::size_t ambient_dim() const { return num_.ambient_dim(); }
    std::size_t dim() const { return complement_.rows(); }
    const Subspace& numerator() const { return num_; }
    const Subspace& denominator() const { return den_; }
    // Rows form a basis of a complement of den in num; row i is the lift of coordinate e_i.
    const RatMatrix& complement() const { return complement_; }

    // Coordinates of rows lying in the numerator.
    RatMatrix coordinates(const RatMatrix& rows) const;
    RatMatrix lift(const RatMatrix& coords) const;
    LinearMap projection() const;
    LinearMap section() const;

private:
    Subspace num_;
    Subspace den_;
    RatMatrix complement_;
    std::vector<std::size_t> cpivots_;
};

struct Quotient {
    std::size_t dim = 0;
    LinearMap projection;
    LinearMap section;
};
Quotient quotient(const Subspace& v, const Subspace& u);

}  // namespace sseq
