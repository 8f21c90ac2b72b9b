#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cbn/rational.hpp"

namespace cbn {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    void append_row(const Vector& values);
    Matrix transposed() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Row vector times matrix.
Vector vec_mat(const Vector& v, const Matrix& m);
/// Matrix times column vector.
Vector mat_vec(const Matrix& m, const Vector& v);
Rational dot(const Vector& a, const Vector& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// m^k for square m, k >= 0.
Matrix mat_pow(const Matrix& m, std::size_t k);

/// A x = b, optionally with x_j >= 0 for flagged columns.
struct LinearSystem {
    Matrix a;
    Vector b;
    std::vector<bool> nonnegative;

    std::size_t num_equations() const { return a.rows(); }
    std::size_t num_unknowns() const { return a.cols(); }
    /// Adds one equation; coefficients must have num_unknowns() entries.
    void add_equation(const Vector& coefficients, const Rational& rhs);
    /// Exact check of every equation and every nonnegativity flag.
    bool is_solution(const Vector& x) const;
};

/// particular + span(basis), or the empty set.
struct AffineSpace {
    std::optional<Vector> particular;
    std::vector<Vector> basis;

    bool empty() const { return !particular.has_value(); }
    std::size_t dimension() const { return basis.size(); }
    /// True iff x lies in the space (exact membership test).
    bool contains(const Vector& x) const;
};

/// Reduces m in place to reduced row echelon form over its first
/// `pivot_cols` columns; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(Matrix& m, std::size_t pivot_cols);

/// Solution space of a.x = b (nonnegativity flags are ignored here).
AffineSpace solve_affine(const LinearSystem& sys);

struct PolytopeClass {
    enum class Kind { Empty, Point, Infinite };
    Kind kind = Kind::Empty;
    /// The unique point (Point) or one feasible vertex (Infinite).
    Vector witness;
    AffineSpace space;
};

std::string to_string(PolytopeClass::Kind kind);

/// Classifies {x in space : x >= 0} as empty, a single point, or infinite.
PolytopeClass classify_polytope(const AffineSpace& space);

/// Stationary row vectors of a square matrix: {g : g p = g, sum g = 1}.
AffineSpace null_space_left(const Matrix& p);

namespace detail {

/// Exact simplex over {x : a x = b, x >= 0} with Bland's rule.
class StandardFormLp {
public:
    /// Runs phase one.
    StandardFormLp(const Matrix& a, const Vector& b);

    bool feasible() const { return feasible_; }
    /// The current basic feasible solution.
    Vector point() const;
    /// max <c, x> over the polytope, or nullopt if unbounded. Requires feasible().
    std::optional<Rational> maximize(const Vector& c, Vector* argmax = nullptr) const;

private:
    struct Tableau {
        Matrix t;  // last column is the right-hand side
        std::vector<std::size_t> basis;
        void pivot(std::size_t row, std::size_t col);
    };
    // Returns false when unbounded.
    static bool optimize(Tableau& tab, const Vector& c, std::size_t usable_cols);

    std::size_t n_ = 0;
    bool feasible_ = false;
    Tableau tab_;
};

}  // namespace detail

}  // namespace cbn
