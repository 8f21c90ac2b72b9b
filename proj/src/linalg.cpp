#include "cbn/linalg.hpp"

#include "cbn/errors.hpp"

namespace cbn {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::append_row(const Vector& values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw InvalidArgument("row width mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    for (std::size_t j = data_.size() - cols_; j < data_.size(); ++j) data_[j].canonicalize();
    ++rows_;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
}

Vector vec_mat(const Vector& v, const Matrix& m) {
    if (v.size() != m.rows()) throw InvalidArgument("vec_mat: size mismatch");
    Vector out(m.cols(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) != 0) out[j] += v[i] * m(i, j);
        }
    }
    return out;
}

Vector mat_vec(const Matrix& m, const Vector& v) {
    if (v.size() != m.cols()) throw InvalidArgument("mat_vec: size mismatch");
    Vector out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) != 0 && v[j] != 0) out[i] += m(i, j) * v[j];
        }
    }
    return out;
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw InvalidArgument("dot: size mismatch");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("mat_mul: size mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

Matrix mat_pow(const Matrix& m, std::size_t k) {
    if (m.rows() != m.cols()) throw InvalidArgument("mat_pow: matrix is not square");
    Matrix result = Matrix::identity(m.rows());
    Matrix base = m;
    while (k > 0) {
        if (k & 1) result = mat_mul(result, base);
        k >>= 1;
        if (k > 0) base = mat_mul(base, base);
    }
    return result;
}

void LinearSystem::add_equation(const Vector& coefficients, const Rational& rhs) {
    a.append_row(coefficients);
    b.push_back(rhs);
    b.back().canonicalize();
    if (nonnegative.size() < a.cols()) nonnegative.resize(a.cols(), false);
}

bool LinearSystem::is_solution(const Vector& x) const {
    if (x.size() != a.cols()) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (j < nonnegative.size() && nonnegative[j] && x[j] < 0) return false;
    }
    return mat_vec(a, x) == b;
}

bool AffineSpace::contains(const Vector& x) const {
    if (empty() || x.size() != particular->size()) return false;
    // x - p must lie in span(basis): solve basis^T t = x - p.
    const std::size_t n = x.size();
    Matrix m(n, basis.size() + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < basis.size(); ++k) m(i, k) = basis[k][i];
        m(i, basis.size()) = x[i] - (*particular)[i];
    }
    auto pivots = rref(m, basis.size());
    for (std::size_t i = pivots.size(); i < n; ++i) {
        if (m(i, basis.size()) != 0) return false;
    }
    return true;
}

std::vector<std::size_t> rref(Matrix& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        }
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (m(r, j) != 0) m(i, j) -= factor * m(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

AffineSpace solve_affine(const LinearSystem& sys) {
    const std::size_t n = sys.num_unknowns();
    const std::size_t rows = sys.num_equations();
    Matrix aug(rows, n + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = sys.a(i, j);
        aug(i, n) = sys.b[i];
    }
    const auto pivots = rref(aug, n);
    AffineSpace out;
    for (std::size_t i = pivots.size(); i < rows; ++i) {
        if (aug(i, n) != 0) return out;
    }
    Vector particular(n, Rational(0));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        particular[pivots[i]] = aug(i, n);
        is_pivot[pivots[i]] = true;
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug(i, f);
        out.basis.push_back(std::move(v));
    }
    out.particular = std::move(particular);
    return out;
}

std::string to_string(PolytopeClass::Kind kind) {
    switch (kind) {
        case PolytopeClass::Kind::Empty: return "Empty";
        case PolytopeClass::Kind::Point: return "Point";
        case PolytopeClass::Kind::Infinite: return "Infinite";
    }
    return "Unknown";
}

PolytopeClass classify_polytope(const AffineSpace& space) {
    PolytopeClass out;
    out.space = space;
    if (space.empty()) return out;
    const auto& p = *space.particular;
    const std::size_t n = p.size();

    // Rows of k span the orthogonal complement of span(basis), so that the
    // space is exactly {x : k x = k p}.
    Matrix k;
    if (space.basis.empty()) {
        k = Matrix::identity(n);
    } else {
        LinearSystem ortho;
        for (const auto& v : space.basis) ortho.add_equation(v, 0);
        for (auto& w : solve_affine(ortho).basis) k.append_row(w);
    }
    if (k.rows() == 0) k = Matrix(0, n);
    const Vector rhs = mat_vec(k, p);

    detail::StandardFormLp lp(k, rhs);
    if (!lp.feasible()) return out;
    out.witness = lp.point();
    out.kind = PolytopeClass::Kind::Point;
    for (const auto& d : space.basis) {
        const Rational at_witness = dot(d, out.witness);
        auto hi = lp.maximize(d);
        Vector neg(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) neg[i] = -d[i];
        auto lo = lp.maximize(neg);
        if (!hi || !lo || *hi != at_witness || -*lo != at_witness) {
            out.kind = PolytopeClass::Kind::Infinite;
            break;
        }
    }
    return out;
}

AffineSpace null_space_left(const Matrix& p) {
    const std::size_t n = p.rows();
    if (p.cols() != n) throw InvalidArgument("null_space_left: matrix is not square");
    LinearSystem sys;
    for (std::size_t j = 0; j < n; ++j) {
        Vector row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = p(i, j) - (i == j ? 1 : 0);
        sys.add_equation(row, 0);
    }
    sys.add_equation(Vector(n, Rational(1)), 1);
    return solve_affine(sys);
}

namespace detail {

void StandardFormLp::Tableau::pivot(std::size_t row, std::size_t col) {
    const std::size_t width = t.cols();
    const Rational inv = 1 / t(row, col);
    for (std::size_t j = 0; j < width; ++j) t(row, j) *= inv;
    for (std::size_t i = 0; i < t.rows(); ++i) {
        if (i == row || t(i, col) == 0) continue;
        const Rational factor = t(i, col);
        for (std::size_t j = 0; j < width; ++j) {
            if (t(row, j) != 0) t(i, j) -= factor * t(row, j);
        }
    }
    basis[row] = col;
}

bool StandardFormLp::optimize(Tableau& tab, const Vector& c, std::size_t usable_cols) {
    const std::size_t m = tab.t.rows();
    const std::size_t rhs = tab.t.cols() - 1;
    std::vector<bool> in_basis(usable_cols, false);
    while (true) {
        std::fill(in_basis.begin(), in_basis.end(), false);
        for (auto b : tab.basis) {
            if (b < usable_cols) in_basis[b] = true;
        }
        // Bland: smallest improving column enters.
        std::optional<std::size_t> entering;
        for (std::size_t j = 0; j < usable_cols && !entering; ++j) {
            if (in_basis[j]) continue;
            Rational reduced = c[j];
            for (std::size_t i = 0; i < m; ++i) {
                if (tab.t(i, j) != 0) reduced -= c[tab.basis[i]] * tab.t(i, j);
            }
            if (reduced > 0) entering = j;
        }
        if (!entering) return true;
        const std::size_t j = *entering;
        std::optional<std::size_t> leaving;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.t(i, j) <= 0) continue;
            Rational ratio = tab.t(i, rhs) / tab.t(i, j);
            if (!leaving || ratio < best || (ratio == best && tab.basis[i] < tab.basis[*leaving])) {
                leaving = i;
                best = ratio;
            }
        }
        if (!leaving) return false;
        tab.pivot(*leaving, j);
    }
}

StandardFormLp::StandardFormLp(const Matrix& a, const Vector& b) : n_(a.cols()) {
    const std::size_t m = a.rows();
    if (b.size() != m) throw InvalidArgument("StandardFormLp: size mismatch");
    // Columns: n originals, m artificials, rhs.
    tab_.t = Matrix(m, n_ + m + 1);
    tab_.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n_; ++j) tab_.t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
        tab_.t(i, n_ + i) = 1;
        tab_.t(i, n_ + m) = flip ? Rational(-b[i]) : b[i];
        tab_.basis[i] = n_ + i;
    }
    Vector phase_one(n_ + m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) phase_one[n_ + i] = -1;
    optimize(tab_, phase_one, n_ + m);

    for (std::size_t i = 0; i < m; ++i) {
        if (tab_.basis[i] >= n_ && tab_.t(i, n_ + m) != 0) return;  // infeasible
    }
    feasible_ = true;

    // Drive remaining (zero-valued) artificials out of the basis; rows where
    // that is impossible are redundant and dropped.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < m; ++i) {
        if (tab_.basis[i] >= n_) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (tab_.t(i, j) != 0) {
                    tab_.pivot(i, j);
                    break;
                }
            }
        }
        if (tab_.basis[i] < n_) keep.push_back(i);
    }
    Tableau reduced;
    reduced.t = Matrix(keep.size(), n_ + 1);
    for (std::size_t r = 0; r < keep.size(); ++r) {
        for (std::size_t j = 0; j < n_; ++j) reduced.t(r, j) = tab_.t(keep[r], j);
        reduced.t(r, n_) = tab_.t(keep[r], n_ + m);
        reduced.basis.push_back(tab_.basis[keep[r]]);
    }
    tab_ = std::move(reduced);
}

Vector StandardFormLp::point() const {
    Vector x(n_, Rational(0));
    for (std::size_t i = 0; i < tab_.basis.size(); ++i) x[tab_.basis[i]] = tab_.t(i, n_);
    return x;
}

std::optional<Rational> StandardFormLp::maximize(const Vector& c, Vector* argmax) const {
    if (!feasible_) throw InvalidArgument("maximize on an infeasible program");
    if (c.size() != n_) throw InvalidArgument("objective size mismatch");
    Tableau tab = tab_;
    if (!optimize(tab, c, n_)) return std::nullopt;
    Vector x(n_, Rational(0));
    for (std::size_t i = 0; i < tab.basis.size(); ++i) x[tab.basis[i]] = tab.t(i, n_);
    if (argmax) *argmax = x;
    return dot(c, x);
}

}  // namespace detail

}  // namespace cbn
