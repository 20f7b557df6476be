/**
 * @file exactalg.hpp
 * @brief Exact integer and rational linear algebra.
 *
 * Everything in this library is computed over arbitrary-precision integers
 * (and rationals built from them). The routines here cover the lattice
 * operations the rest of the library needs: primitive vectors, Hermite and
 * Smith normal forms, integer linear systems, kernels, ranks over Q and
 * H-represented cones.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tvb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Int>;

/// Contract violation: bad dimensions, malformed data, unmet preconditions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

inline Int abs_value(const Int& x) { return x < 0 ? Int(-x) : x; }

/// floor(n / d), d != 0.
inline Int floor_div(const Int& n, const Int& d) {
    Int q = n / d;
    if (n % d != 0 && ((n < 0) != (d < 0))) --q;
    return q;
}

/// ceil(n / d), d != 0.
inline Int ceil_div(const Int& n, const Int& d) { return -floor_div(-n, d); }

/// Representative of n mod d in [0, |d|).
inline Int mod_floor(const Int& n, const Int& d) {
    Int r = n % d;
    if (r < 0) r += abs_value(d);
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int x = abs_value(a), y = abs_value(b);
    while (y != 0) {
        Int t = x % y;
        x = std::move(y);
        y = std::move(t);
    }
    return x;
}

inline Int lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return abs_value(a / gcd(a, b) * b);
}

inline Int ceil(const Rational& r) {
    return ceil_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

inline Int floor(const Rational& r) {
    return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

/// Renders a rational as "p" or "p/q".
inline std::string to_string(const Rational& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Parses "p" or "p/q" (q != 0); throws Error on malformed input.
inline Rational parse_rational(const std::string& text) {
    auto parse_int = [&](const std::string& s) -> Int {
        if (s.empty()) throw Error("malformed rational '" + text + "'");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw Error("malformed rational '" + text + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw Error("malformed rational '" + text + "'");
        return Int(s[0] == '+' ? s.substr(1) : s);
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    const Int num = parse_int(text.substr(0, slash));
    const Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + text + "'");
    return Rational(num, den);
}

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

inline IntVector make_vector(std::initializer_list<long long> values) {
    IntVector v;
    v.reserve(values.size());
    for (long long x : values) v.emplace_back(x);
    return v;
}

inline bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

/// gcd of the entries; 0 for the zero vector.
inline Int content(const IntVector& v) {
    Int g = 0;
    for (const Int& x : v) {
        if (x != 0) g = gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

/// v divided by the gcd of its entries; direction preserved.
inline IntVector primitive(const IntVector& v) {
    const Int g = content(v);
    if (g == 0) throw Error("zero vector has no primitive representative");
    if (g == 1) return v;
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

inline Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size())
        throw Error("dimension mismatch in dot product: " + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()));
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

inline IntVector add(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw Error("dimension mismatch in vector sum");
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline IntVector subtract(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw Error("dimension mismatch in vector difference");
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline IntVector scaled(const IntVector& v, const Int& k) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * k;
    return out;
}

inline IntVector negated(const IntVector& v) { return scaled(v, -1); }

/// Graded lexicographic order: coordinate sum first, then entries.
inline bool graded_less(const IntVector& a, const IntVector& b) {
    Int sa = 0, sb = 0;
    for (const Int& x : a) sa += x;
    for (const Int& x : b) sb += x;
    if (sa != sb) return sa < sb;
    return a < b;
}

inline std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Dense row-major integer matrix. Zero rows or columns are allowed.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw Error("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
        IntMatrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) throw Error("ragged matrix columns");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const {
        return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    IntVector column(std::size_t j) const {
        IntVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    std::vector<IntVector> row_list() const {
        std::vector<IntVector> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && (*this)(i, j) != 0) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row dst += k * row src
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
        if (k == 0) return;
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(src, j) != 0) (*this)(dst, j) += k * (*this)(src, j);
    }
    /// col dst += k * col src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& k) {
        if (k == 0) return;
        for (std::size_t i = 0; i < rows_; ++i)
            if ((*this)(i, src) != 0) (*this)(i, dst) += k * (*this)(i, src);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw Error("dimension mismatch in matrix product");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Int& x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0) c(i, j) += x * b(k, j);
            }
        return c;
    }

    friend IntVector operator*(const IntMatrix& a, const IntVector& x) {
        if (a.cols_ != x.size()) throw Error("dimension mismatch in matrix-vector product");
        IntVector y(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
        return y;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
inline Int determinant(IntMatrix a) {
    if (a.rows() != a.cols()) throw Error("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Normal forms
// ---------------------------------------------------------------------------

/// U * A = H with U unimodular and H in row Hermite normal form: the first
/// `rank` rows are nonzero, pivots are positive and strictly increasing in
/// column, entries above a pivot lie in [0, pivot).
struct HermiteForm {
    IntMatrix H;
    IntMatrix U;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

inline HermiteForm hermite_form(const IntMatrix& a) {
    HermiteForm out{a, IntMatrix::identity(a.rows()), 0, {}};
    IntMatrix& h = out.H;
    IntMatrix& u = out.U;
    std::size_t r = 0;
    for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
        bool has_pivot = false;
        for (;;) {
            std::size_t best = h.rows();
            for (std::size_t i = r; i < h.rows(); ++i)
                if (h(i, col) != 0 && (best == h.rows() || abs_value(h(i, col)) < abs_value(h(best, col))))
                    best = i;
            if (best == h.rows()) break;
            has_pivot = true;
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h(i, col) == 0) continue;
                const Int q = floor_div(h(i, col), h(r, col));
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (h(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!has_pivot) continue;
        if (h(r, col) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            const Int q = floor_div(h(i, col), h(r, col));
            h.add_row_multiple(i, r, -q);
            u.add_row_multiple(i, r, -q);
        }
        out.pivots.push_back(col);
        ++r;
    }
    out.rank = r;
    return out;
}

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    /// Nonzero diagonal entries of D, in order.
    std::vector<Int> invariant_factors() const {
        std::vector<Int> f;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
            if (D(i, i) != 0) f.push_back(D(i, i));
        return f;
    }
};

/// Pivoting always takes the smallest nonzero absolute value, so the output
/// is a deterministic function of the input.
inline SmithForm smith_normal_form(const IntMatrix& a) {
    SmithForm s{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    IntMatrix& d = s.D;
    const std::size_t m = d.rows(), n = d.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (d(i, j) != 0 && (pi == m || abs_value(d(i, j)) < abs_value(d(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m) return s;  // remaining block is zero
            d.swap_rows(t, pi);
            s.U.swap_rows(t, pi);
            d.swap_cols(t, pj);
            s.V.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                const Int q = d(i, t) / d(t, t);
                d.add_row_multiple(i, t, -q);
                s.U.add_row_multiple(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                const Int q = d(t, j) / d(t, t);
                d.add_col_multiple(j, t, -q);
                s.V.add_col_multiple(j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into row t and retry.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            d.add_row_multiple(t, bad, 1);
            s.U.add_row_multiple(t, bad, 1);
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            s.U.negate_row(t);
        }
    }
    return s;
}

/// Integer x with A x = b, if one exists.
inline std::optional<IntVector> solve_integer_linear(const IntMatrix& a, const IntVector& b) {
    if (b.size() != a.rows())
        throw Error("dimension mismatch: system has " + std::to_string(a.rows()) +
                    " equations but right-hand side has length " + std::to_string(b.size()));
    const SmithForm s = smith_normal_form(a);
    const IntVector ub = s.U * b;
    IntVector y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Int di = (i < a.cols()) ? s.D(i, i) : Int(0);
        if (di == 0) {
            if (ub[i] != 0) return std::nullopt;
            continue;
        }
        if (ub[i] % di != 0) return std::nullopt;
        y[i] = ub[i] / di;
    }
    return s.V * y;
}

// ---------------------------------------------------------------------------
// Lattices and ranks
// ---------------------------------------------------------------------------

/// Hermite-normal-form basis (as rows) of the lattice spanned by `vectors`.
inline std::vector<IntVector> lattice_basis(const std::vector<IntVector>& vectors, std::size_t dim) {
    if (vectors.empty()) return {};
    const HermiteForm hf = hermite_form(IntMatrix::from_rows(vectors, dim));
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < hf.rank; ++i) basis.push_back(hf.H.row(i));
    return basis;
}

/// Canonical representative of x modulo the lattice with Hermite basis `basis`.
/// Each pivot coordinate of the result lies in [0, pivot).
inline IntVector reduce_modulo_lattice(IntVector x, const std::vector<IntVector>& basis) {
    for (const IntVector& b : basis) {
        std::size_t p = 0;
        while (b[p] == 0) ++p;
        const Int q = floor_div(x[p], b[p]);
        if (q != 0)
            for (std::size_t j = p; j < x.size(); ++j) x[j] -= q * b[j];
    }
    return x;
}

/// Lattice basis (Hermite normal form, rows) of {x in Z^cols : A x = 0}.
inline std::vector<IntVector> kernel_basis(const IntMatrix& a) {
    const HermiteForm hf = hermite_form(a.transposed());
    std::vector<IntVector> rows;
    for (std::size_t i = hf.rank; i < a.cols(); ++i) rows.push_back(hf.U.row(i));
    return lattice_basis(rows, a.cols());
}

/// Incremental echelon basis of a Q-subspace, stored as primitive integer rows.
class RowSpace {
public:
    explicit RowSpace(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<IntVector>& rows() const { return rows_; }

    /// Adds v to the span; returns true when the rank grew.
    bool insert(IntVector v) {
        if (v.size() != dim_) throw Error("dimension mismatch in subspace insert");
        reduce(v);
        if (is_zero(v)) return false;
        std::size_t p = 0;
        while (v[p] == 0) ++p;
        if (v[p] < 0) v = negated(v);
        const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, p);
        rows_.insert(rows_.begin() + pos, primitive(v));
        return true;
    }

    bool contains(IntVector v) const {
        reduce(v);
        return is_zero(v);
    }

private:
    void reduce(IntVector& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const std::size_t p = pivots_[i];
            if (v[p] == 0) continue;
            const Int a = rows_[i][p], b = v[p];
            const Int g = gcd(a, b);
            const Int fa = a / g, fb = b / g;
            for (std::size_t j = 0; j < dim_; ++j) v[j] = fa * v[j] - fb * rows_[i][j];
            const Int c = content(v);
            if (c > 1)
                for (Int& x : v) x /= c;
        }
    }

    std::size_t dim_;
    std::vector<IntVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Rank over Q of a list of vectors of common length `dim`.
inline std::size_t rank_of(const std::vector<IntVector>& vectors, std::size_t dim) {
    RowSpace s(dim);
    for (const IntVector& v : vectors) {
        s.insert(v);
        if (s.rank() == dim) break;
    }
    return s.rank();
}

inline std::size_t rank_of(const IntMatrix& a) { return rank_of(a.row_list(), a.cols()); }

/// Basis of span(U) ∩ span(W) over Q, both given by spanning rows in Z^dim.
inline std::vector<IntVector> intersect_spans(const std::vector<IntVector>& u, const std::vector<IntVector>& w,
                                              std::size_t dim) {
    if (u.empty() || w.empty()) return {};
    // Solve sum alpha_i u_i - sum beta_j w_j = 0.
    IntMatrix m(dim, u.size() + w.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t r = 0; r < dim; ++r) m(r, i) = u[i][r];
    for (std::size_t j = 0; j < w.size(); ++j)
        for (std::size_t r = 0; r < dim; ++r) m(r, u.size() + j) = -w[j][r];
    RowSpace out(dim);
    for (const IntVector& k : kernel_basis(m)) {
        IntVector v(dim);
        for (std::size_t i = 0; i < u.size(); ++i)
            if (k[i] != 0)
                for (std::size_t r = 0; r < dim; ++r) v[r] += k[i] * u[i][r];
        out.insert(v);
    }
    return out.rows();
}

// ---------------------------------------------------------------------------
// Cones
// ---------------------------------------------------------------------------

/// Rational polyhedral cone {x : l . x >= 0 for every row l}.
class HalfspaceCone {
public:
    HalfspaceCone(std::size_t ambient_dim, std::vector<IntVector> inequalities)
        : ambient_dim_(ambient_dim), inequalities_(std::move(inequalities)) {
        if (ambient_dim_ == 0) throw Error("cone ambient dimension must be positive");
        for (std::size_t i = 0; i < inequalities_.size(); ++i) {
            if (inequalities_[i].size() != ambient_dim_)
                throw Error("inequality " + std::to_string(i) + " has length " +
                            std::to_string(inequalities_[i].size()) + ", expected " +
                            std::to_string(ambient_dim_));
            if (is_zero(inequalities_[i])) throw Error("inequality " + std::to_string(i) + " is zero");
        }
    }

    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<IntVector>& inequalities() const { return inequalities_; }

    IntMatrix matrix() const { return IntMatrix::from_rows(inequalities_, ambient_dim_); }

    friend bool operator==(const HalfspaceCone& a, const HalfspaceCone& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.inequalities_ == b.inequalities_;
    }

private:
    std::size_t ambient_dim_;
    std::vector<IntVector> inequalities_;
};

inline bool cone_member(const HalfspaceCone& c, const IntVector& x) {
    if (x.size() != c.ambient_dim())
        throw Error("dimension mismatch: point has length " + std::to_string(x.size()) + ", cone lives in " +
                    std::to_string(c.ambient_dim()));
    for (const IntVector& l : c.inequalities())
        if (dot(l, x) < 0) return false;
    return true;
}

/// Lattice basis of the lineality space {x : l . x = 0 for all rows}; empty
/// exactly when the cone is pointed.
inline std::vector<IntVector> lineality_basis(const HalfspaceCone& c) {
    return kernel_basis(c.matrix());
}

}  // namespace tvb
