#include "heegaard/exactalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heegaard {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& entries) {
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

void IntMatrix::set_row(std::size_t i, const IntVector& values) {
    if (values.size() != cols_) throw std::invalid_argument("IntMatrix::set_row: length mismatch");
    std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntVector IntMatrix::apply(const IntVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: length mismatch");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

Int IntMatrix::max_abs_entry() const {
    Int best = 0;
    for (const auto& x : data_) best = std::max(best, Int(abs(x)));
    return best;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix product: dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << heegaard::to_string(row(i));
    }
    os << ']';
    return os.str();
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column mismatch");
    IntMatrix m(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i) m.set_row(i, top.row(i));
    for (std::size_t i = 0; i < bottom.rows(); ++i) m.set_row(top.rows() + i, bottom.row(i));
    return m;
}

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right) {
    if (left.rows() != right.rows()) throw std::invalid_argument("hstack: row mismatch");
    IntMatrix m(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) m(i, j) = left(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j) m(i, left.cols() + j) = right(i, j);
    }
    return m;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

IntVector SmithDecomposition::diagonal() const {
    const std::size_t n = std::min(d.rows(), d.cols());
    IntVector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = d(i, i);
    return out;
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    for (const auto& x : diagonal())
        if (x != 0) ++r;
    return r;
}

namespace {

// Applies every elementary operation to the working matrix and mirrors it
// into the transforms and their inverses.
struct SmithState {
    IntMatrix a, u, v, u_inv, v_inv;

    void swap_rows(std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        u.swap_rows(i, j);
        u_inv.swap_cols(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        v.swap_cols(i, j);
        v_inv.swap_rows(i, j);
    }
    // row_t += c * row_s
    void add_row(std::size_t t, std::size_t s, const Int& c) {
        if (c == 0) return;
        a.add_row_multiple(t, s, c);
        u.add_row_multiple(t, s, c);
        u_inv.add_col_multiple(s, t, -c);
    }
    // col_t += c * col_s
    void add_col(std::size_t t, std::size_t s, const Int& c) {
        if (c == 0) return;
        a.add_col_multiple(t, s, c);
        v.add_col_multiple(t, s, c);
        v_inv.add_row_multiple(s, t, -c);
    }
    void negate_row(std::size_t i) {
        a.negate_row(i);
        u.negate_row(i);
        u_inv.negate_col(i);
    }
};

}  // namespace

SmithDecomposition snf(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    SmithState s{m, IntMatrix::identity(rows), IntMatrix::identity(cols), IntMatrix::identity(rows),
                 IntMatrix::identity(cols)};

    const std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Minimal nonzero |entry| in the trailing block becomes the pivot.
            std::size_t pi = rows, pj = cols;
            Int best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    const Int& x = s.a(i, j);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (pi == rows || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == rows) {
                // Trailing block is zero: done.
                for (std::size_t i = 0; i < n; ++i)
                    if (s.a(i, i) < 0) s.negate_row(i);
                return {std::move(s.u), std::move(s.a), std::move(s.v), std::move(s.u_inv),
                        std::move(s.v_inv)};
            }
            s.swap_rows(t, pi);
            s.swap_cols(t, pj);

            const Int pivot = s.a(t, t);
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (s.a(i, t) == 0) continue;
                Int q = s.a(i, t) / pivot;
                s.add_row(i, t, -q);
                if (s.a(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (s.a(t, j) == 0) continue;
                Int q = s.a(t, j) / pivot;
                s.add_col(j, t, -q);
                if (s.a(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Row and column cleared; enforce divisibility of the rest.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (s.a(i, j) % pivot != 0) {
                        s.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (s.a(t, t) < 0) s.negate_row(t);
    }
    return {std::move(s.u), std::move(s.a), std::move(s.v), std::move(s.u_inv), std::move(s.v_inv)};
}

Int det(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
    const SmithDecomposition sd = snf(m);
    const IntVector c = sd.u.apply(b);
    IntVector y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Int di = i < m.cols() ? sd.d(i, i) : Int(0);
        if (di == 0) {
            if (c[i] != 0) return std::nullopt;
            continue;
        }
        if (c[i] % di != 0) return std::nullopt;
        y[i] = c[i] / di;
    }
    return sd.v.apply(y);
}

bool is_perfect_square(const Int& n) {
    if (n < 0) throw std::domain_error("is_perfect_square: negative input");
    const Int r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclid on column c among rows r.. until a single nonzero remains.
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a(i, c) != 0 && (best == rows || abs(a(i, c)) < abs(a(best, c)))) best = i;
            if (best == rows) break;
            a.swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a(i, c) == 0) continue;
                a.add_row_multiple(i, r, -(a(i, c) / a(r, c)));
                if (a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0) a.negate_row(r);
        const Int pivot = a(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = a(i, c) / pivot;
            if (a(i, c) - q * pivot < 0) q -= 1;
            a.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    IntMatrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i) out.set_row(i, a.row(i));
    return out;
}

Int gcd_of(const IntVector& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, Int(abs(x)));
    return g;
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ')';
    return os.str();
}

}  // namespace heegaard
