#include "ecospa/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ecospa {

std::string Matrix::shape_str() const {
    return std::to_string(rows) + "x" + std::to_string(cols);
}

Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) {
        throw ShapeError("matmul: lhs " + a.shape_str() + " incompatible with rhs " +
                         b.shape_str());
    }
    Matrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* arow = a.row_ptr(i);
        double* crow = c.row_ptr(i);
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = arow[k];
            if (aik == 0.0) continue;
            const double* brow = b.row_ptr(k);
            for (std::size_t j = 0; j < b.cols; ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

namespace {

void check_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (!a.same_shape(b)) {
        throw ShapeError(std::string(op) + ": " + a.shape_str() + " vs " + b.shape_str());
    }
}

}  // namespace

Matrix add(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b, "add");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] += b.data[i];
    return c;
}

Matrix sub(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b, "sub");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] -= b.data[i];
    return c;
}

Matrix scale(const Matrix& m, double s) {
    Matrix c = m;
    for (double& x : c.data) x *= s;
    return c;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b, "hadamard");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] *= b.data[i];
    return c;
}

Matrix outer(const std::vector<double>& u, const std::vector<double>& v) {
    Matrix c(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) c(i, j) = u[i] * v[j];
    return c;
}

std::vector<double> column_norms(const Matrix& m) {
    if (m.empty()) throw ShapeError("column_norms: empty matrix " + m.shape_str());
    std::vector<double> acc(m.cols, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        const double* row = m.row_ptr(i);
        for (std::size_t j = 0; j < m.cols; ++j) acc[j] += row[j] * row[j];
    }
    for (double& x : acc) x = std::sqrt(x);
    return acc;
}

std::vector<double> row_norms(const Matrix& m) {
    if (m.empty()) throw ShapeError("row_norms: empty matrix " + m.shape_str());
    std::vector<double> out(m.rows, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        const double* row = m.row_ptr(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) acc += row[j] * row[j];
        out[i] = std::sqrt(acc);
    }
    return out;
}

Matrix remove_column(const Matrix& m, std::size_t j) {
    if (j >= m.cols) {
        throw ShapeError("remove_column: index " + std::to_string(j) + " out of range for " +
                         m.shape_str());
    }
    if (m.cols <= 1) {
        throw ShapeError("remove_column: removal would empty matrix " + m.shape_str());
    }
    Matrix out(m.rows, m.cols - 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        const double* src = m.row_ptr(i);
        double* dst = out.row_ptr(i);
        std::copy(src, src + j, dst);
        std::copy(src + j + 1, src + m.cols, dst + j);
    }
    return out;
}

Matrix remove_row(const Matrix& m, std::size_t i) {
    if (i >= m.rows) {
        throw ShapeError("remove_row: index " + std::to_string(i) + " out of range for " +
                         m.shape_str());
    }
    if (m.rows <= 1) {
        throw ShapeError("remove_row: removal would empty matrix " + m.shape_str());
    }
    Matrix out(m.rows - 1, m.cols);
    std::copy(m.data.begin(), m.data.begin() + i * m.cols, out.data.begin());
    std::copy(m.data.begin() + (i + 1) * m.cols, m.data.end(),
              out.data.begin() + i * m.cols);
    return out;
}

double gelu_scalar(double x) {
    // Exact erf form: x * Phi(x).
    return 0.5 * x * (1.0 + std::erf(x * std::numbers::sqrt2 / 2.0));
}

double gelu_prime_scalar(double x) {
    const double phi = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
    const double Phi = 0.5 * (1.0 + std::erf(x * std::numbers::sqrt2 / 2.0));
    return Phi + x * phi;
}

double silu_scalar(double x) {
    return x / (1.0 + std::exp(-x));
}

double silu_prime_scalar(double x) {
    const double s = 1.0 / (1.0 + std::exp(-x));
    return s * (1.0 + x * (1.0 - s));
}

namespace {

template <typename F>
Matrix map(const Matrix& m, F f) {
    Matrix out = m;
    for (double& x : out.data) x = f(x);
    return out;
}

}  // namespace

Matrix gelu(const Matrix& m) { return map(m, gelu_scalar); }
Matrix gelu_prime(const Matrix& m) { return map(m, gelu_prime_scalar); }
Matrix silu(const Matrix& m) { return map(m, silu_scalar); }

Matrix softmax_rows(const Matrix& m) {
    Matrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        const double* src = m.row_ptr(i);
        double* dst = out.row_ptr(i);
        double mx = src[0];
        for (std::size_t j = 1; j < m.cols; ++j) mx = std::max(mx, src[j]);
        double sum = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) {
            dst[j] = std::exp(src[j] - mx);
            sum += dst[j];
        }
        for (std::size_t j = 0; j < m.cols; ++j) dst[j] /= sum;
    }
    return out;
}

Matrix softmax_rows_causal(const Matrix& m) {
    Matrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        const double* src = m.row_ptr(i);
        double* dst = out.row_ptr(i);
        const std::size_t lim = std::min(i + 1, m.cols);
        double mx = src[0];
        for (std::size_t j = 1; j < lim; ++j) mx = std::max(mx, src[j]);
        double sum = 0.0;
        for (std::size_t j = 0; j < lim; ++j) {
            dst[j] = std::exp(src[j] - mx);
            sum += dst[j];
        }
        for (std::size_t j = 0; j < lim; ++j) dst[j] /= sum;
    }
    return out;
}

double sum_of_squares(const Matrix& m) {
    double acc = 0.0;
    for (double x : m.data) acc += x * x;
    return acc;
}

double frobenius_norm(const Matrix& m) { return std::sqrt(sum_of_squares(m)); }

bool all_finite(const Matrix& m) {
    for (double x : m.data)
        if (!std::isfinite(x)) return false;
    return true;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b, "max_abs_diff");
    double mx = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        mx = std::max(mx, std::abs(a.data[i] - b.data[i]));
    return mx;
}

}  // namespace ecospa
