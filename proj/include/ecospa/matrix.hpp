#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ecospa/error.hpp"

namespace ecospa {

// Dense row-major matrix of 64-bit floats. The single value carrier for
// weights, activations and gradients.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;  // rows * cols, row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    double* row_ptr(std::size_t i) { return data.data() + i * cols; }
    const double* row_ptr(std::size_t i) const { return data.data() + i * cols; }

    std::size_t size() const { return rows * cols; }
    bool empty() const { return rows == 0 || cols == 0; }

    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
    std::string shape_str() const;
};

Matrix identity(std::size_t n);

// ---- element-wise / structural -------------------------------------------

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& m, double s);
Matrix hadamard(const Matrix& a, const Matrix& b);
Matrix outer(const std::vector<double>& u, const std::vector<double>& v);

std::vector<double> column_norms(const Matrix& m);
std::vector<double> row_norms(const Matrix& m);

Matrix remove_column(const Matrix& m, std::size_t j);
Matrix remove_row(const Matrix& m, std::size_t i);

// ---- activations / reductions --------------------------------------------

double gelu_scalar(double x);
double gelu_prime_scalar(double x);
double silu_scalar(double x);
double silu_prime_scalar(double x);

Matrix gelu(const Matrix& m);
Matrix gelu_prime(const Matrix& m);
Matrix silu(const Matrix& m);

// Row-wise softmax, stabilized by row-max subtraction. The causal variant
// restricts row t to columns 0..t and zero-fills the rest.
Matrix softmax_rows(const Matrix& m);
Matrix softmax_rows_causal(const Matrix& m);

double frobenius_norm(const Matrix& m);
double sum_of_squares(const Matrix& m);

bool all_finite(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace ecospa
