#ifndef MTPV_MATRIX_HPP
#define MTPV_MATRIX_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mtpv/errors.hpp"

namespace mtpv {

// Dense row-major matrix of doubles. Column vectors are n x 1.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

    static Matrix zeros(int r, int c) { return Matrix(r, c); }
    static Matrix constant(int r, int c, double v) {
        Matrix m(r, c);
        std::fill(m.data.begin(), m.data.end(), v);
        return m;
    }
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows_init);
    static Matrix column(const std::vector<double>& v);

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
    double& operator()(int r, int c) { return at(r, c); }
    double operator()(int r, int c) const { return at(r, c); }

    std::size_t size() const { return data.size(); }
    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
    std::string shape_str() const { return std::to_string(rows) + "x" + std::to_string(cols); }
    bool all_finite() const;
};

// Deterministic generator: mt19937_64 (sequence fixed by the C++ standard) with an
// explicit bits-to-double mapping, so identical seeds give identical draws on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1), 53-bit resolution
    double next_unit() { return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    // unbiased integer in [0, n)
    std::uint64_t next_below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

// Derives an independent, reproducible stream per purpose. Keeps parameter
// initialization order-insensitive: each tensor draws from its own stream.
std::uint64_t derive_seed(std::uint64_t base, const std::string& tag);

enum class Activation { Tanh, Sigmoid };

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

std::vector<double> softmax(const std::vector<double>& v);
Matrix softmax_flat(const Matrix& m); // softmax over all entries

std::vector<double> activation(const std::vector<double>& v, Activation kind);
double activate(double x, Activation kind);

// Entries uniform in +-sqrt(6 / (rows + cols)).
Matrix xavier_init(int rows, int cols, Rng& rng);

// Inverted dropout: kept entries are scaled by 1/(1-rate) so inference needs no rescale.
std::vector<double> dropout_mask(int len, double rate, Rng& rng);

} // namespace mtpv

#endif
