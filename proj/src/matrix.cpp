#include "mtpv/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace mtpv {

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows_init) {
    Matrix m(static_cast<int>(rows_init.size()),
             rows_init.size() ? static_cast<int>(rows_init.begin()->size()) : 0);
    int r = 0;
    for (const auto& row : rows_init) {
        if (static_cast<int>(row.size()) != m.cols)
            throw DimensionError("from_rows: ragged row lengths");
        int c = 0;
        for (double v : row) m.at(r, c++) = v;
        ++r;
    }
    return m;
}

Matrix Matrix::column(const std::vector<double>& v) {
    Matrix m(static_cast<int>(v.size()), 1);
    m.data = v;
    return m;
}

bool Matrix::all_finite() const {
    return std::all_of(data.begin(), data.end(), [](double v) { return std::isfinite(v); });
}

std::uint64_t Rng::next_below(std::uint64_t n) {
    if (n == 0) throw ArgumentError("next_below: n must be positive");
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

std::uint64_t derive_seed(std::uint64_t base, const std::string& tag) {
    // FNV-1a over the tag, mixed with the base seed
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ull;
    }
    h ^= base + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows)
        throw DimensionError("matmul: incompatible shapes " + a.shape_str() + " * " + b.shape_str());
    Matrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        const double* arow = &a.data[static_cast<std::size_t>(i) * a.cols];
        double* crow = &c.data[static_cast<std::size_t>(i) * c.cols];
        for (int k = 0; k < a.cols; ++k) {
            const double aik = arow[k];
            if (aik == 0.0) continue;
            const double* brow = &b.data[static_cast<std::size_t>(k) * b.cols];
            for (int j = 0; j < b.cols; ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

std::vector<double> softmax(const std::vector<double>& v) {
    if (v.empty()) throw ArgumentError("softmax: empty input");
    const double mx = *std::max_element(v.begin(), v.end());
    std::vector<double> out(v.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = std::exp(v[i] - mx);
        sum += out[i];
    }
    for (double& x : out) x /= sum;
    return out;
}

Matrix softmax_flat(const Matrix& m) {
    Matrix out(m.rows, m.cols);
    out.data = softmax(m.data);
    return out;
}

double activate(double x, Activation kind) {
    if (kind == Activation::Tanh) return std::tanh(x);
    return 1.0 / (1.0 + std::exp(-x));
}

std::vector<double> activation(const std::vector<double>& v, Activation kind) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = activate(v[i], kind);
    return out;
}

Matrix xavier_init(int rows, int cols, Rng& rng) {
    if (rows < 1 || cols < 1)
        throw ArgumentError("xavier_init: dimensions must be >= 1, got " + std::to_string(rows) +
                            "x" + std::to_string(cols));
    const double bound = std::sqrt(6.0 / (rows + cols));
    Matrix m(rows, cols);
    for (double& v : m.data) v = rng.uniform(-bound, bound);
    return m;
}

std::vector<double> dropout_mask(int len, double rate, Rng& rng) {
    if (rate < 0.0 || rate >= 1.0)
        throw ArgumentError("dropout_mask: rate must be in [0, 1), got " + std::to_string(rate));
    std::vector<double> mask(static_cast<std::size_t>(len), 1.0);
    if (rate == 0.0) return mask;
    const double keep_scale = 1.0 / (1.0 - rate);
    for (double& m : mask) m = rng.next_unit() < rate ? 0.0 : keep_scale;
    return mask;
}

} // namespace mtpv
