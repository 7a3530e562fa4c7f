#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nspline {

/// Ordered samples (x_n, y_n) with strictly increasing x.
class Dataset {
public:
    // Sorts by x; throws input_error on N < 2, duplicate x, non-finite values.
    Dataset(std::vector<double> x, std::vector<double> y);

    std::size_t size() const { return x_.size(); }
    const std::vector<double>& x() const { return x_; }
    const std::vector<double>& y() const { return y_; }

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    double y_min() const;
    double y_max() const;

    // FNV-1a over the 17-digit decimal rendering of all points.
    std::uint64_t fingerprint() const;

private:
    std::vector<double> x_;
    std::vector<double> y_;
};

// CSV with header "x,y".  Rows may be unsorted; duplicate x is an error.
Dataset load_dataset(const std::string& path);
void save_dataset(const Dataset& data, const std::string& path);

/// Seeded synthetic data: x uniform on [0,1], y from a piecewise-smooth
/// target (sine plus a few random kinks) with optional Gaussian noise.
Dataset generate_dataset(std::size_t n, std::uint64_t seed, double noise_sigma = 0.0);

}  // namespace nspline
