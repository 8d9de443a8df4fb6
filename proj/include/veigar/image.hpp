#pragma once

#include "veigar/geometry.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace veigar {

/// Scale convention carried by a depth map: Metric depths live in scene
/// units, Relative depths are consistent only up to a global scale factor.
enum class DepthConvention { Metric, Relative };

/// Dense per-pixel z-depth grid with a validity mask. Immutable after
/// construction; safe to share across threads.
class DepthMap {
public:
    DepthMap(int width, int height, std::vector<double> values, std::vector<std::uint8_t> valid,
             DepthConvention convention)
        : width_(width), height_(height), values_(std::move(values)), valid_(std::move(valid)),
          convention_(convention) {
        if (width <= 0 || height <= 0) {
            throw std::invalid_argument("DepthMap: dimensions must be positive");
        }
        const std::size_t n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
        if (values_.size() != n || valid_.size() != n) {
            throw std::invalid_argument("DepthMap: value/valid sizes must equal width*height");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (valid_[i] && (!(values_[i] > 0.0) || !std::isfinite(values_[i]))) {
                throw std::invalid_argument("DepthMap: valid entries must be positive and finite");
            }
        }
    }

    static DepthMap constant(int width, int height, double value, DepthConvention convention) {
        const std::size_t n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
        return DepthMap(width, height, std::vector<double>(n, value),
                        std::vector<std::uint8_t>(n, 1), convention);
    }

    int width() const { return width_; }
    int height() const { return height_; }
    DepthConvention convention() const { return convention_; }

    double at(int x, int y) const { return values_[index(x, y)]; }
    bool is_valid(int x, int y) const { return valid_[index(x, y)] != 0; }

    const std::vector<double>& values() const { return values_; }
    const std::vector<std::uint8_t>& validity() const { return valid_; }

    std::size_t valid_count() const {
        return std::accumulate(valid_.begin(), valid_.end(), std::size_t{0});
    }

    /// Bilinear sample at a continuous pixel coordinate. Empty when the
    /// coordinate leaves [0, w-1] x [0, h-1] or touches an invalid pixel.
    std::optional<double> sample_bilinear(const Vec2& p) const {
        if (!(p.x() >= 0.0) || !(p.y() >= 0.0) || !(p.x() <= width_ - 1.0) ||
            !(p.y() <= height_ - 1.0)) {
            return std::nullopt;
        }
        const int x0 = std::min(static_cast<int>(p.x()), width_ - 2 >= 0 ? width_ - 2 : 0);
        const int y0 = std::min(static_cast<int>(p.y()), height_ - 2 >= 0 ? height_ - 2 : 0);
        const int x1 = std::min(x0 + 1, width_ - 1);
        const int y1 = std::min(y0 + 1, height_ - 1);
        if (!is_valid(x0, y0) || !is_valid(x1, y0) || !is_valid(x0, y1) || !is_valid(x1, y1)) {
            return std::nullopt;
        }
        const double ax = p.x() - x0;
        const double ay = p.y() - y0;
        return (1 - ax) * (1 - ay) * at(x0, y0) + ax * (1 - ay) * at(x1, y0) +
               (1 - ax) * ay * at(x0, y1) + ax * ay * at(x1, y1);
    }

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

private:
    int width_;
    int height_;
    std::vector<double> values_;
    std::vector<std::uint8_t> valid_;
    DepthConvention convention_;
};

/// Row-major RGB image with channels in [0, 1].
class ImageRGB {
public:
    ImageRGB(int width, int height, std::vector<double> rgb)
        : width_(width), height_(height), rgb_(std::move(rgb)) {
        if (width <= 0 || height <= 0) {
            throw std::invalid_argument("ImageRGB: dimensions must be positive");
        }
        if (rgb_.size() != 3 * static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
            throw std::invalid_argument("ImageRGB: pixel buffer must hold 3*width*height values");
        }
        for (double v : rgb_) {
            if (!(v >= 0.0 && v <= 1.0)) {
                throw std::invalid_argument("ImageRGB: channels must lie in [0, 1]");
            }
        }
    }

    static ImageRGB filled(int width, int height, const Vec3& color) {
        std::vector<double> rgb(3 * static_cast<std::size_t>(width) * height);
        for (std::size_t i = 0; i < rgb.size(); i += 3) {
            rgb[i] = color.x();
            rgb[i + 1] = color.y();
            rgb[i + 2] = color.z();
        }
        return ImageRGB(width, height, std::move(rgb));
    }

    int width() const { return width_; }
    int height() const { return height_; }

    Vec3 at(int x, int y) const {
        const std::size_t i = 3 * index(x, y);
        return Vec3(rgb_[i], rgb_[i + 1], rgb_[i + 2]);
    }

    double channel(int x, int y, int c) const { return rgb_[3 * index(x, y) + c]; }

    const std::vector<double>& data() const { return rgb_; }

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

private:
    int width_;
    int height_;
    std::vector<double> rgb_;
};

/// Per-pixel boolean mask; true marks the inpainted/object region.
class Mask {
public:
    Mask(int width, int height, std::vector<std::uint8_t> bits)
        : width_(width), height_(height), bits_(std::move(bits)) {
        if (width <= 0 || height <= 0) {
            throw std::invalid_argument("Mask: dimensions must be positive");
        }
        if (bits_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
            throw std::invalid_argument("Mask: bit buffer must hold width*height entries");
        }
    }

    static Mask none(int width, int height) {
        return Mask(width, height,
                    std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height, 0));
    }

    static Mask all(int width, int height) {
        return Mask(width, height,
                    std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height, 1));
    }

    int width() const { return width_; }
    int height() const { return height_; }

    bool at(int x, int y) const { return bits_[index(x, y)] != 0; }

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    std::size_t count() const {
        return std::accumulate(bits_.begin(), bits_.end(), std::size_t{0});
    }

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> bits_;
};

/// One sparse metric depth observation at a (possibly sub-pixel) coordinate.
struct SparseDepthSample {
    Vec2 pixel;
    double depth;
};

/// Sparse metric depth observations standing in for projected SfM points.
struct SparseDepthSet {
    std::vector<SparseDepthSample> samples;

    void validate(int width, int height) const {
        for (const auto& s : samples) {
            if (!(s.depth > 0.0) || !std::isfinite(s.depth)) {
                throw std::invalid_argument("SparseDepthSet: depths must be positive and finite");
            }
            if (!(s.pixel.x() >= 0.0 && s.pixel.x() <= width - 1.0 && s.pixel.y() >= 0.0 &&
                  s.pixel.y() <= height - 1.0)) {
                throw std::invalid_argument("SparseDepthSet: pixel outside the image rectangle");
            }
        }
    }
};

} // namespace veigar
