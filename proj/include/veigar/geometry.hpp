#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>
#include <stdexcept>

namespace veigar {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

/// Skewless pinhole intrinsics. Pixel centers sit at integer coordinates;
/// continuous sub-pixel coordinates are allowed everywhere.
struct Intrinsics {
    double fx;
    double fy;
    double cx;
    double cy;

    Intrinsics(double fx_, double fy_, double cx_, double cy_)
        : fx(fx_), fy(fy_), cx(cx_), cy(cy_) {
        if (!(fx > 0.0) || !(fy > 0.0) || !std::isfinite(fx) || !std::isfinite(fy) ||
            !std::isfinite(cx) || !std::isfinite(cy)) {
            throw std::invalid_argument("Intrinsics: focal lengths must be positive and finite");
        }
    }

    Mat3 matrix() const {
        Mat3 k;
        k << fx, 0, cx, 0, fy, cy, 0, 0, 1;
        return k;
    }
};

/// Rigid transform mapping world (or anchor-frame) points into a camera frame.
class Pose {
public:
    Pose(const Mat3& rotation, const Vec3& translation)
        : rotation_(rotation), translation_(translation) {
        const double ortho = (rotation.transpose() * rotation - Mat3::Identity())
                                 .cwiseAbs()
                                 .maxCoeff();
        if (ortho > 1e-9 || std::abs(rotation.determinant() - 1.0) > 1e-9) {
            throw std::invalid_argument("Pose: rotation must be orthonormal with det +1");
        }
        if (!translation.allFinite()) {
            throw std::invalid_argument("Pose: translation must be finite");
        }
    }

    static Pose identity() { return Pose(Mat3::Identity(), Vec3::Zero()); }

    const Mat3& rotation() const { return rotation_; }
    const Vec3& translation() const { return translation_; }

    Vec3 apply(const Vec3& x) const { return rotation_ * x + translation_; }

    Pose inverse() const {
        return Pose(rotation_.transpose(), -(rotation_.transpose() * translation_));
    }

    /// Composition: (a * b)(x) = a(b(x)).
    Pose operator*(const Pose& b) const {
        return Pose(rotation_ * b.rotation_, rotation_ * b.translation_ + translation_);
    }

    /// Camera center in the source frame (the point mapping to the origin).
    Vec3 center() const { return -(rotation_.transpose() * translation_); }

private:
    Mat3 rotation_;
    Vec3 translation_;
};

struct PixelDepth {
    Vec2 pixel;
    double z;
};

/// Lifts a pixel into the camera frame at the given z-depth.
inline Vec3 lift(const Vec2& p, double depth, const Intrinsics& k) {
    if (!(depth > 0.0) || !std::isfinite(depth)) {
        throw std::domain_error("lift: depth must be positive and finite");
    }
    return Vec3(depth * (p.x() - k.cx) / k.fx, depth * (p.y() - k.cy) / k.fy, depth);
}

/// Projects a camera-frame point onto the image plane. Inverse of lift.
inline PixelDepth reproject(const Vec3& x, const Intrinsics& k) {
    if (!(x.z() > 0.0)) {
        throw std::domain_error("reproject: point is behind the camera");
    }
    return PixelDepth{Vec2(k.fx * x.x() / x.z() + k.cx, k.fy * x.y() / x.z() + k.cy), x.z()};
}

/// A posed pinhole camera with an image raster and clip range.
struct Camera {
    Intrinsics intrinsics;
    Pose pose; // world -> camera
    int width;
    int height;
    double near;
    double far;

    Camera(const Intrinsics& k, const Pose& p, int w, int h, double near_, double far_)
        : intrinsics(k), pose(p), width(w), height(h), near(near_), far(far_) {
        if (w <= 0 || h <= 0) {
            throw std::invalid_argument("Camera: image dimensions must be positive");
        }
        if (!(0.0 < near_ && near_ < far_)) {
            throw std::invalid_argument("Camera: requires 0 < near < far");
        }
    }

    /// World->camera pose built from a camera position looking at a target.
    static Pose look_at(const Vec3& position, const Vec3& target, const Vec3& up) {
        const Vec3 forward = (target - position).normalized();
        Vec3 right = forward.cross(up);
        if (right.norm() < 1e-12) {
            throw std::invalid_argument("look_at: up is parallel to the view direction");
        }
        right.normalize();
        const Vec3 down = forward.cross(right);
        Mat3 r;
        r.row(0) = right.transpose();
        r.row(1) = down.transpose();
        r.row(2) = forward.transpose();
        return Pose(r, -(r * position));
    }
};

} // namespace veigar
