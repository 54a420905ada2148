#pragma once

#include <array>
#include <cmath>
#include <numbers>

namespace halobeam {

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// 3-D vector. Components are kilometers in the geometry modules, or
/// dimensionless when the vector is a direction.
struct Vector3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vector3() = default;
    constexpr Vector3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vector3 operator+(const Vector3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vector3 operator-(const Vector3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vector3 operator-() const { return {-x, -y, -z}; }
    constexpr Vector3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vector3 operator/(double s) const { return {x / s, y / s, z / s}; }

    constexpr double dot(const Vector3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vector3 cross(const Vector3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    constexpr double norm_squared() const { return dot(*this); }
    double norm() const { return std::sqrt(norm_squared()); }

    /// Unit vector along this one. Throws std::invalid_argument on a zero vector.
    Vector3 normalized() const;

    bool is_finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

constexpr Vector3 operator*(double s, const Vector3& v) { return v * s; }

/// Proper rotation (orthonormal, det +1), stored as a row-major 3x3 matrix.
class Rotation3 {
  public:
    /// Identity rotation.
    Rotation3() : m_{1, 0, 0, 0, 1, 0, 0, 0, 1} {}

    static Rotation3 identity() { return Rotation3{}; }
    static Rotation3 from_columns(const Vector3& c0, const Vector3& c1, const Vector3& c2);
    static Rotation3 from_rows(std::array<double, 9> row_major) { return Rotation3(row_major); }

    double at(int row, int col) const { return m_[static_cast<std::size_t>(3 * row + col)]; }
    Vector3 column(int col) const { return {at(0, col), at(1, col), at(2, col)}; }

    Vector3 apply(const Vector3& v) const {
        return {at(0, 0) * v.x + at(0, 1) * v.y + at(0, 2) * v.z,
                at(1, 0) * v.x + at(1, 1) * v.y + at(1, 2) * v.z,
                at(2, 0) * v.x + at(2, 1) * v.y + at(2, 2) * v.z};
    }

    /// Inverse rotation (transpose, since the matrix is orthonormal).
    Rotation3 transposed() const;

    /// Composition: (a * b).apply(v) == a.apply(b.apply(v)).
    Rotation3 operator*(const Rotation3& o) const;

    double determinant() const;

    /// Largest absolute entry of R^T R - I; zero for an exact rotation.
    double orthonormality_error() const;

  private:
    explicit Rotation3(std::array<double, 9> m) : m_(m) {}
    std::array<double, 9> m_;
};

/// Rigid placement: p -> rotation * p + translation.
struct AffineTransform {
    Rotation3 rotation;
    Vector3 translation;

    Vector3 apply(const Vector3& p) const { return rotation.apply(p) + translation; }

    /// this after inner: compose(inner).apply(p) == apply(inner.apply(p)).
    AffineTransform compose(const AffineTransform& inner) const;

    AffineTransform inverse() const;
};

/// Proper rotation by `angle_rad` about `axis` (right-hand rule).
/// `axis` must be unit length to within 1e-9; throws std::invalid_argument otherwise.
Rotation3 rotation_about_axis(const Vector3& axis, double angle_rad);

/// Angle between two nonzero vectors, in [0, pi]. The cosine is clamped to
/// [-1, 1] before the arccos. Throws std::invalid_argument on a zero vector.
double angle_between(const Vector3& u, const Vector3& v);

/// True iff the closed segment [a, b] passes within `radius_km` of `center`.
/// Requires radius_km > 0 and a != b; throws std::invalid_argument otherwise.
bool segment_intersects_sphere(const Vector3& a, const Vector3& b,
                               const Vector3& center, double radius_km);

}  // namespace halobeam
