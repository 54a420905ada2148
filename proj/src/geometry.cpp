#include "halobeam/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace halobeam {

Vector3 Vector3::normalized() const {
    const double n = norm();
    if (n == 0.0 || !std::isfinite(n)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    return *this / n;
}

Rotation3 Rotation3::from_columns(const Vector3& c0, const Vector3& c1, const Vector3& c2) {
    return Rotation3({c0.x, c1.x, c2.x,
                      c0.y, c1.y, c2.y,
                      c0.z, c1.z, c2.z});
}

Rotation3 Rotation3::transposed() const {
    return Rotation3({m_[0], m_[3], m_[6],
                      m_[1], m_[4], m_[7],
                      m_[2], m_[5], m_[8]});
}

Rotation3 Rotation3::operator*(const Rotation3& o) const {
    std::array<double, 9> r{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k) {
                acc += at(i, k) * o.at(k, j);
            }
            r[static_cast<std::size_t>(3 * i + j)] = acc;
        }
    }
    return Rotation3(r);
}

double Rotation3::determinant() const {
    return m_[0] * (m_[4] * m_[8] - m_[5] * m_[7]) -
           m_[1] * (m_[3] * m_[8] - m_[5] * m_[6]) +
           m_[2] * (m_[3] * m_[7] - m_[4] * m_[6]);
}

double Rotation3::orthonormality_error() const {
    const Rotation3 gram = transposed() * (*this);
    double err = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double target = (i == j) ? 1.0 : 0.0;
            err = std::max(err, std::abs(gram.at(i, j) - target));
        }
    }
    return err;
}

AffineTransform AffineTransform::compose(const AffineTransform& inner) const {
    return {rotation * inner.rotation, rotation.apply(inner.translation) + translation};
}

AffineTransform AffineTransform::inverse() const {
    const Rotation3 rt = rotation.transposed();
    return {rt, -rt.apply(translation)};
}

Rotation3 rotation_about_axis(const Vector3& axis, double angle_rad) {
    const double n = axis.norm();
    if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-9) {
        throw std::invalid_argument("rotation axis must be a unit vector");
    }
    const Vector3 u = axis / n;
    const double c = std::cos(angle_rad);
    const double s = std::sin(angle_rad);
    const double t = 1.0 - c;
    // Rodrigues rotation matrix.
    return Rotation3::from_rows({t * u.x * u.x + c,       t * u.x * u.y - s * u.z, t * u.x * u.z + s * u.y,
                                 t * u.x * u.y + s * u.z, t * u.y * u.y + c,       t * u.y * u.z - s * u.x,
                                 t * u.x * u.z - s * u.y, t * u.y * u.z + s * u.x, t * u.z * u.z + c});
}

double angle_between(const Vector3& u, const Vector3& v) {
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu == 0.0 || nv == 0.0 || !std::isfinite(nu) || !std::isfinite(nv)) {
        throw std::invalid_argument("angle_between requires two nonzero vectors");
    }
    const double c = std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0);
    return std::acos(c);
}

bool segment_intersects_sphere(const Vector3& a, const Vector3& b,
                               const Vector3& center, double radius_km) {
    if (!(radius_km > 0.0)) {
        throw std::invalid_argument("sphere radius must be positive");
    }
    const Vector3 ab = b - a;
    const double len2 = ab.norm_squared();
    if (len2 == 0.0) {
        throw std::invalid_argument("segment endpoints must be distinct");
    }
    const double t = std::clamp((center - a).dot(ab) / len2, 0.0, 1.0);
    const Vector3 closest = a + t * ab;
    return (closest - center).norm_squared() <= radius_km * radius_km;
}

}  // namespace halobeam
