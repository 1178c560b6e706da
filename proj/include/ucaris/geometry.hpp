#pragma once

#include <array>
#include <optional>

#include "ucaris/linalg.hpp"

namespace ucaris {

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    static Mat3 identity();
    Mat3 transposed() const;
    double det() const;
};

Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& v);

/// Direction-cosine matrix for a rotation about the x axis.
Mat3 rotation_matrix_x(double angle);
/// Direction-cosine matrix for a rotation about the y axis.
Mat3 rotation_matrix_y(double angle);

/// One uniform circular array: elements at angular positions
/// 2*pi*(k-1)/num_elements + alpha on a circle of the given radius.
struct UcaSpec {
    double radius = 0;       // meters
    int num_elements = 0;
    double alpha = 0;        // radians, offset of the first element

    void validate() const;   // radius > 0, num_elements >= 1, alpha in [0, 2pi)
};

/// Sign-convention selector for the hop. TransmitSide: the off-plane (rotated,
/// translated) UCA is the source of the hop and tilts toward the plane;
/// ReceiveSide: the off-plane UCA is the sink and tilts away. The two differ
/// only in the sign of the out-of-plane component of the rotated element
/// offsets, which flips the two cos(phi) terms of the E phase term.
enum class Side { TransmitSide, ReceiveSide };

enum class UcaPlane { OffPlane, InPlane };

/// Geometry of one hop. One UCA lies in the coordinate plane (z = 0, centered
/// at the origin); the other is rotated by (rot_x, rot_y) and translated to
/// distance center_distance along the direction given by the included angles
/// (theta: azimuth, phi: polar angle from the plane normal).
struct SegmentGeometry {
    UcaSpec source;          // elements the hop transmits from
    UcaSpec sink;            // elements the hop is received on
    double center_distance = 0;  // meters
    double theta = 0;        // radians
    double phi = 0;          // radians, in [0, pi/2)
    double rot_x = 0;        // radians, |rot_x| <= pi/3
    double rot_y = 0;        // radians, |rot_y| <= pi/3
    Side side = Side::TransmitSide;

    const UcaSpec& off_plane() const { return side == Side::TransmitSide ? source : sink; }
    const UcaSpec& in_plane() const { return side == Side::TransmitSide ? sink : source; }

    /// sqrt(d^2 + R^2 + r^2), the axial distance scale of the far-field expansion.
    double axial_norm() const;

    void validate() const;
};

/// Decomposition of the squared-distance cross terms:
/// d_mn^2 = d^2 + R^2 + r^2 + 2(E + D + F), with D split into the
/// circulant-compatible part d_hat and the anti-circulant residual d_tilde.
struct PhaseTerms {
    double e_term = 0;   // meters^2, depends on the off-plane element only
    double d_term = 0;   // meters^2, depends on both elements
    double f_term = 0;   // meters^2, depends on the in-plane element only
    double d_hat = 0;    // meters^2
    double d_tilde = 0;  // meters^2
};

/// chi2 is undefined exactly when cos(rot_x)*cos(rot_y) == 1 (its amplitude
/// coefficient vanishes there, so the residual term is zero anyway).
struct ChiAngles {
    double chi1 = 0;
    std::optional<double> chi2;
};

/// Position of an element of the segment, 1-based index.
/// InPlane: (r cos(phi_m + alpha), r sin(phi_m + alpha), 0).
/// OffPlane: rotated circle point translated by the center offset.
Vec3 element_position(const SegmentGeometry& seg, UcaPlane which, int index);

/// Euclidean distance between sink element m and source element n (1-based).
double exact_distance(const SegmentGeometry& seg, int m, int n);

/// Phase-term decomposition for the (sink m, source n) element pair.
PhaseTerms phase_terms(const SegmentGeometry& seg, int m, int n);

ChiAngles chi_angles(double rot_x, double rot_y, Side side);

/// First-order far-field expansion: sqrt(d^2+R^2+r^2) + (E+D+F)/sqrt(d^2+R^2+r^2).
double approx_distance(const SegmentGeometry& seg, int m, int n);

}  // namespace ucaris
