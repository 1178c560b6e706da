#include "ucaris/geometry.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ucaris {

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Mat3 Mat3::identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = 1.0;
    return r;
}

Mat3 Mat3::transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
}

double Mat3::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {a.m[0][0] * v.x + a.m[0][1] * v.y + a.m[0][2] * v.z,
            a.m[1][0] * v.x + a.m[1][1] * v.y + a.m[1][2] * v.z,
            a.m[2][0] * v.x + a.m[2][1] * v.y + a.m[2][2] * v.z};
}

Mat3 rotation_matrix_x(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r.m = {{{1, 0, 0}, {0, c, s}, {0, -s, c}}};
    return r;
}

Mat3 rotation_matrix_y(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r.m = {{{c, 0, -s}, {0, 1, 0}, {s, 0, c}}};
    return r;
}

void UcaSpec::validate() const {
    if (!(radius > 0)) throw std::invalid_argument("UcaSpec: radius must be positive");
    if (num_elements < 1) throw std::invalid_argument("UcaSpec: num_elements must be >= 1");
    if (!(alpha >= 0 && alpha < kTwoPi))
        throw std::invalid_argument("UcaSpec: alpha must lie in [0, 2pi)");
}

double SegmentGeometry::axial_norm() const {
    return std::sqrt(center_distance * center_distance + source.radius * source.radius +
                     sink.radius * sink.radius);
}

void SegmentGeometry::validate() const {
    source.validate();
    sink.validate();
    if (!(center_distance > 0))
        throw std::invalid_argument("SegmentGeometry: center_distance must be positive");
    if (!(phi >= 0 && phi < kPi / 2))
        throw std::invalid_argument("SegmentGeometry: phi must lie in [0, pi/2)");
    if (std::abs(rot_x) > kPi / 3 || std::abs(rot_y) > kPi / 3)
        throw std::invalid_argument("SegmentGeometry: rotation angles must not exceed pi/3");
}

namespace {

double element_angle(const UcaSpec& uca, int index) {
    return kTwoPi * (index - 1) / uca.num_elements + uca.alpha;
}

void check_index(const UcaSpec& uca, int index, const char* what) {
    if (index < 1 || index > uca.num_elements)
        throw std::invalid_argument(std::string(what) + ": element index " +
                                    std::to_string(index) + " out of range 1.." +
                                    std::to_string(uca.num_elements));
}

// Out-of-plane sign: the transmit-side UCA and the receive-side UCA tilt in
// opposite senses relative to the plane normal.
double side_sign(Side side) { return side == Side::TransmitSide ? 1.0 : -1.0; }

}  // namespace

Vec3 element_position(const SegmentGeometry& seg, UcaPlane which, int index) {
    if (which == UcaPlane::InPlane) {
        const UcaSpec& uca = seg.in_plane();
        check_index(uca, index, "element_position");
        const double v = element_angle(uca, index);
        return {uca.radius * std::cos(v), uca.radius * std::sin(v), 0.0};
    }
    const UcaSpec& uca = seg.off_plane();
    check_index(uca, index, "element_position");
    const double u = element_angle(uca, index);
    const double cu = std::cos(u), su = std::sin(u);
    const double cx = std::cos(seg.rot_x), sx = std::sin(seg.rot_x);
    const double cy = std::cos(seg.rot_y), sy = std::sin(seg.rot_y);
    const double R = uca.radius;
    const Vec3 rho{R * (cu * cy + su * sx * sy), R * su * cx,
                   side_sign(seg.side) * R * (cu * sy - su * sx * cy)};
    const double sp = std::sin(seg.phi), cp = std::cos(seg.phi);
    const Vec3 center{seg.center_distance * sp * std::cos(seg.theta),
                      seg.center_distance * sp * std::sin(seg.theta),
                      seg.center_distance * cp};
    return rho + center;
}

double exact_distance(const SegmentGeometry& seg, int m, int n) {
    const int off_idx = seg.side == Side::TransmitSide ? n : m;
    const int in_idx = seg.side == Side::TransmitSide ? m : n;
    return norm(element_position(seg, UcaPlane::OffPlane, off_idx) -
                element_position(seg, UcaPlane::InPlane, in_idx));
}

ChiAngles chi_angles(double rot_x, double rot_y, Side /*side*/) {
    // The sign of sin(chi1) is fixed by requiring d_hat + d_tilde == d_term
    // with the geometry-derived cross term; the same sign works on both sides.
    const double cx = std::cos(rot_x), sx = std::sin(rot_x);
    const double cy = std::cos(rot_y), sy = std::sin(rot_y);
    ChiAngles out;
    out.chi1 = std::atan2(sy * sx, cy + cx);
    if (1.0 - cy * cx != 0.0) out.chi2 = std::atan2(sy * sx, cy - cx);
    return out;
}

PhaseTerms phase_terms(const SegmentGeometry& seg, int m, int n) {
    const UcaSpec& off = seg.off_plane();
    const UcaSpec& in = seg.in_plane();
    const int off_idx = seg.side == Side::TransmitSide ? n : m;
    const int in_idx = seg.side == Side::TransmitSide ? m : n;
    check_index(off, off_idx, "phase_terms");
    check_index(in, in_idx, "phase_terms");

    const double u = element_angle(off, off_idx);
    const double v = element_angle(in, in_idx);
    const double cu = std::cos(u), su = std::sin(u);
    const double cv = std::cos(v), sv = std::sin(v);
    const double cx = std::cos(seg.rot_x), sx = std::sin(seg.rot_x);
    const double cy = std::cos(seg.rot_y), sy = std::sin(seg.rot_y);
    const double st = std::sin(seg.theta), ct = std::cos(seg.theta);
    const double sp = std::sin(seg.phi), cp = std::cos(seg.phi);
    const double d = seg.center_distance, R = off.radius, r = in.radius;
    const double sgn = side_sign(seg.side);

    PhaseTerms pt;
    pt.e_term = d * R *
                (sp * ct * cu * cy + sp * st * su * cx + sp * ct * su * sx * sy +
                 sgn * cp * (cu * sy - su * sx * cy));
    pt.d_term = -R * r * (cu * cv * cy + su * sv * cx + su * cv * sx * sy);
    pt.f_term = -d * r * sp * std::cos(v - seg.theta);

    const ChiAngles chi = chi_angles(seg.rot_x, seg.rot_y, seg.side);
    pt.d_hat = -R * r / 2 * (1 + cy * cx) * std::cos(u - v - chi.chi1);
    const double residual_coef = 1 - cy * cx;
    pt.d_tilde = residual_coef == 0.0
                     ? 0.0
                     : -R * r / 2 * residual_coef * std::cos(u + v - *chi.chi2);

    assert(std::abs(pt.d_term - (pt.d_hat + pt.d_tilde)) <=
           1e-12 * std::max(1.0, std::abs(pt.d_term)));
    assert(seg.center_distance == 0.0 ||
           std::abs(pt.e_term + pt.d_term + pt.f_term) / seg.center_distance <
               4 * (off.radius + in.radius));
    return pt;
}

double approx_distance(const SegmentGeometry& seg, int m, int n) {
    const PhaseTerms pt = phase_terms(seg, m, n);
    const double s = seg.axial_norm();
    return s + (pt.e_term + pt.d_term + pt.f_term) / s;
}

}  // namespace ucaris
