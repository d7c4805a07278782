#pragma once

#include <array>
#include <string>
#include <vector>

#include "linarr/hompoly.hpp"
#include "linarr/scalar.hpp"

namespace linarr {

/// Point of the projective plane, normalized so the first nonzero
/// coordinate is 1. Equality is coordinate equality after normalization.
class ProjPoint {
public:
    ProjPoint(Scalar a, Scalar b, Scalar c);

    const std::array<Scalar, 3>& coords() const { return c_; }
    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    std::string to_string() const;

private:
    std::array<Scalar, 3> c_;
};

/// Line a*x + b*y + c*z = 0, normalized like a point.
class ProjLine {
public:
    ProjLine(Scalar a, Scalar b, Scalar c);

    const std::array<Scalar, 3>& coeffs() const { return c_; }
    bool operator==(const ProjLine& o) const { return c_ == o.c_; }
    bool operator!=(const ProjLine& o) const { return !(*this == o); }
    bool contains(const ProjPoint& p) const;
    HomPoly form() const;
    std::string to_string() const;

private:
    std::array<Scalar, 3> c_;
};

/// Join of two distinct points (cross product).
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);
/// Meet of two distinct lines (cross product).
ProjPoint meet(const ProjLine& a, const ProjLine& b);

/// Ordered list of pairwise distinct points.
class PointSet {
public:
    PointSet(std::vector<ProjPoint> points, std::string label);

    const std::vector<ProjPoint>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    const std::string& label() const { return label_; }

    /// Set with point i removed.
    PointSet remove_point(std::size_t i) const;

private:
    std::vector<ProjPoint> pts_;
    std::string label_;
};

/// Ordered list of pairwise distinct lines.
class Arrangement {
public:
    Arrangement(std::vector<ProjLine> lines, std::string label);

    const std::vector<ProjLine>& lines() const { return lines_; }
    std::size_t size() const { return lines_.size(); }
    const std::string& label() const { return label_; }

private:
    std::vector<ProjLine> lines_;
    std::string label_;
};

/// (a:b:c) <-> {a x + b y + c z = 0}; mutually inverse involutions.
Arrangement dualize(const PointSet& z);
PointSet dualize_inv(const Arrangement& a);

/// Product of the defining linear forms, degree d.
HomPoly defining_polynomial(const Arrangement& a);

/// Arrangement with line i removed; label annotated.
Arrangement delete_line(const Arrangement& a, std::size_t i);

} // namespace linarr
