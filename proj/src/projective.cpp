#include "linarr/projective.hpp"

#include "linarr/error.hpp"

namespace linarr {

namespace {

std::array<Scalar, 3> normalize_triple(std::array<Scalar, 3> c, const char* what) {
    for (auto& v : c) {
        if (v.is_zero()) continue;
        const Scalar inv = v.inverse();
        for (auto& w : c) w *= inv;
        return c;
    }
    throw MathError(std::string(what) + " requires a nonzero coordinate triple");
}

std::array<Scalar, 3> cross(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

} // namespace

ProjPoint::ProjPoint(Scalar a, Scalar b, Scalar c)
    : c_(normalize_triple({std::move(a), std::move(b), std::move(c)}, "point")) {}

std::string ProjPoint::to_string() const {
    return "(" + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() + ")";
}

ProjLine::ProjLine(Scalar a, Scalar b, Scalar c)
    : c_(normalize_triple({std::move(a), std::move(b), std::move(c)}, "line")) {}

bool ProjLine::contains(const ProjPoint& p) const {
    Scalar s = c_[0] * p.coords()[0] + c_[1] * p.coords()[1] + c_[2] * p.coords()[2];
    return s.is_zero();
}

HomPoly ProjLine::form() const { return HomPoly::linear_form(c_[0], c_[1], c_[2]); }

std::string ProjLine::to_string() const {
    return "[" + c_[0].to_string() + ", " + c_[1].to_string() + ", " + c_[2].to_string() + "]";
}

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
    auto c = cross(p.coords(), q.coords());
    return ProjLine(c[0], c[1], c[2]);
}

ProjPoint meet(const ProjLine& a, const ProjLine& b) {
    auto c = cross(a.coeffs(), b.coeffs());
    return ProjPoint(c[0], c[1], c[2]);
}

PointSet::PointSet(std::vector<ProjPoint> points, std::string label)
    : pts_(std::move(points)), label_(std::move(label)) {
    if (pts_.empty()) throw MathError("point set must be nonempty");
    for (std::size_t i = 0; i < pts_.size(); ++i)
        for (std::size_t j = i + 1; j < pts_.size(); ++j)
            if (pts_[i] == pts_[j])
                throw MathError("duplicate point " + pts_[i].to_string() + " in \"" + label_ + "\"");
}

PointSet PointSet::remove_point(std::size_t i) const {
    if (i >= pts_.size()) throw MathError("point index out of range");
    std::vector<ProjPoint> pts = pts_;
    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
    return PointSet(std::move(pts), label_ + " minus p" + std::to_string(i));
}

Arrangement::Arrangement(std::vector<ProjLine> lines, std::string label)
    : lines_(std::move(lines)), label_(std::move(label)) {
    if (lines_.empty()) throw MathError("arrangement must be nonempty");
    for (std::size_t i = 0; i < lines_.size(); ++i)
        for (std::size_t j = i + 1; j < lines_.size(); ++j)
            if (lines_[i] == lines_[j])
                throw MathError("duplicate line " + lines_[i].to_string() + " in \"" + label_ + "\"");
}

Arrangement dualize(const PointSet& z) {
    std::vector<ProjLine> lines;
    lines.reserve(z.size());
    for (const ProjPoint& p : z.points())
        lines.emplace_back(p.coords()[0], p.coords()[1], p.coords()[2]);
    return Arrangement(std::move(lines), "dual of " + z.label());
}

PointSet dualize_inv(const Arrangement& a) {
    std::vector<ProjPoint> pts;
    pts.reserve(a.size());
    for (const ProjLine& l : a.lines())
        pts.emplace_back(l.coeffs()[0], l.coeffs()[1], l.coeffs()[2]);
    return PointSet(std::move(pts), "dual of " + a.label());
}

HomPoly defining_polynomial(const Arrangement& a) {
    HomPoly f = HomPoly::monomial(Mono{{0, 0, 0}}, Scalar(1));
    for (const ProjLine& l : a.lines()) f = f * l.form();
    return f;
}

Arrangement delete_line(const Arrangement& a, std::size_t i) {
    if (i >= a.size()) throw MathError("line index out of range");
    if (a.size() < 2) throw MathError("cannot delete from a single-line arrangement");
    std::vector<ProjLine> lines = a.lines();
    lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(i));
    return Arrangement(std::move(lines), a.label() + " minus L" + std::to_string(i));
}

} // namespace linarr
