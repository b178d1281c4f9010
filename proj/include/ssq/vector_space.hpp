#pragma once

// F_d x F_d with the 2x2 determinant form |v1 v2| = x1*y2 - x2*y1, order-d
// subgroups, the extraordinary predicate, and the determinant-equation
// solvers. The solver formulas use only bilinearity and invertibility of the
// determinant, so they are implemented over any characteristic; odd p is
// beyond the source material and covered by property tests.

#include <vector>

#include "ssq/errors.hpp"
#include "ssq/field.hpp"
#include "ssq/group.hpp"

namespace ssq {

/// Value of the determinant form; lives in the base field.
using DetValue = FieldElement;

inline Point scalar_mul(const Field& f, FieldElement lambda, Point v) {
    return {f.mul(lambda, v.x), f.mul(lambda, v.y)};
}

inline Point point_add(const Field& f, Point a, Point b) {
    return {f.add(a.x, b.x), f.add(a.y, b.y)};
}

inline bool is_zero(Point v) { return v.x.value == 0 && v.y.value == 0; }

/// |v1 v2| = x1*y2 - x2*y1.
inline FieldElement det(const Field& f, Point v1, Point v2) {
    return f.sub(f.mul(v1.x, v2.y), f.mul(v2.x, v1.y));
}

inline bool is_basis(const Field& f, Point v1, Point v2) {
    return det(f, v1, v2).value != 0;
}

/// The line F_d v = { lambda v : lambda in F_d }.
inline Subgroup span_line(const Field& f, Point v) {
    if (is_zero(v)) throw invalid_argument_error("span_line of the zero vector");
    std::vector<Point> pts;
    pts.reserve(f.order());
    for (int i = 0; i < f.order(); ++i) pts.push_back(scalar_mul(f, f.element(i), v));
    return Subgroup::from_elements(GroupSpec::field_pair(f), std::move(pts));
}

/// Z_p-span of the generators (additive closure); any order.
inline Subgroup span_additive(const Field& f, const std::vector<Point>& gens) {
    return Subgroup::span(GroupSpec::field_pair(f), gens);
}

/// True iff G has the form F_d v (an order-d subgroup closed under scalars).
inline bool is_line(const Subgroup& g) {
    const Field& f = g.field();
    if (g.size() != f.order()) return false;
    for (const Point& p : g.elements())
        if (!is_zero(p)) return g == span_line(f, p);
    return false;
}

/// Extraordinary: every pair of elements has determinant of trace zero.
/// Checking generator pairs suffices, the form being bi-additive and trace
/// additive.
inline bool is_extraordinary(const Subgroup& g) {
    const Field& f = g.field();
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (f.trace(det(f, gens[i], gens[j])).value != 0) return false;
    return true;
}

/// The solution set of |v1 w| = x, returned as base + line where
/// base = delta^-1 x v2 for the first canonical companion basis vector v2.
struct PointCoset {
    Point base;
    Subgroup line;
};

inline Point first_basis_companion(const Field& f, Point v1) {
    const int d = f.order();
    for (int rx = 0; rx < d; ++rx)
        for (int ry = 0; ry < d; ++ry) {
            Point w{f.element_at_rank(rx), f.element_at_rank(ry)};
            if (is_basis(f, v1, w)) return w;
        }
    throw invalid_argument_error("no basis companion exists for the zero vector");
}

inline PointCoset det_preimage(const Field& f, Point v1, FieldElement x) {
    if (is_zero(v1)) throw invalid_argument_error("v1 must be nonzero");
    Point v2 = first_basis_companion(f, v1);
    FieldElement delta = det(f, v1, v2);
    Point base = scalar_mul(f, f.mul(f.inv(delta), x), v2);
    return {base, span_line(f, v1)};
}

/// The unique w in F_d v2 with |v1 w| = x; w = delta^-1 x v2.
inline Point unique_w_on_line(const Field& f, Point v1, Point v2, FieldElement x) {
    FieldElement delta = det(f, v1, v2);
    if (delta.value == 0) throw not_a_basis_error("v1, v2 do not form a basis");
    return scalar_mul(f, f.mul(f.inv(delta), x), v2);
}

/// First point w in canonical order with |v w| = 1.
inline Point find_unit_partner(const Field& f, Point v) {
    if (is_zero(v)) throw invalid_argument_error("v must be nonzero");
    const int d = f.order();
    for (int rx = 0; rx < d; ++rx)
        for (int ry = 0; ry < d; ++ry) {
            Point w{f.element_at_rank(rx), f.element_at_rank(ry)};
            if (det(f, v, w).value == 1) return w;
        }
    throw std::logic_error("no unit partner found");
}

} // namespace ssq
