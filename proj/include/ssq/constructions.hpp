#pragma once

// Explicit complete-set constructions: the basis fan of lines, the worked
// d=4 example set, the three extraordinary subgroups through a point, and
// the Type I / Type II complete sets of order 4.
//
// Member order is fixed: the fan enumerates lambda in canonical field order
// with F_d v2 last; type_I emits [F v1, F v2, F(v1+v2), F(v1+m v2),
// F(v1+m^2 v2)]; type_II pins the line first and then the four non-line
// members in a fixed listing. The fig4/fig5/fig6 goldens come out position
// for position. Complete sets compare as unordered families.

#include <algorithm>
#include <string>
#include <vector>

#include "ssq/errors.hpp"
#include "ssq/squares.hpp"
#include "ssq/vector_space.hpp"

namespace ssq {

enum class SetKind { TypeI, TypeII, Untyped };

inline const char* to_string(SetKind k) {
    switch (k) {
        case SetKind::TypeI: return "TypeI";
        case SetKind::TypeII: return "TypeII";
        default: return "Untyped";
    }
}

/// d+1 order-d subgroups with pairwise trivial intersections covering
/// F_d x F_d. When kind != Untyped every member is extraordinary.
class CompleteSet {
public:
    CompleteSet(const Field& f, std::vector<Subgroup> members, SetKind kind, Point v1, Point v2)
        : field_(f), members_(std::move(members)), kind_(kind), v1_(v1), v2_(v2) {
        const int d = f.order();
        if (static_cast<int>(members_.size()) != d + 1)
            throw invalid_argument_error("a complete set has d+1 members");
        std::vector<char> covered(d * d, 0);
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (members_[i].size() != d)
                throw invalid_argument_error("every member must have d elements");
            for (const Point& p : members_[i].elements()) covered[p.x.value * d + p.y.value] = 1;
            for (std::size_t j = i + 1; j < members_.size(); ++j)
                if (!trivial_intersection(members_[i], members_[j]))
                    throw invalid_argument_error("members must intersect trivially");
            if (kind_ != SetKind::Untyped && !is_extraordinary(members_[i]))
                throw invalid_argument_error("typed complete sets must be extraordinary");
        }
        for (char c : covered)
            if (!c) throw invalid_argument_error("members do not cover the space");
    }

    const Field& field() const { return field_; }
    const std::vector<Subgroup>& members() const { return members_; }
    SetKind kind() const { return kind_; }
    Point witness_v1() const { return v1_; }
    Point witness_v2() const { return v2_; }

    /// Canonical key of the unordered family.
    std::string key() const {
        std::vector<std::string> keys;
        keys.reserve(members_.size());
        for (const Subgroup& m : members_) keys.push_back(m.key());
        std::sort(keys.begin(), keys.end());
        std::string out;
        for (const std::string& k : keys) { out += k; out += '|'; }
        return out;
    }

    friend bool equal_as_family(const CompleteSet& a, const CompleteSet& b) {
        return a.field_ == b.field_ && a.key() == b.key();
    }

private:
    Field field_;
    std::vector<Subgroup> members_;
    SetKind kind_;
    Point v1_, v2_;
};

/// The line fan F_d(v1 + lambda v2) for lambda in canonical order, then F_d v2.
inline CompleteSet basis_fan(const Field& f, Point v1, Point v2) {
    if (!is_basis(f, v1, v2)) throw not_a_basis_error("v1, v2 do not form a basis");
    std::vector<Subgroup> members;
    members.reserve(f.order() + 1);
    for (int r = 0; r < f.order(); ++r) {
        FieldElement lambda = f.element_at_rank(r);
        members.push_back(span_line(f, point_add(f, v1, scalar_mul(f, lambda, v2))));
    }
    members.push_back(span_line(f, v2));
    return CompleteSet(f, std::move(members), SetKind::Untyped, v1, v2);
}

/// The worked d=4 set: A1 = Z2 v1 + Z2 v2, B1 = m A1, C1 = m^2 A1,
/// D1 = F4(v1 + m v2), E1 = F4(v1 + m^2 v2).
inline CompleteSet example_set_d4(const Field& f, Point v1, Point v2) {
    if (f.order() != 4) throw invalid_argument_error("the worked example requires d = 4");
    if (!is_basis(f, v1, v2)) throw not_a_basis_error("v1, v2 do not form a basis");
    const FieldElement m = f.primitive_element();
    const FieldElement m2 = f.mul(m, m);
    Subgroup a1 = span_additive(f, {v1, v2});
    auto scaled = [&](FieldElement lambda) {
        std::vector<Point> pts;
        for (const Point& p : a1.elements()) pts.push_back(scalar_mul(f, lambda, p));
        return Subgroup::from_elements(GroupSpec::field_pair(f), std::move(pts));
    };
    std::vector<Subgroup> members{a1, scaled(m), scaled(m2),
                                  span_line(f, point_add(f, v1, scalar_mul(f, m, v2))),
                                  span_line(f, point_add(f, v1, scalar_mul(f, m2, v2)))};
    return CompleteSet(f, std::move(members), SetKind::Untyped, v1, v2);
}

/// The three order-4 extraordinary subgroups containing v, given w
/// with |v w| = 1: F4 v, Z2 v + Z2 w, Z2 v + Z2 (w + m v).
inline std::vector<Subgroup> extraordinary_through(const Field& f, Point v, Point w) {
    if (f.order() != 4) throw invalid_argument_error("extraordinary_through requires d = 4");
    if (is_zero(v)) throw invalid_argument_error("v must be nonzero");
    if (det(f, v, w).value != 1)
        throw invalid_argument_error("determinant |v w| must equal 1");
    const FieldElement m = f.primitive_element();
    return {span_line(f, v), span_additive(f, {v, w}),
            span_additive(f, {v, point_add(f, w, scalar_mul(f, m, v))})};
}

/// Type I: the five lines F4 v1, F4 v2, F4(v1+v2), F4(v1+m v2),
/// F4(v1+m^2 v2), in the order the figures present them.
inline CompleteSet type_I(const Field& f, Point v1, Point v2) {
    if (f.order() != 4) throw invalid_argument_error("type_I requires d = 4");
    if (!is_basis(f, v1, v2)) throw not_a_basis_error("v1, v2 do not form a basis");
    std::vector<Subgroup> members{span_line(f, v1), span_line(f, v2)};
    for (int r = 1; r < f.order(); ++r) {
        FieldElement lambda = f.element_at_rank(r);
        members.push_back(span_line(f, point_add(f, v1, scalar_mul(f, lambda, v2))));
    }
    return CompleteSet(f, std::move(members), SetKind::TypeI, v1, v2);
}

/// Type II, requiring |v1 v2| = 1: the line F4 v1 plus four non-line
/// extraordinary subgroups, listed in a fixed order.
inline CompleteSet type_II(const Field& f, Point v1, Point v2) {
    if (f.order() != 4) throw invalid_argument_error("type_II requires d = 4");
    if (!is_basis(f, v1, v2)) throw not_a_basis_error("v1, v2 do not form a basis");
    if (det(f, v1, v2).value != 1)
        throw determinant_not_one_error("determinant must equal 1");
    const FieldElement m = f.primitive_element();
    const FieldElement m2 = f.mul(m, m);
    auto pt = [&](FieldElement a, FieldElement b) {
        return point_add(f, scalar_mul(f, a, v1), scalar_mul(f, b, v2));
    };
    const FieldElement one = f.one();
    std::vector<Subgroup> members{
        span_line(f, v1),
        span_additive(f, {pt({0}, one), pt(one, m)}),    // Z2 v2 + Z2 (v1 + m v2)
        span_additive(f, {pt({0}, m), pt(m2, m2)}),      // Z2 m v2 + Z2 (m^2 v1 + m^2 v2)
        span_additive(f, {pt({0}, m2), pt(m, m)}),       // Z2 m^2 v2 + Z2 (m v1 + m v2)
        span_additive(f, {pt(one, one), pt(m, m2)})};    // Z2 (v1+v2) + Z2 (m v1 + m^2 v2)
    return CompleteSet(f, std::move(members), SetKind::TypeII, v1, v2);
}

/// The d+1 mutually orthogonal supersquares of the set, in member order.
inline std::vector<Square> complete_set_to_squares(const CompleteSet& cs) {
    std::vector<Square> out;
    out.reserve(cs.members().size());
    for (const Subgroup& m : cs.members()) out.push_back(supersquare(m));
    return out;
}

} // namespace ssq
