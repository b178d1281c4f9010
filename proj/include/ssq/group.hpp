#pragma once

// The ambient space M x M for a commutative group M: either F_d x F_d over a
// Field, or a product of cyclic groups. Elements of M are indices in [0, D);
// for the field kind the index is the FieldElement index, for cyclic
// products it is the mixed-radix code.
//
// Subgroup holds an order-|G| additive subgroup of M x M in canonical form:
// the element list sorted by (x, y) under the canonical element order, plus
// a minimal generator list.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssq/errors.hpp"
#include "ssq/field.hpp"

namespace ssq {

/// Element of a generic commutative group, same index encoding as a field
/// element.
using GroupElement = FieldElement;

/// A point (x, y) of M x M. x runs along the grid columns, y along the rows.
struct Point {
    FieldElement x, y;
    friend constexpr bool operator==(Point, Point) = default;
};

class GroupSpec {
public:
    static GroupSpec field_pair(Field f) {
        GroupSpec g;
        g.field_ = std::move(f);
        return g;
    }

    /// M = Z_{orders[0]} x ... x Z_{orders[k-1]}, |M| <= 256.
    static GroupSpec cyclic_product(std::vector<int> orders) {
        if (orders.empty()) throw invalid_argument_error("cyclic product needs at least one factor");
        long long d = 1;
        for (int o : orders) {
            if (o < 1) throw invalid_argument_error("cyclic factor must be positive");
            d *= o;
            if (d > 256) throw invalid_argument_error("group order must not exceed 256");
        }
        GroupSpec g;
        g.orders_ = std::move(orders);
        g.cyclic_order_ = static_cast<int>(d);
        return g;
    }

    bool is_field() const { return field_.has_value(); }

    const Field& field() const {
        if (!field_) throw invalid_argument_error("group is not backed by a field");
        return *field_;
    }

    const std::vector<int>& cyclic_orders() const { return orders_; }

    int order() const { return field_ ? field_->order() : cyclic_order_; }

    int add(int a, int b) const {
        if (field_) return field_->add({u16(a)}, {u16(b)}).value;
        int r = 0, mul = 1;
        for (int o : orders_) {
            r += ((a % o + b % o) % o) * mul;
            a /= o; b /= o; mul *= o;
        }
        return r;
    }

    int neg(int a) const {
        if (field_) return field_->neg({u16(a)}).value;
        int r = 0, mul = 1;
        for (int o : orders_) {
            r += ((o - a % o) % o) * mul;
            a /= o; mul *= o;
        }
        return r;
    }

    /// Canonical enumeration position; index order for cyclic products,
    /// multiplicative-power rank for fields.
    int rank(int a) const { return field_ ? field_->rank({u16(a)}) : a; }

    int element_at_rank(int r) const {
        return field_ ? field_->element_at_rank(r).value : r;
    }

    std::string elem_to_string(int a) const {
        return field_ ? field_->to_string({u16(a)}) : std::to_string(a);
    }

    int elem_parse(const std::string& s) const {
        if (field_) return field_->parse(s).value;
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("bad group element literal: " + s);
        int v = std::stoi(s);
        if (v < 0 || v >= order()) throw parse_error("group element out of range: " + s);
        return v;
    }

    Point point_add(Point a, Point b) const {
        return {{u16(add(a.x.value, b.x.value))}, {u16(add(a.y.value, b.y.value))}};
    }

    Point point_neg(Point a) const {
        return {{u16(neg(a.x.value))}, {u16(neg(a.y.value))}};
    }

    Point point_sub(Point a, Point b) const { return point_add(a, point_neg(b)); }

    /// Canonical point order: lexicographic by (x, y) under the canonical
    /// element order.
    bool point_less(Point a, Point b) const {
        int rx = rank(a.x.value), sx = rank(b.x.value);
        if (rx != sx) return rx < sx;
        return rank(a.y.value) < rank(b.y.value);
    }

    /// Grid reading order: bottom row first, left to right ((y, x) lex).
    /// Block numbering follows this order.
    bool reading_less(Point a, Point b) const {
        int ry = rank(a.y.value), sy = rank(b.y.value);
        if (ry != sy) return ry < sy;
        return rank(a.x.value) < rank(b.x.value);
    }

    /// Cell index in reading order, in [0, D^2).
    int cell_index(Point a) const { return rank(a.y.value) * order() + rank(a.x.value); }

    Point point_at_cell(int cell) const {
        int d = order();
        return {{u16(element_at_rank(cell % d))}, {u16(element_at_rank(cell / d))}};
    }

    std::string point_to_string(Point a) const {
        return "(" + elem_to_string(a.x.value) + "," + elem_to_string(a.y.value) + ")";
    }

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
        if (a.is_field() != b.is_field()) return false;
        if (a.is_field()) return a.field() == b.field();
        return a.orders_ == b.orders_;
    }

private:
    GroupSpec() = default;
    static std::uint16_t u16(int v) { return static_cast<std::uint16_t>(v); }

    std::optional<Field> field_;
    std::vector<int> orders_;
    int cyclic_order_ = 0;
};

class Subgroup {
public:
    /// Additive closure of the generators. May have any order; callers that
    /// need |G| = D check the size.
    static Subgroup span(const GroupSpec& g, const std::vector<Point>& gens) {
        if (gens.empty()) throw invalid_argument_error("empty generator list");
        std::vector<char> in(g.order() * g.order(), 0);
        std::vector<Point> elems;
        auto idx = [&](Point p) { return p.x.value * g.order() + p.y.value; };
        Point zero{{0}, {0}};
        in[idx(zero)] = 1;
        elems.push_back(zero);
        for (std::size_t head = 0; head < elems.size(); ++head) {
            for (const Point& s : gens) {
                Point q = g.point_add(elems[head], s);
                if (!in[idx(q)]) { in[idx(q)] = 1; elems.push_back(q); }
            }
        }
        return Subgroup(g, std::move(elems));
    }

    /// Span of Z_p-independent generators over a field-backed group: all
    /// coefficient combinations, no closure pass. The basis doubles as the
    /// minimal generator list. Precondition (unchecked): independence.
    static Subgroup span_of_independent(const GroupSpec& g, const std::vector<Point>& basis) {
        const int p = g.field().characteristic();
        std::size_t total = 1;
        for (std::size_t i = 0; i < basis.size(); ++i) total *= p;
        std::vector<Point> elems{Point{{0}, {0}}};
        elems.reserve(total);
        for (const Point& b : basis) {
            const std::size_t base_size = elems.size();
            Point multiple = b;
            for (int k = 1; k < p; ++k) {
                for (std::size_t i = 0; i < base_size; ++i)
                    elems.push_back(g.point_add(elems[i], multiple));
                multiple = g.point_add(multiple, b);
            }
        }
        return Subgroup(g, std::move(elems), basis);
    }

    /// Validates closure and builds the canonical form.
    static Subgroup from_elements(const GroupSpec& g, std::vector<Point> elems) {
        std::vector<char> in(g.order() * g.order(), 0);
        auto idx = [&](Point p) { return p.x.value * g.order() + p.y.value; };
        for (const Point& p : elems) {
            if (p.x.value >= g.order() || p.y.value >= g.order())
                throw invalid_argument_error("point out of range");
            if (in[idx(p)]) throw invalid_argument_error("duplicate element");
            in[idx(p)] = 1;
        }
        if (elems.empty() || !in[0])
            throw invalid_argument_error("subgroup must contain (0,0)");
        for (const Point& a : elems)
            for (const Point& b : elems)
                if (!in[idx(g.point_add(a, b))])
                    throw invalid_argument_error("set is not closed under addition");
        return Subgroup(g, std::move(elems));
    }

    const GroupSpec& group() const { return group_; }
    const Field& field() const { return group_.field(); }

    /// Sorted by the canonical point order; first element is (0,0).
    const std::vector<Point>& elements() const { return elements_; }

    /// Minimal generator list, greedy in canonical order.
    const std::vector<Point>& generators() const { return generators_; }

    int size() const { return static_cast<int>(elements_.size()); }

    bool contains(Point p) const {
        return std::binary_search(elements_.begin(), elements_.end(), p,
                                  [this](Point a, Point b) { return group_.point_less(a, b); });
    }

    /// Canonical text key; equal keys iff equal subgroups over equal groups.
    std::string key() const {
        std::string k;
        for (const Point& p : elements_) {
            k += std::to_string(group_.rank(p.x.value));
            k += ',';
            k += std::to_string(group_.rank(p.y.value));
            k += ';';
        }
        return k;
    }

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.group_ == b.group_ && a.elements_ == b.elements_;
    }

private:
    Subgroup(const GroupSpec& g, std::vector<Point> elems, std::vector<Point> gens)
        : group_(g), elements_(std::move(elems)), generators_(std::move(gens)) {
        std::sort(elements_.begin(), elements_.end(),
                  [this](Point a, Point b) { return group_.point_less(a, b); });
    }

    Subgroup(const GroupSpec& g, std::vector<Point> elems) : group_(g), elements_(std::move(elems)) {
        std::sort(elements_.begin(), elements_.end(),
                  [this](Point a, Point b) { return group_.point_less(a, b); });
        // greedy minimal generators: extend the running span element by element
        std::vector<char> in(group_.order() * group_.order(), 0);
        auto idx = [&](Point p) { return p.x.value * group_.order() + p.y.value; };
        std::vector<Point> span_elems{Point{{0}, {0}}};
        in[0] = 1;
        for (const Point& p : elements_) {
            if (in[idx(p)]) continue;
            generators_.push_back(p);
            // span := span + <p>
            const std::vector<Point> base = span_elems;
            for (const Point& s : base) {
                Point q = s;
                while (true) {
                    q = group_.point_add(q, p);
                    if (q == s) break;
                    if (!in[idx(q)]) { in[idx(q)] = 1; span_elems.push_back(q); }
                }
            }
        }
    }

    GroupSpec group_;
    std::vector<Point> elements_;
    std::vector<Point> generators_;
};

/// a + G for every element a; used by coset partitioning.
inline std::vector<Point> coset_of(const Subgroup& g, Point a) {
    std::vector<Point> c;
    c.reserve(g.size());
    for (const Point& e : g.elements()) c.push_back(g.group().point_add(a, e));
    std::sort(c.begin(), c.end(),
              [&](Point u, Point v) { return g.group().point_less(u, v); });
    return c;
}

/// The quotient partition M x M / G, |G| = D. Block 0 is G itself; blocks are
/// ordered by their minimal element in grid reading order, which makes block
/// numbering match first appearance when scanning the rendered grid from the
/// bottom-left corner.
inline std::vector<std::vector<Point>> cosets(const Subgroup& g) {
    const GroupSpec& grp = g.group();
    const int d = grp.order();
    if (g.size() != d)
        throw invalid_argument_error("generating subgroup must have exactly D elements");
    std::vector<char> seen(d * d, 0);
    auto idx = [&](Point p) { return p.x.value * d + p.y.value; };
    std::vector<std::vector<Point>> blocks;
    for (int cell = 0; cell < d * d; ++cell) {
        Point rep = grp.point_at_cell(cell);
        if (seen[idx(rep)]) continue;
        auto block = coset_of(g, rep);
        for (const Point& p : block) seen[idx(p)] = 1;
        blocks.push_back(std::move(block));
    }
    return blocks;
}

/// Canonical subgroup order: elementwise (rank x, rank y) lexicographic over
/// the sorted element lists. Allocation-free equivalent of comparing keys.
inline bool subgroup_less(const Subgroup& a, const Subgroup& b) {
    const GroupSpec& g = a.group();
    const auto& ea = a.elements();
    const auto& eb = b.elements();
    const std::size_t m = std::min(ea.size(), eb.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (ea[i] == eb[i]) continue;
        return g.point_less(ea[i], eb[i]);
    }
    return ea.size() < eb.size();
}

/// Common elements of two subgroups over the same group.
inline std::vector<Point> intersect(const Subgroup& a, const Subgroup& b) {
    if (!(a.group() == b.group()))
        throw invalid_argument_error("subgroups over different groups");
    std::vector<Point> out;
    for (const Point& p : a.elements())
        if (b.contains(p)) out.push_back(p);
    return out;
}

inline bool trivial_intersection(const Subgroup& a, const Subgroup& b) {
    return intersect(a, b).size() == 1;
}

} // namespace ssq
