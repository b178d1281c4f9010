#pragma once

// Squares as labeled partitions of M x M, supersquares built from generating
// subgroups, orthogonality, and the latin/row-latin/column-latin taxonomy.
// Grids are drawn with x along the columns (left to right in canonical
// order) and y along the rows; origin=bottom puts y = 0 on the bottom line.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ssq/errors.hpp"
#include "ssq/group.hpp"
#include "ssq/vector_space.hpp"

namespace ssq {

enum class Origin { Bottom, Top };

struct SquareTaxonomy {
    bool is_latin = false;
    bool is_row_latin = false;
    bool is_column_latin = false;
    bool is_supersquare = false;
    bool is_extraordinary = false;
    std::optional<Subgroup> generating_subgroup;
};

class Square {
public:
    /// Blocks in label order: block j carries the number j+1. Validates the
    /// partition: D blocks, each of cardinality D, disjoint, covering M x M.
    static Square from_partition(const GroupSpec& g, std::vector<std::vector<Point>> blocks) {
        const int d = g.order();
        if (static_cast<int>(blocks.size()) != d)
            throw invalid_partition_error("expected exactly D blocks");
        std::vector<int> label(d * d, 0);
        for (int j = 0; j < d; ++j) {
            if (static_cast<int>(blocks[j].size()) != d)
                throw invalid_partition_error("block " + std::to_string(j + 1) +
                                              " does not have cardinality D");
            for (const Point& p : blocks[j]) {
                if (p.x.value >= d || p.y.value >= d)
                    throw invalid_partition_error("point out of range");
                int& slot = label[p.x.value * d + p.y.value];
                if (slot != 0) throw invalid_partition_error("blocks are not disjoint");
                slot = j + 1;
            }
            std::sort(blocks[j].begin(), blocks[j].end(),
                      [&](Point a, Point b) { return g.point_less(a, b); });
        }
        return Square(g, std::move(blocks), std::move(label));
    }

    const GroupSpec& group() const { return group_; }
    int order() const { return group_.order(); }
    const std::vector<std::vector<Point>>& blocks() const { return blocks_; }

    /// The number in 1..D assigned to a point.
    int label_of(Point p) const { return label_[p.x.value * order() + p.y.value]; }

    friend bool operator==(const Square& a, const Square& b) {
        return a.group_ == b.group_ && a.blocks_ == b.blocks_;
    }

private:
    Square(const GroupSpec& g, std::vector<std::vector<Point>> blocks, std::vector<int> label)
        : group_(g), blocks_(std::move(blocks)), label_(std::move(label)) {}

    GroupSpec group_;
    std::vector<std::vector<Point>> blocks_;
    std::vector<int> label_;
};

/// The supersquare generated by A1 (|A1| = D): blocks are the cosets of A1,
/// numbered in grid reading order, A1 itself first.
inline Square supersquare(const Subgroup& a1) {
    return Square::from_partition(a1.group(), cosets(a1));
}

[[nodiscard]] inline Square square_from_partition(const GroupSpec& g,
                                                  std::vector<std::vector<Point>> blocks) {
    return Square::from_partition(g, std::move(blocks));
}

struct OrthogonalityWitness {
    bool orthogonal = true;
    // populated when not orthogonal: two cells carrying the same label pair
    Point first_cell{}, second_cell{};
    int label_s = 0, label_t = 0;
};

inline OrthogonalityWitness orthogonality_witness(const Square& s, const Square& t) {
    if (!(s.group() == t.group()))
        throw invalid_argument_error("squares over different groups");
    const int d = s.order();
    std::vector<int> seen(d * d, -1); // (label_s-1)*d + (label_t-1) -> cell
    for (int cell = 0; cell < d * d; ++cell) {
        Point p = s.group().point_at_cell(cell);
        int key = (s.label_of(p) - 1) * d + (t.label_of(p) - 1);
        if (seen[key] >= 0) {
            OrthogonalityWitness w;
            w.orthogonal = false;
            w.first_cell = s.group().point_at_cell(seen[key]);
            w.second_cell = p;
            w.label_s = s.label_of(p);
            w.label_t = t.label_of(p);
            return w;
        }
        seen[key] = cell;
    }
    return {};
}

/// Orthogonal: all D^2 ordered label pairs are distinct.
inline bool are_orthogonal(const Square& s, const Square& t) {
    return orthogonality_witness(s, t).orthogonal;
}

inline bool mutually_orthogonal(const std::vector<Square>& squares) {
    for (std::size_t i = 0; i < squares.size(); ++i)
        for (std::size_t j = i + 1; j < squares.size(); ++j)
            if (!are_orthogonal(squares[i], squares[j])) return false;
    return true;
}

/// A square is extraordinary when the block containing (0,0) is an
/// extraordinary subgroup; it is a supersquare when that block is a subgroup
/// and every block is one of its cosets.
inline SquareTaxonomy classify(const Square& s) {
    const GroupSpec& g = s.group();
    const int d = g.order();
    SquareTaxonomy t;

    t.is_row_latin = true;
    t.is_column_latin = true;
    for (int r = 0; r < d && (t.is_row_latin || t.is_column_latin); ++r) {
        std::vector<char> row_seen(d + 1, 0), col_seen(d + 1, 0);
        for (int c = 0; c < d; ++c) {
            Point in_row{{static_cast<std::uint16_t>(g.element_at_rank(c))},
                         {static_cast<std::uint16_t>(g.element_at_rank(r))}};
            Point in_col{{static_cast<std::uint16_t>(g.element_at_rank(r))},
                         {static_cast<std::uint16_t>(g.element_at_rank(c))}};
            if (row_seen[s.label_of(in_row)]) t.is_row_latin = false;
            row_seen[s.label_of(in_row)] = 1;
            if (col_seen[s.label_of(in_col)]) t.is_column_latin = false;
            col_seen[s.label_of(in_col)] = 1;
        }
    }
    t.is_latin = t.is_row_latin && t.is_column_latin;

    // the only block that can be a subgroup is the one containing (0,0)
    const Point zero{{0}, {0}};
    const auto& zero_block = s.blocks()[s.label_of(zero) - 1];
    bool is_subgroup = true;
    std::vector<char> in_block(d * d, 0);
    for (const Point& p : zero_block) in_block[p.x.value * d + p.y.value] = 1;
    for (const Point& a : zero_block) {
        for (const Point& b : zero_block) {
            Point q = g.point_add(a, b);
            if (!in_block[q.x.value * d + q.y.value]) { is_subgroup = false; break; }
        }
        if (!is_subgroup) break;
    }

    if (is_subgroup) {
        Subgroup a1 = Subgroup::from_elements(g, zero_block);
        if (g.is_field()) t.is_extraordinary = is_extraordinary(a1);
        t.is_supersquare = true;
        for (const auto& block : s.blocks()) {
            const Point rep = block.front();
            for (const Point& p : block)
                if (!a1.contains(g.point_sub(p, rep))) { t.is_supersquare = false; break; }
            if (!t.is_supersquare) break;
        }
        if (t.is_supersquare) t.generating_subgroup = std::move(a1);
    }
    return t;
}

/// D x D grid of labels, rows separated by newlines, labels by single
/// spaces (right-aligned when D > 9). origin=bottom draws y = 0 last.
inline std::string render(const Square& s, Origin origin = Origin::Bottom) {
    const GroupSpec& g = s.group();
    const int d = g.order();
    const int width = d > 9 ? static_cast<int>(std::to_string(d).size()) : 1;
    std::string out;
    for (int i = 0; i < d; ++i) {
        const int r = origin == Origin::Bottom ? d - 1 - i : i;
        for (int c = 0; c < d; ++c) {
            Point p{{static_cast<std::uint16_t>(g.element_at_rank(c))},
                    {static_cast<std::uint16_t>(g.element_at_rank(r))}};
            std::string lab = std::to_string(s.label_of(p));
            if (c > 0) out += ' ';
            out.append(width - static_cast<int>(lab.size()), ' ');
            out += lab;
        }
        out += '\n';
    }
    return out;
}

} // namespace ssq
