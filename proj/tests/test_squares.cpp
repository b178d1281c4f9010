#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_support.hpp"

using namespace ssq;
using ssqt::pt;
using ssqt::pstr;

namespace {

Square fig2_square() {
    Field f4 = Field::make(2, 2);
    return supersquare(span_line(f4, pt(f4, 1, 1)));
}

std::vector<Square> fig4_squares() {
    Field f4 = Field::make(2, 2);
    return complete_set_to_squares(example_set_d4(f4, pt(f4, 1, 0), pt(f4, 0, 1)));
}

} // namespace

TEST_CASE("square_from_partition accepts the fig2 blocks") {
    Field f4 = Field::make(2, 2);
    GroupSpec g = GroupSpec::field_pair(f4);
    // the diagonal square as an explicit partition
    std::vector<std::vector<Point>> blocks{
        {pt(f4, 0, 0), pt(f4, 1, 1), pstr(f4, "m", "m"), pstr(f4, "m^2", "m^2")},
        {pt(f4, 0, 1), pt(f4, 1, 0), pstr(f4, "m", "m^2"), pstr(f4, "m^2", "m")},
        {pstr(f4, "0", "m"), pstr(f4, "1", "m^2"), pstr(f4, "m", "0"), pstr(f4, "m^2", "1")},
        {pstr(f4, "0", "m^2"), pstr(f4, "1", "m"), pstr(f4, "m", "1"), pstr(f4, "m^2", "0")}};
    Square s = square_from_partition(g, blocks);
    CHECK(render(s) == ssqt::read_golden("fig2.txt"));
    CHECK(s == fig2_square());
}

TEST_CASE("square_from_partition on a 2x2 cyclic group") {
    GroupSpec z2 = GroupSpec::cyclic_product({2});
    auto p = [](int x, int y) {
        return Point{{static_cast<std::uint16_t>(x)}, {static_cast<std::uint16_t>(y)}};
    };
    Square s = square_from_partition(z2, {{p(0, 0), p(1, 1)}, {p(0, 1), p(1, 0)}});
    CHECK(render(s) == "2 1\n1 2\n");
    auto t = classify(s);
    CHECK(t.is_latin);
}

TEST_CASE("square_from_partition rejects bad partitions") {
    Field f4 = Field::make(2, 2);
    GroupSpec g = GroupSpec::field_pair(f4);
    std::vector<std::vector<Point>> blocks{
        {pt(f4, 0, 0), pt(f4, 1, 1), pt(f4, 2, 2)},
        {pt(f4, 0, 1), pt(f4, 1, 0), pt(f4, 2, 3), pt(f4, 3, 2), pt(f4, 3, 3)},
        {pt(f4, 0, 2), pt(f4, 1, 3), pt(f4, 2, 0), pt(f4, 3, 1)},
        {pt(f4, 0, 3), pt(f4, 1, 2), pt(f4, 2, 1), pt(f4, 3, 0)}};
    CHECK_THROWS_AS(square_from_partition(g, blocks), invalid_partition_error);

    // duplicate cell across blocks
    std::vector<std::vector<Point>> dup{
        {pt(f4, 0, 0), pt(f4, 1, 1), pt(f4, 2, 2), pt(f4, 3, 3)},
        {pt(f4, 0, 0), pt(f4, 1, 0), pt(f4, 2, 3), pt(f4, 3, 2)},
        {pt(f4, 0, 2), pt(f4, 1, 3), pt(f4, 2, 0), pt(f4, 3, 1)},
        {pt(f4, 0, 3), pt(f4, 1, 2), pt(f4, 2, 1), pt(f4, 3, 0)}};
    CHECK_THROWS_AS(square_from_partition(g, dup), invalid_partition_error);
}

TEST_CASE("supersquare reproduces the fig2 and fig4 goldens") {
    CHECK(render(fig2_square()) == ssqt::read_golden("fig2.txt"));

    Field f4 = Field::make(2, 2);
    Square a = supersquare(span_additive(f4, {pt(f4, 1, 0), pt(f4, 0, 1)}));
    CHECK(render(a) == ssqt::split_grids(ssqt::read_golden("fig4.txt"))[0]);

    CHECK_THROWS_AS(supersquare(span_additive(f4, {pt(f4, 1, 1)})), invalid_argument_error);
}

TEST_CASE("supersquare over the diagonal of Z_6 x Z_6 is a 6x6 Latin square") {
    GroupSpec z6 = GroupSpec::cyclic_product({6});
    Subgroup diag = Subgroup::span(z6, {Point{{1}, {1}}});
    REQUIRE(diag.size() == 6);
    Square s = supersquare(diag);
    auto t = classify(s);
    CHECK(t.is_latin);
    CHECK(t.is_supersquare);
    CHECK_FALSE(t.is_extraordinary); // no field structure
}

TEST_CASE("are_orthogonal examples") {
    auto fig4 = fig4_squares();
    CHECK(are_orthogonal(fig4[3], fig4[4]));
    CHECK_FALSE(are_orthogonal(fig4[0], fig4[0]));

    Field f4 = Field::make(2, 2);
    auto fig5 = complete_set_to_squares(type_I(f4, pstr(f4, "1", "m^2"), pstr(f4, "0", "m")));
    CHECK(are_orthogonal(fig5[1], fig5[3])); // row-constant vs column-constant

    GroupSpec z2 = GroupSpec::cyclic_product({2});
    auto p = [](int x, int y) {
        return Point{{static_cast<std::uint16_t>(x)}, {static_cast<std::uint16_t>(y)}};
    };
    Square s = square_from_partition(z2, {{p(0, 0), p(1, 1)}, {p(0, 1), p(1, 0)}});
    CHECK_THROWS_AS(are_orthogonal(s, fig4[0]), invalid_argument_error);
}

TEST_CASE("classify examples") {
    // fig1 document: row-Latin only
    Square fig1 = square_from_document(ssqt::read_golden("fig1.json"));
    auto t1 = classify(fig1);
    CHECK(t1.is_row_latin);
    CHECK_FALSE(t1.is_column_latin);
    CHECK_FALSE(t1.is_latin);
    CHECK_FALSE(t1.is_supersquare);
    CHECK_FALSE(t1.is_extraordinary);

    auto t2 = classify(fig2_square());
    CHECK(t2.is_latin);
    CHECK(t2.is_supersquare);
    CHECK(t2.is_extraordinary);
    Field f4 = Field::make(2, 2);
    REQUIRE(t2.generating_subgroup.has_value());
    CHECK(*t2.generating_subgroup == span_line(f4, pt(f4, 1, 1)));

    auto fig6 = complete_set_to_squares(type_II(f4, pstr(f4, "1", "m^2"), pstr(f4, "1", "m")));
    auto tb = classify(fig6[1]);
    CHECK(tb.is_column_latin);
    CHECK_FALSE(tb.is_row_latin);
    CHECK(tb.is_supersquare);
    CHECK(tb.is_extraordinary);
}

TEST_CASE("extraordinary squares need not be supersquares") {
    // keep the diagonal block, scramble the others: still extraordinary per
    // Def 4.2, no longer a quotient
    Field f4 = Field::make(2, 2);
    GroupSpec g = GroupSpec::field_pair(f4);
    auto blocks = cosets(span_line(f4, pt(f4, 1, 1)));
    std::swap(blocks[1][0], blocks[2][0]);
    Square s = square_from_partition(g, blocks);
    auto t = classify(s);
    CHECK(t.is_extraordinary);
    CHECK_FALSE(t.is_supersquare);
}

TEST_CASE("render examples") {
    CHECK(render(fig2_square()) == "4 3 2 1\n3 4 1 2\n2 1 4 3\n1 2 3 4\n");
    CHECK(render(fig2_square(), Origin::Top) == "1 2 3 4\n2 1 4 3\n3 4 1 2\n4 3 2 1\n");

    auto fig4 = fig4_squares();
    CHECK(render(fig4[1]) == "3 4 3 4\n1 2 1 2\n3 4 3 4\n1 2 1 2\n");

    GroupSpec z1 = GroupSpec::cyclic_product({1});
    Square unit = square_from_partition(z1, {{Point{{0}, {0}}}});
    CHECK(render(unit) == "1\n");

    // widths beyond one digit stay aligned
    GroupSpec z12 = GroupSpec::cyclic_product({12});
    Subgroup diag = Subgroup::span(z12, {Point{{1}, {1}}});
    std::string grid = render(supersquare(diag));
    CHECK(grid.substr(grid.size() - 36) == " 1  2  3  4  5  6  7  8  9 10 11 12\n");
}

TEST_CASE("mutually_orthogonal examples") {
    auto fig4 = fig4_squares();
    CHECK(mutually_orthogonal(fig4));

    Field f4 = Field::make(2, 2);
    auto fig6 = complete_set_to_squares(type_II(f4, pstr(f4, "1", "m^2"), pstr(f4, "1", "m")));
    CHECK(mutually_orthogonal(fig6));

    auto dup = fig4;
    dup.push_back(fig4[0]);
    CHECK_FALSE(mutually_orthogonal(dup));
}

TEST_CASE("orthogonality is invariant under relabeling (randomized)") {
    auto fig4 = fig4_squares();
    Field f4 = Field::make(2, 2);
    GroupSpec g = GroupSpec::field_pair(f4);
    std::mt19937 rng(987654321);
    int cases = 0;
    for (int iter = 0; iter < 110; ++iter) {
        std::size_t i = rng() % fig4.size(), j = rng() % fig4.size();
        std::vector<std::vector<Point>> blocks = fig4[i].blocks();
        std::shuffle(blocks.begin(), blocks.end(), rng);
        Square relabeled = square_from_partition(g, blocks);
        REQUIRE(are_orthogonal(relabeled, fig4[j]) == are_orthogonal(fig4[i], fig4[j]));
        ++cases;
    }
    CHECK(cases >= 100);
}

TEST_CASE("orthogonality matches trivial intersection, exhaustive at d in {2,3,4}") {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        Field f = Field::make(p, n);
        auto subs = all_order_d_subgroups(f);
        std::vector<Square> squares;
        squares.reserve(subs.size());
        for (const Subgroup& s : subs) squares.push_back(supersquare(s));
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (std::size_t j = i + 1; j < subs.size(); ++j)
                REQUIRE(are_orthogonal(squares[i], squares[j]) ==
                        trivial_intersection(subs[i], subs[j]));
    }
}

TEST_CASE("orthogonality matches trivial intersection over Z_6") {
    GroupSpec z6 = GroupSpec::cyclic_product({6});
    auto subs = ssqt::cyclic_subgroups_of_order(z6, 6);
    CHECK(subs.size() == 12); // 3 subgroups of Z_2^2 times 4 of Z_3^2
    std::vector<Square> squares;
    for (const Subgroup& s : subs) squares.push_back(supersquare(s));
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = i + 1; j < subs.size(); ++j)
            REQUIRE(are_orthogonal(squares[i], squares[j]) ==
                    trivial_intersection(subs[i], subs[j]));
}

TEST_CASE("the diagonal supersquare is Latin over every supported field") {
    for (auto [p, n] :
         std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}}) {
        Field f = Field::make(p, n);
        Square s = supersquare(span_line(f, pt(f, 1, 1)));
        CHECK(classify(s).is_latin);
    }
}

TEST_CASE("every label occurs exactly D times") {
    for (const Square& s : fig4_squares()) {
        const int d = s.order();
        std::vector<int> counts(d + 1, 0);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                ++counts[s.label_of({{static_cast<std::uint16_t>(x)},
                                     {static_cast<std::uint16_t>(y)}})];
        for (int l = 1; l <= d; ++l) CHECK(counts[l] == d);
    }
}
