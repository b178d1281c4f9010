// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
//   1  figure reproduction, byte-exact against the goldens        < 1 s
//   2  orthogonality suite (figure sets + intersection law)       < 5 s
//   3  enumeration counts at d = 4                                < 1 s
//   4  theorem verifiers (4.3, 4.7, 4.8, 4.13, 3.5b)              < 10 s
//   5  d = 8 scale check, digest-stable across worker counts      < 60 s
//   6  property suites (axioms, trace, relabeling, JSON, CLI)
//
// Every construction is additionally checked, partition for partition,
// against independently transcribed reference grids (which carry a different
// block numbering), so the frozen goldens cannot drift.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace ssq;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::vector<std::string> details;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        details.push_back(what);
    }
}

struct Criterion {
    const char* label;
    double budget_ms;
    std::function<void()> body;
};

int run_cli_status(const std::string& args, std::string* out = nullptr) {
    std::string cmd = std::string(SSQ_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    char buf[4096];
    std::string text;
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) text.append(buf, got);
    if (out) *out = text;
    int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string shape_of(const SquareTaxonomy& t) {
    if (t.is_latin) return "latin";
    if (t.is_row_latin) return "row-latin";
    if (t.is_column_latin) return "column-latin";
    return "general";
}

void check_figure(const std::string& name, const std::vector<Square>& squares,
                  const std::string& golden, const std::string& reference,
                  const std::vector<std::string>& shapes) {
    auto grids = ssqt::split_grids(ssqt::read_golden(golden));
    auto ref_grids = ssqt::split_grids(ssqt::read_golden(reference));
    expect(grids.size() == squares.size(), name + ": golden grid count");
    expect(ref_grids.size() == squares.size(), name + ": reference grid count");
    for (std::size_t i = 0; i < squares.size(); ++i) {
        std::string r = render(squares[i]);
        expect(r == grids[i], name + " grid " + std::to_string(i + 1) + ": byte mismatch");
        expect(ssqt::partition_of(r) == ssqt::partition_of(ref_grids[i]),
               name + " grid " + std::to_string(i + 1) + ": partition differs from reference");
        expect(shape_of(classify(squares[i])) == shapes[i],
               name + " grid " + std::to_string(i + 1) + ": taxonomy, expected " + shapes[i]);
    }
}

void criterion_1_figures() {
    Field f4 = Field::make(2, 2);
    Square fig2 = supersquare(span_line(f4, ssqt::pt(f4, 1, 1)));
    expect(render(fig2) == ssqt::read_golden("fig2.txt"), "fig2: byte mismatch");
    expect(ssqt::partition_of(render(fig2)) ==
               ssqt::partition_of(ssqt::read_golden("fig2_reference.txt")),
           "fig2: partition differs from the figure");
    expect(shape_of(classify(fig2)) == "latin", "fig2: taxonomy");

    check_figure("fig4",
                 complete_set_to_squares(example_set_d4(f4, ssqt::pt(f4, 1, 0), ssqt::pt(f4, 0, 1))),
                 "fig4.txt", "fig4_reference.txt",
                 {"general", "general", "general", "latin", "latin"});
    check_figure("fig5",
                 complete_set_to_squares(
                     type_I(f4, ssqt::pstr(f4, "1", "m^2"), ssqt::pstr(f4, "0", "m"))),
                 "fig5.txt", "fig5_reference.txt",
                 {"latin", "row-latin", "latin", "column-latin", "latin"});
    check_figure("fig6",
                 complete_set_to_squares(
                     type_II(f4, ssqt::pstr(f4, "1", "m^2"), ssqt::pstr(f4, "1", "m"))),
                 "fig6.txt", "fig6_reference.txt",
                 {"latin", "column-latin", "general", "row-latin", "general"});
}

void criterion_2_orthogonality() {
    Field f4 = Field::make(2, 2);
    std::vector<std::vector<Square>> sets{
        complete_set_to_squares(example_set_d4(f4, ssqt::pt(f4, 1, 0), ssqt::pt(f4, 0, 1))),
        complete_set_to_squares(type_I(f4, ssqt::pstr(f4, "1", "m^2"), ssqt::pstr(f4, "0", "m"))),
        complete_set_to_squares(type_II(f4, ssqt::pstr(f4, "1", "m^2"), ssqt::pstr(f4, "1", "m")))};
    for (std::size_t k = 0; k < sets.size(); ++k) {
        long long pairs = 0;
        bool ok = true;
        for (std::size_t i = 0; i < sets[k].size(); ++i)
            for (std::size_t j = i + 1; j < sets[k].size(); ++j) {
                ++pairs;
                ok = ok && are_orthogonal(sets[k][i], sets[k][j]);
            }
        expect(ok && pairs == 10, "figure set " + std::to_string(k) + ": 10 orthogonal pairs");
    }

    // orthogonality <=> trivial intersection, exhaustive at d in {2,3,4}
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        Field f = Field::make(p, n);
        auto subs = all_order_d_subgroups(f);
        std::vector<Square> squares;
        squares.reserve(subs.size());
        for (const Subgroup& s : subs) squares.push_back(supersquare(s));
        long long pairs = 0;
        bool ok = true;
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (std::size_t j = i + 1; j < subs.size(); ++j) {
                ++pairs;
                ok = ok && (are_orthogonal(squares[i], squares[j]) ==
                            trivial_intersection(subs[i], subs[j]));
            }
        expect(ok, "intersection law at d=" + std::to_string(f.order()));
        if (f.order() == 4) expect(pairs == 35 * 34 / 2, "d=4: 595 subgroup pairs");
    }

    // the same law over a generic cyclic group
    GroupSpec z6 = GroupSpec::cyclic_product({6});
    auto subs = ssqt::cyclic_subgroups_of_order(z6, 6);
    bool ok = !subs.empty();
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = i + 1; j < subs.size(); ++j)
            ok = ok && (are_orthogonal(supersquare(subs[i]), supersquare(subs[j])) ==
                        trivial_intersection(subs[i], subs[j]));
    expect(ok, "intersection law over Z_6 pairs");
}

void criterion_3_counts() {
    Field f4 = Field::make(2, 2);
    auto subs = all_order_d_subgroups(f4);
    expect(subs.size() == 35, "d=4: 35 order-4 subgroups");
    auto extra = all_extraordinary(f4);
    expect(extra.size() == 15, "d=4: 15 extraordinary subgroups");
    int lines = 0;
    for (const Subgroup& s : extra)
        if (is_line(s)) ++lines;
    expect(lines == 5, "d=4: 5 lines");
    auto sets = all_complete_sets(f4, true);
    int ti = 0, tii = 0;
    for (const CompleteSet& cs : sets) {
        if (cs.kind() == SetKind::TypeI) ++ti;
        if (cs.kind() == SetKind::TypeII) ++tii;
    }
    expect(sets.size() == 6 && ti == 1 && tii == 5,
           "d=4: 6 extraordinary complete sets, split {TypeI: 1, TypeII: 5}");
}

void criterion_4_verifiers() {
    for (int p : {2, 3, 5}) {
        auto rep = verify_prop_4_3(Field::make(p, 1));
        expect(rep.pass, "prop 4.3 at p=" + std::to_string(p));
    }
    Field f4 = Field::make(2, 2);
    expect(verify_prop_4_7(f4).pass, "prop 4.7 completeness");
    expect(verify_lemma_4_8(f4).pass, "lemma 4.8");
    expect(verify_theorem_4_13(f4).pass, "theorem 4.13 bidirectional");
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}})
        expect(verify_prop_3_5b(Field::make(p, n)).pass,
               "prop 3.5(b) at d=" + std::to_string(Field::make(p, n).order()));
}

void criterion_5_scale() {
    Field f8 = Field::make(2, 3);
    auto extra = all_extraordinary(f8);
    expect(extra.size() == 135, "d=8: 135 extraordinary subgroups");

    auto r1 = enumerate_complete_sets_report(f8, true, 1, false);
    auto r3 = enumerate_complete_sets_report(f8, true, 3, false);
    expect(r1.counts.at(0).second > 0, "d=8: nonempty complete-set enumeration");
    expect(r1.digest == r3.digest, "d=8: digest identical across 1 and 3 workers");
    expect(r1.counts == r3.counts, "d=8: counts identical across worker counts");
}

void criterion_6_properties() {
    // field axioms, exhaustive through d = 16
    for (auto [p, n] : std::vector<std::pair<int, int>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
        Field f = Field::make(p, n);
        const int d = f.order();
        bool ok = true;
        long long expected_k = 1;
        for (int i = 0; i < n - 1; ++i) expected_k *= p;
        ok = ok && static_cast<long long>(f.trace_zero_set().size()) == expected_k;
        std::set<int> image;
        for (int a = 0; a < d && ok; ++a) {
            FieldElement ea = f.element(a);
            image.insert(f.trace(ea).value);
            ok = ok && f.add(ea, f.neg(ea)) == f.zero();
            if (a != 0) ok = ok && f.mul(ea, f.inv(ea)) == f.one();
            for (int b = 0; b < d && ok; ++b) {
                FieldElement eb = f.element(b);
                ok = ok && f.trace(f.add(ea, eb)) == f.add(f.trace(ea), f.trace(eb));
                for (int c = 0; c < d && ok; ++c) {
                    FieldElement ec = f.element(c);
                    ok = ok && f.add(f.add(ea, eb), ec) == f.add(ea, f.add(eb, ec));
                    ok = ok && f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec));
                    ok = ok && f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec));
                }
            }
        }
        ok = ok && static_cast<int>(image.size()) == p;
        expect(ok, "axioms/trace at GF(" + std::to_string(d) + ")");
    }

    // labeling invariance of orthogonality, randomized
    Field f4 = Field::make(2, 2);
    GroupSpec g = GroupSpec::field_pair(f4);
    auto squares =
        complete_set_to_squares(example_set_d4(f4, ssqt::pt(f4, 1, 0), ssqt::pt(f4, 0, 1)));
    std::mt19937 rng(20130815);
    bool relabel_ok = true;
    int cases = 0;
    for (int iter = 0; iter < 120; ++iter) {
        std::size_t i = rng() % squares.size(), j = rng() % squares.size();
        auto blocks = squares[i].blocks();
        std::shuffle(blocks.begin(), blocks.end(), rng);
        Square relabeled = square_from_partition(g, blocks);
        relabel_ok = relabel_ok && (are_orthogonal(relabeled, squares[j]) ==
                                    are_orthogonal(squares[i], squares[j]));
        ++cases;
    }
    expect(relabel_ok && cases >= 100, "labeling invariance, >= 100 randomized cases");

    // JSON round-trip on all figure sets plus the fig1 document
    bool json_ok = true;
    auto roundtrip = [&](const std::vector<Square>& set) {
        for (const Square& s : set)
            json_ok = json_ok && square_from_document(square_to_document(s)) == s;
    };
    roundtrip(squares);
    roundtrip(complete_set_to_squares(
        type_I(f4, ssqt::pstr(f4, "1", "m^2"), ssqt::pstr(f4, "0", "m"))));
    roundtrip(complete_set_to_squares(
        type_II(f4, ssqt::pstr(f4, "1", "m^2"), ssqt::pstr(f4, "1", "m"))));
    Square fig2 = supersquare(span_line(f4, ssqt::pt(f4, 1, 1)));
    json_ok = json_ok && square_from_document(square_to_document(fig2)) == fig2;
    Square fig1 = square_from_document(ssqt::read_golden("fig1.json"));
    json_ok = json_ok && square_from_document(square_to_document(fig1)) == fig1;
    expect(json_ok, "JSON round-trip on all goldens");

    // CLI exit-code contract: 0 true, 1 false, 2 usage, 3 data
    std::string fig2_path = "/tmp/ssq_acceptance_fig2.json";
    {
        std::ofstream out(fig2_path, std::ios::binary);
        out << square_to_document(fig2);
    }
    expect(run_cli_status("verify --theorem 4.8 --d 4") == 0, "CLI exit 0 on pass");
    expect(run_cli_status("check " + fig2_path + " " + fig2_path) == 1,
           "CLI exit 1 on property-false");
    expect(run_cli_status("field --p 4 --n 1") == 2, "CLI exit 2 on usage error");
    expect(run_cli_status("classify " + fig2_path + ".does_not_exist") == 3,
           "CLI exit 3 on data error");
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {"criterion 1: figure reproduction (Figs 2, 4, 5, 6, byte-exact)", 1000,
         criterion_1_figures},
        {"criterion 2: orthogonality suite (figure sets + intersection law)", 5000,
         criterion_2_orthogonality},
        {"criterion 3: enumeration counts at d=4 (35/15/5, 6 = 1+5)", 1000, criterion_3_counts},
        {"criterion 4: theorem verifiers (4.3, 4.7, 4.8, 4.13, 3.5b)", 10000,
         criterion_4_verifiers},
        {"criterion 5: d=8 scale check (135 subgroups, stable digests)", 60000,
         criterion_5_scale},
        {"criterion 6: property suites (axioms, relabeling, JSON, CLI)", 60000,
         criterion_6_properties},
    };

    int line = 0;
    for (const Criterion& c : criteria) {
        ++line;
        int before = failures;
        details.clear();
        auto t0 = Clock::now();
        c.body();
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (ms > c.budget_ms) {
            ++failures;
            details.push_back("exceeded runtime budget");
        }
        bool ok = failures == before;
        std::printf("[%s] %s (%.0f ms)\n", ok ? "PASS" : "FAIL", c.label, ms);
        for (const std::string& d : details) std::printf("       - %s\n", d.c_str());
    }
    if (failures) std::printf("%d check(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
