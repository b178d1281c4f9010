// Command-line surface: field, construct, check, classify, enumerate,
// verify, render.
//
// Exit codes: 0 success / property true, 1 property false, 2 usage error,
// 3 data error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssq/ssq.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ssq::Field field_for_order(int d) {
    for (int p = 2; p <= d; ++p) {
        bool prime = p >= 2;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) { prime = false; break; }
        if (!prime) continue;
        int n = 0;
        long long v = 1;
        while (v < d) { v *= p; ++n; }
        if (v == d) return ssq::Field::make(p, n);
    }
    throw UsageError("d must be a prime power, got " + std::to_string(d));
}

ssq::Point parse_point(const ssq::Field& f, const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError("point must be written as x,y (e.g. 1,m^2): " + text);
    try {
        return {f.parse(text.substr(0, comma)), f.parse(text.substr(comma + 1))};
    } catch (const ssq::parse_error& e) {
        throw UsageError(e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ssq::Square load_square(const std::string& path) {
    try {
        return ssq::square_from_document(read_file(path));
    } catch (const ssq::parse_error& e) {
        throw DataError(path + ": " + e.what());
    }
}

std::string taxonomy_line(const ssq::SquareTaxonomy& t) {
    std::string shape = t.is_latin            ? "latin"
                        : t.is_row_latin      ? "row-latin"
                        : t.is_column_latin   ? "column-latin"
                                              : "general";
    std::string out = shape;
    if (t.is_supersquare) out += ", supersquare";
    if (t.is_extraordinary) out += ", extraordinary";
    return out;
}

std::string subgroup_text(const ssq::Subgroup& g) {
    std::string out = "{";
    for (std::size_t i = 0; i < g.elements().size(); ++i) {
        if (i) out += ", ";
        out += g.group().point_to_string(g.elements()[i]);
    }
    return out + "}";
}

int default_jobs() {
    if (const char* env = std::getenv("SSQ_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

void cmd_field(int p, int n) {
    ssq::Field f = [&] {
        try {
            return ssq::Field::make(p, n);
        } catch (const ssq::invalid_argument_error& e) {
            throw UsageError(e.what());
        }
    }();
    const int d = f.order();
    std::cout << "GF(" << d << ") = GF(" << p << "^" << n << ")\n";
    std::cout << "modulus: " << f.modulus_string() << "\n";
    std::cout << "primitive: " << f.to_string(f.primitive_element()) << "\n";

    std::vector<std::string> names(d);
    std::size_t width = 1;
    for (int r = 0; r < d; ++r) {
        names[r] = f.to_string(f.element_at_rank(r));
        width = std::max(width, names[r].size());
    }
    auto pad = [&](const std::string& s) {
        return s + std::string(width - s.size() + 1, ' ');
    };
    auto table = [&](const char* title, auto op) {
        std::cout << title << ":\n" << pad("") << "| ";
        for (int c = 0; c < d; ++c) std::cout << pad(names[c]);
        std::cout << "\n";
        for (int r = 0; r < d; ++r) {
            std::cout << pad(names[r]) << "| ";
            for (int c = 0; c < d; ++c)
                std::cout << pad(f.to_string(op(f.element_at_rank(r), f.element_at_rank(c))));
            std::cout << "\n";
        }
    };
    table("add", [&](ssq::FieldElement a, ssq::FieldElement b) { return f.add(a, b); });
    table("mul", [&](ssq::FieldElement a, ssq::FieldElement b) { return f.mul(a, b); });

    std::cout << "trace:";
    for (int r = 0; r < d; ++r) {
        ssq::FieldElement e = f.element_at_rank(r);
        std::cout << " tr(" << names[r] << ")=" << f.to_string(f.trace(e));
    }
    std::cout << "\n";

    auto k = f.trace_zero_set();
    std::cout << "K = {";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << f.to_string(k[i]);
    }
    std::cout << "}\n|K| = " << k.size() << "\n";
}

void cmd_construct(const std::string& kind, int d, const std::string& v1s,
                   const std::string& v2s, const std::string& format) {
    ssq::Field f = [&] {
        try {
            return field_for_order(d);
        } catch (const ssq::invalid_argument_error& e) {
            throw UsageError(e.what());
        }
    }();
    if ((kind == "example" || kind == "typeI" || kind == "typeII") && d != 4)
        throw UsageError("--type " + kind + " requires --d 4");
    ssq::Point v1 = parse_point(f, v1s);
    ssq::Point v2 = parse_point(f, v2s);

    ssq::CompleteSet cs = [&] {
        try {
            if (kind == "fan") return ssq::basis_fan(f, v1, v2);
            if (kind == "example") return ssq::example_set_d4(f, v1, v2);
            if (kind == "typeI") return ssq::type_I(f, v1, v2);
            if (kind == "typeII") return ssq::type_II(f, v1, v2);
            throw UsageError("unknown construction kind: " + kind);
        } catch (const ssq::not_a_basis_error& e) {
            throw DataError(e.what());
        } catch (const ssq::determinant_not_one_error& e) {
            throw DataError(e.what());
        }
    }();

    std::vector<ssq::Square> squares = ssq::complete_set_to_squares(cs);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const ssq::Square& s : squares) arr.push_back(ssq::square_to_json(s));
        std::cout << arr.dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < squares.size(); ++i) {
        if (i) std::cout << "\n";
        std::cout << ssq::render(squares[i]);
    }
}

int cmd_check(const std::vector<std::string>& files) {
    std::vector<ssq::Square> squares;
    for (const std::string& path : files) squares.push_back(load_square(path));
    for (std::size_t i = 1; i < squares.size(); ++i)
        if (!(squares[i].group() == squares[0].group()))
            throw DataError("documents use different groups/orders");
    long long pairs = 0;
    for (std::size_t i = 0; i < squares.size(); ++i)
        for (std::size_t j = i + 1; j < squares.size(); ++j) {
            ++pairs;
            auto w = ssq::orthogonality_witness(squares[i], squares[j]);
            if (!w.orthogonal) {
                const auto& g = squares[i].group();
                std::cout << "not orthogonal: " << files[i] << " vs " << files[j]
                          << "\nlabel pair (" << w.label_s << "," << w.label_t
                          << ") repeats at " << g.point_to_string(w.first_cell) << " and "
                          << g.point_to_string(w.second_cell) << "\n";
                return kExitFalse;
            }
        }
    std::cout << "mutually orthogonal: " << squares.size() << " squares, " << pairs
              << " pairs checked\n";
    return kExitOk;
}

void cmd_classify(const std::string& file) {
    ssq::Square s = load_square(file);
    ssq::SquareTaxonomy t = ssq::classify(s);
    std::cout << taxonomy_line(t) << "\n";
    if (t.generating_subgroup)
        std::cout << "generating subgroup: " << subgroup_text(*t.generating_subgroup) << "\n";
}

void print_report(const ssq::EnumerationReport& rep, bool count_only) {
    nlohmann::json j;
    j["target"] = rep.target;
    j["p"] = rep.p;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["extraordinary_only"] = rep.extraordinary_only;
    nlohmann::json counts;
    for (const auto& [k, v] : rep.counts) counts[k] = v;
    j["counts"] = counts;
    j["digest"] = rep.digest;
    j["jobs"] = rep.jobs;
    j["elapsed_ms"] = rep.elapsed_ms;
    if (!count_only && !rep.listing.empty()) j["listing"] = rep.listing;
    std::cout << j.dump(2) << "\n";
}

void cmd_enumerate(const std::string& target, int d, bool extraordinary, bool count_only,
                   bool list, int jobs) {
    ssq::Field f = [&] {
        try {
            return field_for_order(d);
        } catch (const ssq::invalid_argument_error& e) {
            throw UsageError(e.what());
        }
    }();
    try {
        if (target == "subgroups") {
            print_report(ssq::enumerate_subgroups_report(f, false, list && !count_only),
                         count_only);
        } else if (target == "extraordinary") {
            print_report(ssq::enumerate_subgroups_report(f, true, list && !count_only),
                         count_only);
        } else if (target == "complete-sets") {
            print_report(
                ssq::enumerate_complete_sets_report(f, extraordinary, jobs, list && !count_only),
                count_only);
        } else {
            throw UsageError("unknown enumeration target: " + target);
        }
    } catch (const ssq::unsupported_order_error& e) {
        throw UsageError(e.what());
    }
}

int cmd_verify(const std::string& theorem, int d) {
    ssq::VerificationReport rep;
    try {
        if (theorem == "4.7") {
            if (d != 4) throw UsageError("theorem 4.7 is specific to d = 4");
            rep = ssq::verify_prop_4_7(field_for_order(4));
        } else if (theorem == "4.8") {
            if (d != 4) throw UsageError("lemma 4.8 is specific to d = 4");
            rep = ssq::verify_lemma_4_8(field_for_order(4));
        } else if (theorem == "4.13") {
            if (d != 4) throw UsageError("theorem 4.13 is specific to d = 4");
            rep = ssq::verify_theorem_4_13(field_for_order(4));
        } else if (theorem == "3.5b") {
            rep = ssq::verify_prop_3_5b(field_for_order(d));
        } else {
            throw UsageError("unknown theorem selector: " + theorem);
        }
    } catch (const ssq::unsupported_order_error& e) {
        throw UsageError(e.what());
    } catch (const ssq::invalid_argument_error& e) {
        throw UsageError(e.what());
    }
    std::cout << rep.name << ": " << (rep.pass ? "pass" : "FAIL") << " ("
              << rep.cases_checked << " cases)\n";
    for (const std::string& n : rep.notes) std::cout << "  " << n << "\n";
    for (const std::string& c : rep.counterexamples) std::cout << "  counterexample: " << c << "\n";
    return rep.pass ? kExitOk : kExitFalse;
}

void cmd_render(const std::string& file, const std::string& origin) {
    ssq::Square s = load_square(file);
    std::cout << ssq::render(s, origin == "top" ? ssq::Origin::Top : ssq::Origin::Bottom);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mutually orthogonal supersquares over finite fields"};
    app.require_subcommand(1);

    auto* field_cmd = app.add_subcommand("field", "print GF(p^n) tables, trace and K");
    int fp = 0, fn = 1;
    field_cmd->add_option("--p", fp, "characteristic")->required();
    field_cmd->add_option("--n", fn, "extension degree")->required();

    auto* construct = app.add_subcommand("construct", "build a complete set of supersquares");
    std::string kind, v1s, v2s, format = "ascii";
    int cd = 4;
    construct->add_option("--type", kind, "fan|example|typeI|typeII")->required();
    construct->add_option("--d", cd, "square order (prime power)")->required();
    construct->add_option("--v1", v1s, "first vector, e.g. 1,m^2")->required();
    construct->add_option("--v2", v2s, "second vector, e.g. 0,m")->required();
    construct->add_option("--format", format, "ascii|json")
        ->check(CLI::IsMember({"ascii", "json"}));

    auto* check = app.add_subcommand("check", "test mutual orthogonality of square documents");
    std::vector<std::string> check_files;
    check->add_option("files", check_files, "square documents")->expected(2, -1);

    auto* classify_cmd = app.add_subcommand("classify", "print the taxonomy of a square document");
    std::string classify_file;
    classify_cmd->add_option("file", classify_file, "square document")->required();

    auto* enumerate = app.add_subcommand("enumerate", "enumerate subgroups or complete sets");
    std::string target;
    int ed = 4;
    bool extraordinary = false, count_only = false, list = false;
    int jobs = default_jobs();
    enumerate->add_option("target", target, "subgroups|extraordinary|complete-sets")->required();
    enumerate->add_option("--d", ed, "square order (prime power)")->required();
    enumerate->add_flag("--extraordinary", extraordinary, "restrict to extraordinary subgroups");
    enumerate->add_flag("--count-only", count_only, "suppress listings");
    enumerate->add_flag("--list", list, "include the full listing");
    enumerate->add_option("--jobs", jobs, "worker count (default SSQ_JOBS or 1)");

    auto* verify = app.add_subcommand("verify", "machine-check a theorem");
    std::string theorem;
    int vd = 4;
    verify->add_option("--theorem", theorem, "4.7|4.8|4.13|3.5b")->required();
    verify->add_option("--d", vd, "square order where applicable");

    auto* render_cmd = app.add_subcommand("render", "print the grid of a square document");
    std::string render_file, origin = "bottom";
    render_cmd->add_option("file", render_file, "square document")->required();
    render_cmd->add_option("--origin", origin, "bottom|top")
        ->check(CLI::IsMember({"bottom", "top"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*field_cmd) {
            cmd_field(fp, fn);
            return kExitOk;
        }
        if (*construct) {
            cmd_construct(kind, cd, v1s, v2s, format);
            return kExitOk;
        }
        if (*check) return cmd_check(check_files);
        if (*classify_cmd) {
            cmd_classify(classify_file);
            return kExitOk;
        }
        if (*enumerate) {
            cmd_enumerate(target, ed, extraordinary, count_only, list, jobs);
            return kExitOk;
        }
        if (*verify) return cmd_verify(theorem, vd);
        if (*render_cmd) {
            cmd_render(render_file, origin);
            return kExitOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const ssq::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const ssq::invalid_argument_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
