#pragma once

// Persisted square documents (schema 1):
//
//   {
//     "schema": 1,
//     "field": {"p": 2, "n": 2, "modulus": [1, 1, 1]},   // or "group": {"cyclic": [6]}
//     "blocks": [[[x, y], ...], ...],                    // element indices in [0, D)
//     "labels": [..]                                     // optional block relabeling
//   }
//
// Blocks are stored in label order; an optional "labels" array (a bijection
// of 1..D) reassigns numbers on input. Emission is canonical and label-free.

#include <string>
#include <vector>

#include <json.hpp>

#include "ssq/errors.hpp"
#include "ssq/squares.hpp"

namespace ssq {

inline nlohmann::json group_to_json(const GroupSpec& g) {
    nlohmann::json j;
    if (g.is_field()) {
        const Field& f = g.field();
        j["p"] = f.characteristic();
        j["n"] = f.degree();
        j["modulus"] = f.modulus();
    } else {
        j["cyclic"] = g.cyclic_orders();
    }
    return j;
}

inline nlohmann::json square_to_json(const Square& s) {
    nlohmann::json j;
    j["schema"] = 1;
    if (s.group().is_field())
        j["field"] = group_to_json(s.group());
    else
        j["group"] = group_to_json(s.group());
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& block : s.blocks()) {
        nlohmann::json b = nlohmann::json::array();
        for (const Point& p : block)
            b.push_back({static_cast<int>(p.x.value), static_cast<int>(p.y.value)});
        blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

inline std::string square_to_document(const Square& s) { return square_to_json(s).dump(2) + "\n"; }

inline Square square_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("document must be a JSON object");
    if (!j.contains("schema") || !j["schema"].is_number_integer() || j["schema"].get<int>() != 1)
        throw parse_error("unsupported or missing schema version");

    GroupSpec group = [&] {
        if (j.contains("field")) {
            const auto& fd = j["field"];
            if (!fd.contains("p") || !fd.contains("n"))
                throw parse_error("field descriptor needs p and n");
            int p = fd["p"].get<int>();
            int n = fd["n"].get<int>();
            try {
                if (fd.contains("modulus"))
                    return GroupSpec::field_pair(
                        Field::make(p, n, fd["modulus"].get<std::vector<int>>()));
                return GroupSpec::field_pair(Field::make(p, n));
            } catch (const invalid_argument_error& e) {
                throw parse_error(std::string("bad field descriptor: ") + e.what());
            }
        }
        if (j.contains("group")) {
            const auto& gd = j["group"];
            if (!gd.contains("cyclic")) throw parse_error("group descriptor needs cyclic orders");
            try {
                return GroupSpec::cyclic_product(gd["cyclic"].get<std::vector<int>>());
            } catch (const invalid_argument_error& e) {
                throw parse_error(std::string("bad group descriptor: ") + e.what());
            }
        }
        throw parse_error("document needs a field or group descriptor");
    }();

    if (!j.contains("blocks") || !j["blocks"].is_array())
        throw parse_error("document needs a blocks array");
    const int d = group.order();
    std::vector<std::vector<Point>> blocks;
    for (const auto& jb : j["blocks"]) {
        if (!jb.is_array()) throw parse_error("block must be an array of [x,y] pairs");
        std::vector<Point> block;
        for (const auto& jp : jb) {
            if (!jp.is_array() || jp.size() != 2)
                throw parse_error("point must be an [x,y] pair");
            int x = jp[0].get<int>(), y = jp[1].get<int>();
            if (x < 0 || x >= d || y < 0 || y >= d)
                throw parse_error("element index out of range");
            block.push_back({{static_cast<std::uint16_t>(x)}, {static_cast<std::uint16_t>(y)}});
        }
        blocks.push_back(std::move(block));
    }

    if (j.contains("labels")) {
        const auto labels = j["labels"].get<std::vector<int>>();
        if (static_cast<int>(labels.size()) != static_cast<int>(blocks.size()))
            throw parse_error("labels must assign one number per block");
        std::vector<std::vector<Point>> relabeled(blocks.size());
        std::vector<char> used(blocks.size() + 1, 0);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            int l = labels[i];
            if (l < 1 || l > static_cast<int>(blocks.size()) || used[l])
                throw parse_error("labels must be a bijection of 1..D");
            used[l] = 1;
            relabeled[l - 1] = std::move(blocks[i]);
        }
        blocks = std::move(relabeled);
    }

    try {
        return Square::from_partition(group, std::move(blocks));
    } catch (const invalid_partition_error& e) {
        throw parse_error(std::string("invalid partition: ") + e.what());
    }
}

inline Square square_from_document(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON");
    return square_from_json(j);
}

} // namespace ssq
