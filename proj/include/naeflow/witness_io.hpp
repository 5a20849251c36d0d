#pragma once

#include <string>
#include <vector>

#include "decomposition.hpp"
#include "edge_coloring.hpp"
#include "flows.hpp"
#include "formula.hpp"
#include "graph_io.hpp"
#include "matching.hpp"

namespace naeflow {

// Witness files are small JSON objects keyed by what they hold:
//   {"A": [v, ...]}                 decomposition (the B side is the rest)
//   {"labels": [x, ...]}            edge or vertex labeling, canonical order
//   {"colors": ["red", ...]}        edge 2-coloring, canonical edge order
//   {"matching": [edge id, ...]}
//   {"deleted": [edge id, ...], "side": [0/1, ...]}
//   {"assignment": [true, ...]}

namespace detail {

template <class T>
T witness_field(const json& j, const char* key)
{
    try {
        if (!j.is_object() || !j.contains(key))
            throw format_error(std::string("witness JSON needs \"") + key + "\"");
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw format_error(std::string("witness JSON: ") + e.what());
    }
}

} // namespace detail

inline json decomposition_to_json(const Decomposition& d) { return {{"A", d.a}}; }

inline Decomposition decomposition_from_json(const json& j)
{
    return Decomposition(detail::witness_field<std::vector<int>>(j, "A"));
}

inline json labels_to_json(const std::vector<std::int64_t>& lab) { return {{"labels", lab}}; }

inline std::vector<std::int64_t> labels_from_json(const json& j)
{
    return detail::witness_field<std::vector<std::int64_t>>(j, "labels");
}

inline json coloring_to_json(const TwoEdgeColoring& c)
{
    std::vector<std::string> names;
    for (auto x : c)
        names.emplace_back(to_string(x));
    return {{"colors", names}};
}

inline TwoEdgeColoring coloring_from_json(const json& j)
{
    TwoEdgeColoring c;
    for (const auto& s : detail::witness_field<std::vector<std::string>>(j, "colors")) {
        if (s == "red")
            c.push_back(EdgeColor::red);
        else if (s == "blue")
            c.push_back(EdgeColor::blue);
        else
            throw format_error("edge color must be \"red\" or \"blue\", got \"" + s + "\"");
    }
    return c;
}

inline json matching_to_json(const Matching& m) { return {{"matching", m}}; }

inline Matching matching_from_json(const json& j) { return detail::witness_field<Matching>(j, "matching"); }

inline json assignment_to_json(const Assignment& a) { return {{"assignment", a}}; }

inline Assignment assignment_from_json(const json& j) { return detail::witness_field<Assignment>(j, "assignment"); }

} // namespace naeflow
