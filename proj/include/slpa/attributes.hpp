#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "slpa/errors.hpp"
#include "slpa/graph.hpp"

namespace slpa {

/// Per-node categorical attributes. A missing value never matches anything.
class AttributeTable {
public:
    AttributeTable(std::vector<std::string> names, std::size_t node_count)
        : names_(std::move(names)),
          values_(node_count, std::vector<std::optional<std::string>>(names_.size())) {}

    std::size_t attribute_count() const { return names_.size(); }
    const std::vector<std::string>& attribute_names() const { return names_; }

    void set(NodeId node, std::size_t attr, std::string value) {
        values_[node][attr] = std::move(value);
    }
    const std::optional<std::string>& value(NodeId node, std::size_t attr) const {
        return values_[node][attr];
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::optional<std::string>>> values_;
};

namespace detail {
inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        // trim surrounding whitespace
        auto b = field.find_first_not_of(" \t\r");
        auto e = field.find_last_not_of(" \t\r");
        fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}
} // namespace detail

/// Attribute file: header "node,attr1,attr2,...", one row per node starting
/// with the node name. Nodes absent from the file keep missing values; an
/// empty field is a missing value.
inline AttributeTable load_attribute_table(std::istream& in, const Graph& graph) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("attribute file is empty");
    auto header = detail::split_csv_row(line);
    if (header.size() < 2) throw ParseError("attribute header needs at least one attribute");
    AttributeTable table({header.begin() + 1, header.end()}, graph.node_count());

    std::size_t row_no = 1;
    while (std::getline(in, line)) {
        ++row_no;
        if (line.empty() || line[0] == '#') continue;
        auto fields = detail::split_csv_row(line);
        if (fields.size() != header.size())
            throw ParseError("row " + std::to_string(row_no) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(fields.size()));
        if (!graph.has_name(fields[0]))
            throw ParseError("row " + std::to_string(row_no) + ": unknown node name '" +
                             fields[0] + "'");
        NodeId v = graph.id_of(fields[0]);
        for (std::size_t a = 0; a + 1 < fields.size(); ++a)
            if (!fields[a + 1].empty()) table.set(v, a, fields[a + 1]);
    }
    return table;
}

} // namespace slpa
