#include "nervepool/io.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "nervepool/errors.hpp"
#include "nervepool/homology.hpp"

namespace nervepool {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

double parse_weight(const std::string& token, std::size_t line_no) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &consumed);
    } catch (const std::exception&) {
        throw ParseError(line_no, "invalid weight '" + token + "'");
    }
    if (consumed != token.size()) {
        throw ParseError(line_no, "invalid weight '" + token + "'");
    }
    return value;
}

std::string quoted(const std::string& id) {
    std::string out = "\"";
    for (char c : id) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

nlohmann::ordered_json matrix_json(const SparseMatrix& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const Triplet& t : m.entries()) {
        entries.push_back({t.row, t.col, t.value});
    }
    j["entries"] = std::move(entries);
    return j;
}

}  // namespace

SimplicialComplex parse_complex(const std::string& text) {
    std::vector<std::vector<VertexId>> maximal;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = trim(line);
        if (content.empty() || content[0] == '#') {
            continue;
        }
        std::vector<VertexId> verts;
        for (const std::string& token : split(content, ',')) {
            const std::string vertex = trim(token);
            if (!valid_token(vertex)) {
                throw ParseError(line_no, "invalid vertex token '" + vertex + "'");
            }
            verts.push_back(vertex);
        }
        try {
            Simplex check(verts);
        } catch (const MalformedInputError& e) {
            throw ParseError(line_no, e.what());
        }
        maximal.push_back(std::move(verts));
    }
    if (maximal.empty()) {
        throw MalformedInputError("input contains no simplices");
    }
    return SimplicialComplex::from_maximal_simplices(maximal);
}

std::string serialize_complex(const SimplicialComplex& k) {
    std::ostringstream out;
    for (int p = 0; p <= k.dim(); ++p) {
        // A simplex is maximal when it is nobody's face.
        std::vector<bool> is_face(static_cast<std::size_t>(k.count(p)), false);
        if (p < k.dim()) {
            for (const Simplex& s : k.simplices(p + 1)) {
                for (int i = 0; i <= s.dim(); ++i) {
                    is_face[static_cast<std::size_t>(*k.index_of(s.face_without(i)))] = true;
                }
            }
        }
        for (int i = 0; i < k.count(p); ++i) {
            if (is_face[static_cast<std::size_t>(i)]) {
                continue;
            }
            const auto& verts = k.simplices(p)[static_cast<std::size_t>(i)].vertices();
            for (std::size_t v = 0; v < verts.size(); ++v) {
                if (v > 0) {
                    out << ',';
                }
                out << verts[v];
            }
            out << '\n';
        }
    }
    return out.str();
}

VertexAssignment parse_partition(const std::string& text, const SimplicialComplex& k) {
    std::vector<VertexAssignment::Membership> records;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    const std::vector<VertexId> vertices = k.vertex_ids();
    const std::set<VertexId> known(vertices.begin(), vertices.end());
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = trim(line);
        if (content.empty() || content[0] == '#') {
            continue;
        }
        const std::vector<std::string> fields = split(content, ',');
        if (fields.size() < 2 || fields.size() > 3) {
            throw ParseError(line_no, "expected vertex,cluster[,weight]");
        }
        VertexAssignment::Membership record;
        record.vertex = trim(fields[0]);
        record.cluster = trim(fields[1]);
        if (!valid_token(record.vertex)) {
            throw ParseError(line_no, "invalid vertex token '" + record.vertex + "'");
        }
        if (!valid_token(record.cluster)) {
            throw ParseError(line_no, "invalid cluster token '" + record.cluster + "'");
        }
        if (!known.contains(record.vertex)) {
            throw NotFoundError("line " + std::to_string(line_no) + ": unknown vertex '" +
                                record.vertex + "'");
        }
        record.weight = fields.size() == 3 ? parse_weight(trim(fields[2]), line_no) : 1.0;
        if (record.weight <= 0.0) {
            throw ParseError(line_no, "weight must be positive");
        }
        records.push_back(std::move(record));
    }
    return VertexAssignment::from_memberships(k, records);
}

FeatureMatrix parse_features(const std::string& text, const SimplicialComplex& k) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    int dim = -1;
    int width = -1;
    std::map<int, std::vector<double>> rows;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = trim(line);
        if (content.empty() || content[0] == '#') {
            continue;
        }
        const std::vector<std::string> fields = split(content, ',');
        std::vector<VertexId> verts;
        for (const std::string& part : split(trim(fields[0]), '-')) {
            verts.push_back(part);
        }
        std::optional<Simplex> parsed;
        try {
            parsed.emplace(verts);
        } catch (const MalformedInputError& e) {
            throw ParseError(line_no, e.what());
        }
        const Simplex& s = *parsed;
        if (dim < 0) {
            dim = s.dim();
            width = static_cast<int>(fields.size()) - 1;
        } else if (s.dim() != dim) {
            throw ParseError(line_no, "mixed simplex dimensions in one feature file");
        } else if (static_cast<int>(fields.size()) - 1 != width) {
            throw ParseError(line_no, "inconsistent feature width");
        }
        const auto index = k.index_of(s);
        if (!index) {
            throw NotFoundError("line " + std::to_string(line_no) + ": unknown simplex '" +
                                trim(fields[0]) + "'");
        }
        if (rows.contains(*index)) {
            throw ParseError(line_no, "duplicate feature row");
        }
        std::vector<double> values;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            values.push_back(parse_weight(trim(fields[i]), line_no));
        }
        rows[*index] = std::move(values);
    }
    if (dim < 0) {
        throw MalformedInputError("feature file contains no rows");
    }
    if (static_cast<int>(rows.size()) != k.count(dim)) {
        throw MalformedInputError("feature file must cover every simplex of dimension " +
                                  std::to_string(dim));
    }
    FeatureMatrix f;
    f.p = dim;
    f.values = DenseMatrix(k.count(dim), width);
    for (const auto& [row, values] : rows) {
        for (int c = 0; c < width; ++c) {
            f.values.at(row, c) = values[static_cast<std::size_t>(c)];
        }
    }
    return f;
}

std::string export_dot(const SimplicialComplex& k) {
    std::ostringstream out;
    out << "graph complex {\n";
    for (const VertexId& v : k.vertex_ids()) {
        out << "  " << quoted(v) << ";\n";
    }
    if (k.dim() >= 1) {
        for (const Simplex& e : k.simplices(1)) {
            out << "  " << quoted(e.vertices()[0]) << " -- " << quoted(e.vertices()[1]) << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string export_dot(const SimplicialComplex& k, const VertexAssignment& clusters) {
    if (!clusters.hard) {
        return export_dot(k);
    }
    std::map<VertexId, int> cluster_of;
    for (const Triplet& t : clusters.weights.entries()) {
        if (t.value > 0.0) {
            cluster_of[clusters.vertex_ids[static_cast<std::size_t>(t.row)]] = t.col;
        }
    }
    std::ostringstream out;
    out << "graph complex {\n  node [style=filled, colorscheme=set312];\n";
    for (const VertexId& v : k.vertex_ids()) {
        out << "  " << quoted(v) << " [fillcolor=" << (cluster_of.at(v) % 12) + 1 << "];\n";
    }
    if (k.dim() >= 1) {
        for (const Simplex& e : k.simplices(1)) {
            out << "  " << quoted(e.vertices()[0]) << " -- " << quoted(e.vertices()[1]) << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string pooled_output_json(const SimplicialComplex& input, const PooledResult& result,
                               bool include_normalized_adjacency) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json in;
    nlohmann::ordered_json in_counts = nlohmann::ordered_json::array();
    for (int p = 0; p <= input.dim(); ++p) {
        in_counts.push_back(input.count(p));
    }
    in["counts"] = std::move(in_counts);
    in["betti"] = betti(input);
    j["input"] = std::move(in);

    nlohmann::ordered_json pooled;
    pooled["dim"] = result.output_dim();
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    nlohmann::ordered_json counts = nlohmann::ordered_json::array();
    for (const auto& level : result.labels) {
        nlohmann::ordered_json level_json = nlohmann::ordered_json::array();
        for (const ClusterTuple& label : level) {
            level_json.push_back(label);
        }
        counts.push_back(level.size());
        labels.push_back(std::move(level_json));
    }
    pooled["counts"] = std::move(counts);
    pooled["labels"] = std::move(labels);
    nlohmann::ordered_json boundaries = nlohmann::ordered_json::array();
    for (std::size_t p = 1; p < result.boundaries.size(); ++p) {
        nlohmann::ordered_json entry = matrix_json(result.boundaries[p]);
        entry["p"] = p;
        boundaries.push_back(std::move(entry));
    }
    pooled["boundaries"] = std::move(boundaries);
    nlohmann::ordered_json adjacency = nlohmann::ordered_json::array();
    for (std::size_t p = 0; p < result.adjacency_raw.size(); ++p) {
        nlohmann::ordered_json entry = matrix_json(result.adjacency_raw[p]);
        entry["p"] = p;
        adjacency.push_back(std::move(entry));
    }
    pooled["adjacency"] = std::move(adjacency);
    if (include_normalized_adjacency) {
        nlohmann::ordered_json normalized = nlohmann::ordered_json::array();
        for (std::size_t p = 0; p < result.adjacency_normalized.size(); ++p) {
            nlohmann::ordered_json entry = matrix_json(result.adjacency_normalized[p]);
            entry["p"] = p;
            normalized.push_back(std::move(entry));
        }
        pooled["adjacency_normalized"] = std::move(normalized);
    }
    pooled["betti"] = betti(result.label_complex());
    if (!result.features.empty()) {
        nlohmann::ordered_json features = nlohmann::ordered_json::array();
        for (const FeatureMatrix& f : result.features) {
            nlohmann::ordered_json entry;
            entry["p"] = f.p;
            entry["rows"] = f.values.rows;
            entry["cols"] = f.values.cols;
            nlohmann::ordered_json values = nlohmann::ordered_json::array();
            for (int r = 0; r < f.values.rows; ++r) {
                nlohmann::ordered_json row = nlohmann::ordered_json::array();
                for (int c = 0; c < f.values.cols; ++c) {
                    row.push_back(f.values.at(r, c));
                }
                values.push_back(std::move(row));
            }
            entry["values"] = std::move(values);
            features.push_back(std::move(entry));
        }
        pooled["features"] = std::move(features);
    }
    j["pooled"] = std::move(pooled);

    nlohmann::ordered_json assignment;
    assignment["normalized"] = result.assignment.normalized;
    assignment["clusters"] = result.assignment.cluster_ids;
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (int q = 0; q <= result.assignment.input_dim; ++q) {
        const auto& row_blocks = result.assignment.blocks[static_cast<std::size_t>(q)];
        for (int p = 0; p < static_cast<int>(row_blocks.size()); ++p) {
            nlohmann::ordered_json entry = matrix_json(row_blocks[static_cast<std::size_t>(p)]);
            entry["q"] = q;
            entry["p"] = p;
            blocks.push_back(std::move(entry));
        }
    }
    assignment["blocks"] = std::move(blocks);
    j["assignment"] = std::move(assignment);
    return j.dump(2) + "\n";
}

}  // namespace nervepool
