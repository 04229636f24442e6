#include "tfvs/io.hpp"

#include <sstream>

#include <json.hpp>

namespace tfvs {

ParseError::ParseError(int line, int column, const std::string& reason)
    : Error("parse error at line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + reason),
      line_(line), column_(column) {}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) lines.push_back(current);
    return lines;
}

int parse_count(const std::string& line) {
    if (line.empty()) throw ParseError(1, 1, "expected vertex count");
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(line[i]))) {
            throw ParseError(1, static_cast<int>(i) + 1, "vertex count must be a non-negative integer");
        }
    }
    try {
        return std::stoi(line);
    } catch (const std::exception&) {
        throw ParseError(1, 1, "vertex count out of range");
    }
}

Weights parse_weight_line(const std::string& line, int n) {
    std::vector<Rational> values;
    std::vector<int> columns;
    std::size_t pos = 0;
    while (pos < line.size()) {
        std::size_t next = line.find(' ', pos);
        std::size_t end = next == std::string::npos ? line.size() : next;
        if (end == pos) throw ParseError(2, static_cast<int>(pos) + 1, "empty weight token");
        std::string token = line.substr(pos, end - pos);
        columns.push_back(static_cast<int>(pos) + 1);
        try {
            values.push_back(parse_rational(token));
        } catch (const Error& e) {
            throw ParseError(2, static_cast<int>(pos) + 1, e.what());
        }
        pos = next == std::string::npos ? line.size() : next + 1;
        if (next != std::string::npos && pos == line.size()) {
            throw ParseError(2, static_cast<int>(pos) + 1, "trailing space after weights");
        }
    }
    if (static_cast<int>(values.size()) != n) {
        throw ParseError(2, 1,
                         "expected " + std::to_string(n) + " weights, found " +
                             std::to_string(values.size()));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0) {
            throw ParseError(2, columns[i], "negative weight");
        }
    }
    return Weights(std::move(values));
}

} // namespace

ParsedTournament parse_tournament(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty document");
    int n = parse_count(lines[0]);
    if (static_cast<int>(lines.size()) < 2) {
        throw ParseError(2, 1, "missing weight line");
    }
    Weights weights = parse_weight_line(lines[1], n);

    std::vector<std::string> rows;
    for (int u = 0; u < n; ++u) {
        int line_no = 3 + u;
        if (static_cast<int>(lines.size()) < line_no) {
            throw ParseError(line_no, 1, "missing adjacency row");
        }
        const std::string& row = lines[static_cast<std::size_t>(line_no - 1)];
        if (static_cast<int>(row.size()) != n) {
            throw ParseError(line_no, static_cast<int>(row.size()) + 1,
                             "adjacency row must have exactly " + std::to_string(n) + " characters");
        }
        for (int v = 0; v < n; ++v) {
            char c = row[static_cast<std::size_t>(v)];
            if (c != '0' && c != '1' && c != '-') {
                throw ParseError(line_no, v + 1, "adjacency characters must be one of 0, 1, -");
            }
            if ((u == v) != (c == '-')) {
                throw ParseError(line_no, v + 1,
                                 u == v ? "diagonal entries must be '-'" : "'-' is only allowed on the diagonal");
            }
        }
        rows.push_back(row);
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            char uv = rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            char vu = rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
            if (uv == vu) {
                throw ParseError(3 + v, u + 1,
                                 "matrix is not antisymmetric at (" + std::to_string(u) + "," +
                                     std::to_string(v) + ")");
            }
        }
    }
    for (std::size_t extra = static_cast<std::size_t>(n) + 2; extra < lines.size(); ++extra) {
        if (!lines[extra].empty()) {
            throw ParseError(static_cast<int>(extra) + 1, 1, "unexpected trailing content");
        }
    }

    Tournament t(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == '1') {
                t.orient(u, v);
            } else {
                t.orient(v, u);
            }
        }
    }
    return ParsedTournament{std::move(t), std::move(weights)};
}

std::string write_tournament(const Tournament& t, const Weights& w) {
    if (w.size() != t.size()) throw PreconditionError("weights size mismatch");
    std::ostringstream out;
    int n = t.size();
    out << n << "\n";
    for (int v = 0; v < n; ++v) {
        if (v > 0) out << ' ';
        out << to_string(w[v]);
    }
    out << "\n";
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            out << (u == v ? '-' : (t.arc(u, v) ? '1' : '0'));
        }
        out << "\n";
    }
    return out.str();
}

ParsedTournament parse_tournament_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("json tournament: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("weights") || !doc.contains("matrix")) {
        throw PreconditionError("json tournament: need fields n, weights, matrix");
    }
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0) {
        throw PreconditionError("json tournament: n must be a non-negative integer");
    }
    std::ostringstream assembled;
    assembled << doc["n"].get<long long>() << "\n";
    bool first = true;
    for (const auto& token : doc["weights"]) {
        if (!token.is_string()) throw PreconditionError("json tournament: weights must be strings");
        if (!first) assembled << ' ';
        assembled << token.get<std::string>();
        first = false;
    }
    assembled << "\n";
    for (const auto& row : doc["matrix"]) {
        if (!row.is_string()) throw PreconditionError("json tournament: matrix rows must be strings");
        assembled << row.get<std::string>() << "\n";
    }
    try {
        return parse_tournament(assembled.str());
    } catch (const ParseError& e) {
        throw PreconditionError(std::string("json tournament: ") + e.what());
    }
}

std::string write_tournament_json(const Tournament& t, const Weights& w) {
    if (w.size() != t.size()) throw PreconditionError("weights size mismatch");
    nlohmann::json doc;
    doc["n"] = t.size();
    doc["weights"] = nlohmann::json::array();
    for (int v = 0; v < t.size(); ++v) doc["weights"].push_back(to_string(w[v]));
    doc["matrix"] = nlohmann::json::array();
    for (int u = 0; u < t.size(); ++u) {
        std::string row;
        for (int v = 0; v < t.size(); ++v) {
            row.push_back(u == v ? '-' : (t.arc(u, v) ? '1' : '0'));
        }
        doc["matrix"].push_back(row);
    }
    return doc.dump(2) + "\n";
}

namespace {

std::string join_ids(const VertexSet& s, char sep) {
    std::string out;
    bool first = true;
    for (int v : s) {
        if (!first) out.push_back(sep);
        out += std::to_string(v);
        first = false;
    }
    return out;
}

} // namespace

ResultDocument ResultDocument::from(const std::string& algorithm, const Tournament& t,
                                    const Weights& w, const FvsResult& result) {
    ResultDocument doc;
    doc.algorithm = algorithm;
    doc.n = t.size();
    doc.fvs = result.fvs;
    doc.weight = result.weight;
    doc.stage_tags = result.stage_tags;
    doc.trace = result.trace;
    if (doc.weight != w.sum(doc.fvs)) {
        throw InvariantViolation("result document: weight does not match the vertex sum");
    }
    return doc;
}

std::string ResultDocument::to_text() const {
    std::ostringstream out;
    out << "algorithm: " << algorithm << "\n";
    out << "n: " << n << "\n";
    out << "fvs: " << join_ids(fvs, ' ') << "\n";
    out << "weight: " << to_string(weight) << "\n";
    out << "verified: " << (verified ? "true" : "false") << "\n";
    if (!stage_tags.empty()) {
        out << "stage-tags:";
        for (const auto& [v, tag] : stage_tags) {
            out << ' ' << v << ':' << stage_tag_name(tag);
        }
        out << "\n";
    }
    if (stall_restarts >= 0) {
        out << "stall-restarts: " << stall_restarts << "\n";
    }
    if (has_trace) {
        out << "lp-initial: " << to_string(trace.initial_lp_value) << "\n";
        int k = 1;
        for (const RoundingIteration& iter : trace.iterations) {
            out << "lp-iteration: " << k++ << " rounded=" << join_ids(iter.rounded, ',')
                << " weight=" << to_string(iter.rounded_weight)
                << " after=" << to_string(iter.lp_value_after) << "\n";
        }
        if (!trace.final_x.empty()) {
            out << "lp-final-x:";
            for (const auto& [v, x] : trace.final_x) {
                out << ' ' << v << ':' << to_string(x);
            }
            out << "\n";
        }
    }
    if (oracle_optimum) {
        out << "oracle-optimum: " << to_string(*oracle_optimum) << "\n";
    }
    if (ratio) {
        out << "ratio: " << to_string(*ratio) << "\n";
    }
    return out.str();
}

std::string ResultDocument::to_json() const {
    nlohmann::json doc;
    doc["algorithm"] = algorithm;
    doc["n"] = n;
    doc["fvs"] = fvs.ids();
    doc["weight"] = to_string(weight);
    doc["verified"] = verified;
    nlohmann::json tags = nlohmann::json::object();
    for (const auto& [v, tag] : stage_tags) {
        tags[std::to_string(v)] = stage_tag_name(tag);
    }
    doc["stage_tags"] = tags;
    if (stall_restarts >= 0) doc["stall_restarts"] = stall_restarts;
    if (has_trace) {
        nlohmann::json trace_doc;
        trace_doc["initial_lp_value"] = to_string(trace.initial_lp_value);
        trace_doc["iterations"] = nlohmann::json::array();
        for (const RoundingIteration& iter : trace.iterations) {
            nlohmann::json entry;
            entry["rounded"] = iter.rounded.ids();
            entry["weight"] = to_string(iter.rounded_weight);
            entry["lp_value_after"] = to_string(iter.lp_value_after);
            trace_doc["iterations"].push_back(entry);
        }
        nlohmann::json final_x = nlohmann::json::object();
        for (const auto& [v, x] : trace.final_x) {
            final_x[std::to_string(v)] = to_string(x);
        }
        trace_doc["final_x"] = final_x;
        doc["trace"] = trace_doc;
    }
    if (oracle_optimum) doc["oracle_optimum"] = to_string(*oracle_optimum);
    if (ratio) doc["ratio"] = to_string(*ratio);
    return doc.dump(2) + "\n";
}

} // namespace tfvs
