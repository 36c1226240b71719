#include "prefrat/matrix.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace prefrat {

using nlohmann::json;

std::string to_string(MatrixClass c) {
    switch (c) {
    case MatrixClass::Integral: return "integral";
    case MatrixClass::HalfIntegral: return "half-integral";
    default: return "general";
    }
}

PreferenceMatrix::PreferenceMatrix(int n, std::vector<Rational> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ < 1) throw InvariantError("candidate count must be at least 1");
    if (entries_.size() != static_cast<std::size_t>(n_) * n_)
        throw InvariantError("entry count does not match n x n");
    validate();
}

int PreferenceMatrix::idx(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw Error("candidate label out of range");
    return (i - 1) * n_ + (j - 1);
}

void PreferenceMatrix::validate() const {
    const Rational zero(0), one(1);
    for (int i = 1; i <= n_; ++i) {
        if (at(i, i) != zero)
            throw InvariantError("nonzero diagonal entry at candidate " +
                                 std::to_string(i));
        for (int j = i + 1; j <= n_; ++j) {
            const Rational& pij = at(i, j);
            const Rational& pji = at(j, i);
            if (pij < zero || pij > one || pji < zero || pji > one)
                throw InvariantError("entry out of [0,1] at pair (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
            if (pij + pji != one)
                throw InvariantError("p_ij + p_ji != 1 at pair (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
}

PreferenceMatrix PreferenceMatrix::parse_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad matrix JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
        throw ParseError("matrix JSON needs fields \"n\" and \"entries\"");
    if (!doc["n"].is_number_integer())
        throw ParseError("\"n\" must be an integer");
    int n = doc["n"].get<int>();
    const json& rows = doc["entries"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError("\"entries\" must be an array of n rows");
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const json& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("matrix row has wrong length");
        for (const json& cell : row) {
            if (cell.is_number_integer())
                entries.emplace_back(cell.get<std::int64_t>());
            else if (cell.is_string())
                entries.push_back(Rational::parse(cell.get<std::string>()));
            else
                throw ParseError("matrix entries must be strings or integers");
        }
    }
    return PreferenceMatrix(n, std::move(entries));
}

PreferenceMatrix PreferenceMatrix::parse_csv(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<Rational> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ','))
            row.push_back(Rational::parse(cell));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix CSV");
    int n = static_cast<int>(rows.size());
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw InvariantError("matrix CSV is not square");
        for (const auto& r : row) entries.push_back(r);
    }
    return PreferenceMatrix(n, std::move(entries));
}

std::string PreferenceMatrix::to_json() const {
    json rows = json::array();
    for (int i = 1; i <= n_; ++i) {
        json row = json::array();
        for (int j = 1; j <= n_; ++j) row.push_back(at(i, j).str());
        rows.push_back(std::move(row));
    }
    json doc;
    doc["n"] = n_;
    doc["entries"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string PreferenceMatrix::to_csv() const {
    std::ostringstream out;
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (j > 1) out << ',';
            out << at(i, j).str();
        }
        out << '\n';
    }
    return out.str();
}

MatrixClass classify(const PreferenceMatrix& m) {
    const Rational zero(0), one(1), half(1, 2);
    bool half_seen = false;
    for (int i = 1; i <= m.n(); ++i)
        for (int j = 1; j <= m.n(); ++j) {
            const Rational& p = m.at(i, j);
            if (p == half)
                half_seen = true;
            else if (p != zero && p != one)
                return MatrixClass::General;
        }
    return half_seen ? MatrixClass::HalfIntegral : MatrixClass::Integral;
}

VotingGraph voting_graph(const PreferenceMatrix& m) {
    VotingGraph g;
    g.n = m.n();
    const Rational one(1);
    for (int i = 1; i <= m.n(); ++i)
        for (int j = 1; j <= m.n(); ++j)
            if (i != j && m.at(i, j) == one) g.arcs.emplace_back(i, j);
    return g;
}

UnanimityGraph unanimity_graph(const PreferenceMatrix& m) {
    UnanimityGraph g;
    g.n = m.n();
    const Rational zero(0), one(1);
    for (int i = 1; i <= m.n(); ++i)
        for (int j = i + 1; j <= m.n(); ++j)
            if (m.at(i, j) == zero || m.at(i, j) == one) g.edges.emplace_back(i, j);
    return g;
}

bool VotingGraph::has_arc(int i, int j) const {
    return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(i, j));
}

bool VotingGraph::is_acyclic() const {
    // Kahn's algorithm on the arc set.
    std::vector<int> indeg(n + 1, 0);
    std::vector<std::vector<int>> out(n + 1);
    for (auto [i, j] : arcs) {
        ++indeg[j];
        out[i].push_back(j);
    }
    std::vector<int> queue;
    for (int v = 1; v <= n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (int w : out[v])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return seen == n;
}

std::string VotingGraph::to_dot() const {
    std::ostringstream out;
    out << "digraph voting {\n";
    for (int v = 1; v <= n; ++v) out << "  " << v << ";\n";
    for (auto [i, j] : arcs) out << "  " << i << " -> " << j << ";\n";
    out << "}\n";
    return out.str();
}

bool UnanimityGraph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::string UnanimityGraph::to_dot() const {
    std::ostringstream out;
    out << "graph unanimity {\n";
    for (int v = 1; v <= n; ++v) out << "  " << v << ";\n";
    for (auto [i, j] : edges) out << "  " << i << " -- " << j << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace prefrat
