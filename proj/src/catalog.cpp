/*
 * Copyright 2026 The tracecode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "tracecode/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tracecode {

const std::vector<Table1Row>& table1_rows() {
    static const std::vector<Table1Row> rows = {
        {2, 2, 1, 3, 12, false},      {2, 4, 2, 5, 160, false},
        {2, 4, 3, 9, 144, false},     {2, 6, 3, 9, 2304, true},
        {2, 6, 5, 33, 2112, true},    {3, 2, 1, 4, 36, false},
        {3, 4, 2, 10, 2430, false},   {3, 4, 3, 28, 2268, false},
        {5, 2, 1, 6, 150, false},     {5, 4, 2, 26, 81250, true},
        {5, 4, 3, 126, 78750, true},  {7, 2, 1, 8, 392, false},
        {11, 2, 1, 12, 1452, false},
    };
    return rows;
}

const std::vector<FamilySpec>& family_specs() {
    static const std::vector<FamilySpec> specs = {
        // name, q, n, t, n', r, tau_min, tau_max, golden csv
        {"len640", 2, 4, 2, 0, 4, 1, 12, "quantum_640.csv"},
        {"len320", 2, 4, 2, 2, 2, 1, 12, "quantum_320.csv"},
        {"len576", 2, 4, 3, 0, 4, 1, 10, "quantum_576.csv"},
        {"len288", 2, 4, 3, 2, 2, 1, 10, "quantum_288.csv"},
        {"len300", 5, 2, 1, 0, 2, 1, 11, "quantum_300.csv"},
        {"len130", 5, 2, 2, 1, 1, 1, 9, "quantum_130.csv"},
        {"len784", 7, 2, 1, 0, 2, 1, 23, "quantum_784.csv"},
        {"len350", 7, 2, 2, 1, 1, 1, 15, "quantum_350.csv"},
    };
    return specs;
}

const std::vector<SporadicPoly>& sporadic_polys() {
    static const std::vector<SporadicPoly> polys = {
        {"1+tr(a^5X^3)", {{5, 3}}, 120},
        {"1+tr(a^5X^5)", {{5, 5}}, 96},
        {"1+tr(aX^19+X^10)", {{1, 19}, {0, 10}}, 116},
        {"1+tr(a^3X^9+X)", {{3, 9}, {0, 1}}, 112},
        {"1+tr(a^8X^25+X^10)", {{8, 25}, {0, 10}}, 100},
        {"1+tr(a^17X^3+X^13)", {{17, 3}, {0, 13}}, 104},
    };
    return polys;
}

// ===========================================================================
// Golden CSV loading
// ===========================================================================

namespace {

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden table: " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        // A trailing comma means one empty trailing cell.
        if (!line.empty() && line.back() == ',') cells.push_back("");
        rows.push_back(std::move(cells));
    }
    if (rows.empty()) throw std::runtime_error("empty golden table: " + path);
    return rows;
}

std::uint64_t to_u64(const std::string& s, const std::string& path) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("bad integer cell '" + s + "' in " + path);
    }
}

}  // namespace

std::string resolve_data_dir(const std::string& override_dir) {
    std::string dir = override_dir;
    if (dir.empty()) {
        const char* env = std::getenv("TRACECODE_DATA_DIR");
        if (env != nullptr && *env != '\0') dir = env;
    }
    if (dir.empty()) dir = "data/golden";
    if (!std::filesystem::exists(std::filesystem::path(dir) / "table1.csv")) {
        throw std::runtime_error(
            "golden data directory not found (looked for table1.csv in '" +
            dir + "'); pass --data-dir or set TRACECODE_DATA_DIR");
    }
    return dir;
}

std::vector<Table1Row> load_table1_csv(const std::string& path) {
    const auto rows = read_csv(path);
    std::vector<Table1Row> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {  // skip header
        const auto& r = rows[i];
        if (r.size() != 5) throw std::runtime_error("bad row in " + path);
        Table1Row row;
        row.q = to_u64(r[0], path);
        row.n = static_cast<std::uint32_t>(to_u64(r[1], path));
        row.t = static_cast<std::uint32_t>(to_u64(r[2], path));
        row.b = to_u64(r[3], path);
        row.m = to_u64(r[4], path);
        out.push_back(row);
    }
    return out;
}

std::vector<GoldenQuantumRow> load_quantum_csv(const std::string& path) {
    const auto rows = read_csv(path);
    std::vector<GoldenQuantumRow> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() < 4) throw std::runtime_error("bad row in " + path);
        GoldenQuantumRow row;
        row.n = to_u64(r[0], path);
        row.k = to_u64(r[1], path);
        row.d = to_u64(r[2], path);
        row.q = to_u64(r[3], path);
        if (r.size() > 4) row.note = r[4];
        out.push_back(row);
    }
    return out;
}

std::vector<Table8Row> load_table8_csv(const std::string& path) {
    const auto rows = read_csv(path);
    std::vector<Table8Row> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() != 7) throw std::runtime_error("bad row in " + path);
        Table8Row row;
        row.row = static_cast<std::uint32_t>(to_u64(r[0], path));
        row.poly = r[1];
        row.claimed_m = to_u64(r[2], path);
        row.u = to_u64(r[3], path);
        row.n = to_u64(r[4], path);
        row.k = to_u64(r[5], path);
        row.d = to_u64(r[6], path);
        out.push_back(row);
    }
    return out;
}

}  // namespace tracecode
