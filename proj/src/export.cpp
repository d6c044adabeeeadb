// Copyright 2026 The gfwigner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gfwigner/export.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "gfwigner/error.hpp"

namespace gfw {

using nlohmann::json;

GridFormat parse_grid_format(const std::string &text) {
    if (text == "csv") return GridFormat::Csv;
    if (text == "json") return GridFormat::Json;
    if (text == "ascii") return GridFormat::Ascii;
    throw Error(ErrorCode::ParseError, "unknown format '" + text + "' (csv, json, ascii)");
}

std::vector<std::string> axis_labels(const Field &field) {
    std::vector<std::string> out{"0"};
    for (Bits j = 0; j + 1 < field.size(); ++j) out.push_back(j == 0 ? "1" : j == 1 ? "w" : "w^" + std::to_string(j));
    return out;
}

std::string format_value(const WignerGrid &grid, Bits q, Bits p) {
    if (grid.is_exact()) return grid.exact_at(q, p).to_string();
    double v = grid.at(q, p);
    if (std::abs(v) < 5e-16) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string export_csv(const WignerGrid &grid, const PhaseSpace &space) {
    const std::vector<Bits> ax = space.field().axis_elements();
    std::ostringstream os;
    for (size_t r = ax.size(); r-- > 0;) {
        for (size_t c = 0; c < ax.size(); ++c) os << (c ? "," : "") << format_value(grid, ax[c], ax[r]);
        os << "\n";
    }
    return os.str();
}

json export_json(const WignerGrid &grid, const QuantumNet &net) {
    const PhaseSpace &space = net.space();
    const std::vector<Bits> ax = space.field().axis_elements();
    json j;
    j["n"] = grid.n();
    j["polynomial"] = Field::format_polynomial(space.field().polynomial(), space.n());
    j["net"] = net.fingerprint();
    j["provenance"] = provenance_name(grid.provenance());
    j["axis"] = axis_labels(space.field());
    json rows = json::array();
    for (size_t r = ax.size(); r-- > 0;) {
        json row = json::array();
        for (size_t c = 0; c < ax.size(); ++c) {
            if (grid.is_exact()) row.push_back(grid.exact_at(ax[c], ax[r]).to_string());
            else row.push_back(grid.at(ax[c], ax[r]));
        }
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

std::string export_ascii(const WignerGrid &grid, const PhaseSpace &space) {
    const std::vector<Bits> ax = space.field().axis_elements();
    const std::vector<std::string> labels = axis_labels(space.field());
    size_t width = 0;
    for (const std::string &l : labels) width = std::max(width, l.size());
    std::ostringstream os;
    for (size_t r = ax.size(); r-- > 0;) {
        os << std::string(width - labels[r].size(), ' ') << labels[r] << " |";
        for (size_t c = 0; c < ax.size(); ++c) {
            const double v = grid.at(ax[c], ax[r]);
            os << ' ' << (v > 1e-12 ? '#' : v < -1e-12 ? '-' : '.');
        }
        os << "\n";
    }
    os << std::string(width, ' ') << " +" << std::string(2 * ax.size(), '-') << "\n";
    os << std::string(width, ' ') << "   q:";
    for (const std::string &l : labels) os << ' ' << l;
    os << "\n";
    return os.str();
}

std::string export_grid(const WignerGrid &grid, const QuantumNet &net, GridFormat format) {
    switch (format) {
        case GridFormat::Csv: return export_csv(grid, net.space());
        case GridFormat::Json: return export_json(grid, net).dump(2) + "\n";
        case GridFormat::Ascii: return export_ascii(grid, net.space());
    }
    return {};
}

WignerGrid import_json(const json &j) {
    try {
        const int n = j.at("n").get<int>();
        const Field field(n, Field::parse_polynomial(j.at("polynomial").get<std::string>()));
        const std::vector<Bits> ax = field.axis_elements();
        const Bits N = field.size();
        const json &rows = j.at("rows");
        if (rows.size() != N) throw Error(ErrorCode::DimensionMismatch, "grid JSON needs N rows");
        const bool exact = j.at("provenance").get<std::string>() == provenance_name(Provenance::StabilizerExact);
        const long long den = static_cast<long long>(N) * N;
        std::vector<double> values(static_cast<size_t>(N) * N);
        std::vector<long long> num(values.size());
        for (Bits r = 0; r < N; ++r) {
            const json &row = rows[N - 1 - r];
            if (row.size() != N) throw Error(ErrorCode::DimensionMismatch, "grid JSON needs N columns");
            for (Bits c = 0; c < N; ++c) {
                const size_t idx = static_cast<size_t>(ax[c]) * N + ax[r];
                if (exact) {
                    const Rational v = Rational::parse(row[c].get<std::string>());
                    if (den % v.den != 0) throw Error(ErrorCode::ParseError, "exact value is not a multiple of 1/N^2");
                    num[idx] = v.num * (den / v.den);
                } else {
                    values[idx] = row[c].get<double>();
                }
            }
        }
        return exact ? WignerGrid::exact(n, std::move(num)) : WignerGrid(n, std::move(values));
    } catch (const json::exception &e) {
        throw Error(ErrorCode::ParseError, std::string("grid JSON: ") + e.what());
    }
}

}  // namespace gfw
