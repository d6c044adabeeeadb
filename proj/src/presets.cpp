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

#include "gfwigner/presets.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "gfwigner/apps.hpp"
#include "gfwigner/error.hpp"

#ifndef GFW_PRESET_DIR
#define GFW_PRESET_DIR "presets"
#endif

namespace gfw {

using nlohmann::json;

SignMask parse_sign_string(const std::string &text, int n) {
    if (static_cast<int>(text.size()) != n)
        throw Error(ErrorCode::ParseError, "sign string '" + text + "' must have " + std::to_string(n) + " characters");
    SignMask mask = 0;
    for (int k = 0; k < n; ++k) {
        if (text[k] == '-') mask |= SignMask{1} << k;
        else if (text[k] != '+') throw Error(ErrorCode::ParseError, "sign string '" + text + "' may only contain + and -");
    }
    return mask;
}

std::string sign_string(SignMask mask, int n) {
    std::string s(n, '+');
    for (int k = 0; k < n; ++k)
        if ((mask >> k) & 1u) s[k] = '-';
    return s;
}

std::string preset_directory() {
    if (const char *env = std::getenv("GFWIGNER_PRESET_DIR"); env && *env) return env;
    return GFW_PRESET_DIR;
}

json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

std::vector<std::string> net_preset_names() { return {"default", "covariant", "qec", "meanking"}; }

namespace {

std::string require_string(const json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_string()) throw Error(ErrorCode::ParseError, std::string("missing string field '") + key + "'");
    return j[key].get<std::string>();
}

Complex parse_complex(const json &j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
    throw Error(ErrorCode::ParseError, "complex numbers are written as a number or [re, im]");
}

StateSpec stabilizer_spec(std::string name, StabilizerGroup group) {
    StateSpec s{std::move(name), std::move(group), {}};
    if (s.stabilizer->n() <= kMaxDenseQubits) s.rho = s.stabilizer->projector();
    return s;
}

void require_n(int expected, int n, const std::string &what) {
    if (expected != n)
        throw Error(ErrorCode::DimensionMismatch, what + " needs n = " + std::to_string(expected) + ", got n = " + std::to_string(n));
}

}  // namespace

QuantumNet net_from_json(const json &j, const PhaseSpace &space) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "a net is a JSON object");
    const int n = space.n();
    if (j.contains("n")) {
        if (!j["n"].is_number_integer()) throw Error(ErrorCode::ParseError, "field 'n' must be an integer");
        require_n(j["n"].get<int>(), n, "this net");
    }
    const std::string mode = require_string(j, "mode");
    if (mode == "all_plus") return QuantumNet::all_plus(space);
    if (mode == "covariant_plus") return QuantumNet::covariant_plus(space);
    if (mode == "covariant")
        return QuantumNet::covariant(space, parse_sign_string(require_string(j, "h"), n),
                                     parse_sign_string(require_string(j, "v"), n),
                                     parse_sign_string(require_string(j, "zero"), n));
    if (mode == "independent") {
        if (!j.contains("signs") || !j["signs"].is_object()) throw Error(ErrorCode::ParseError, "independent nets need a 'signs' object");
        std::vector<SignMask> signs(space.num_striations(), 0);
        for (int s = 0; s < space.num_striations(); ++s) {
            const std::string label = space.striation_label(s).to_string();
            if (!j["signs"].contains(label)) throw Error(ErrorCode::ParseError, "missing signs for striation '" + label + "'");
            signs[s] = parse_sign_string(j["signs"][label].get<std::string>(), n);
        }
        if (j["signs"].size() != signs.size()) throw Error(ErrorCode::ParseError, "unknown striation label in 'signs'");
        return QuantumNet::independent(space, std::move(signs));
    }
    throw Error(ErrorCode::ParseError, "unknown net mode '" + mode + "'");
}

json net_to_json(const QuantumNet &net, bool include_f) {
    const PhaseSpace &space = net.space();
    const int n = space.n();
    json j;
    j["n"] = n;
    j["polynomial"] = Field::polynomial_string(space.field().polynomial(), n);
    j["mode"] = "independent";
    j["derived_from"] = net.mode() == NetMode::Covariant ? "covariant" : "independent";
    j["fingerprint"] = net.fingerprint();
    json signs = json::object();
    for (int s = 0; s < space.num_striations(); ++s)
        signs[space.striation_label(s).to_string()] = sign_string(net.all_signs()[s], n);
    j["signs"] = signs;
    if (include_f && n <= 4) {
        json f = json::array();
        const Bits N = space.size();
        for (Bits x = 0; x < N; ++x)
            for (Bits z = 0; z < N; ++z) {
                if (x == 0 && z == 0) continue;
                f.push_back({{"q", bit_string(x, n)}, {"p", bit_string(z, n)}, {"f", net.f({x, z})}});
            }
        j["f"] = f;
    }
    return j;
}

QuantumNet resolve_net(const std::string &name_or_path, const PhaseSpace &space) {
    const auto names = net_preset_names();
    if (std::find(names.begin(), names.end(), name_or_path) != names.end())
        return net_from_json(load_json_file(preset_directory() + "/" + name_or_path + ".json"), space);
    if (std::filesystem::exists(name_or_path)) return net_from_json(load_json_file(name_or_path), space);
    throw Error(ErrorCode::InvalidArgument, "unknown net '" + name_or_path + "' (not a preset or a file)");
}

std::vector<std::string> state_preset_names() {
    return {"basis_<bits>",  "bell_phi_plus",  "bell_phi_minus", "bell_psi_plus", "bell_psi_minus",
            "qec_logical_0", "qec_logical_1", "meanking_phi1",  "maximally_mixed"};
}

StateSpec state_from_json(const json &j, int n) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "a state is a JSON object");
    const std::string type = require_string(j, "type");
    const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : type;
    if (type == "stabilizer") {
        if (!j.contains("generators") || !j["generators"].is_array()) throw Error(ErrorCode::ParseError, "missing 'generators'");
        std::vector<std::string> gens;
        for (const json &g : j["generators"]) gens.push_back(g.get<std::string>());
        StabilizerGroup group = StabilizerGroup::parse(gens);
        require_n(group.n(), n, "stabilizer state");
        return stabilizer_spec(name, std::move(group));
    }
    require_dense(n, "dense state");
    const Eigen::Index dim = Eigen::Index{1} << n;
    if (type == "vector") {
        if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) throw Error(ErrorCode::ParseError, "missing 'amplitudes'");
        const json &a = j["amplitudes"];
        if (static_cast<Eigen::Index>(a.size()) != dim) throw Error(ErrorCode::DimensionMismatch, "state vector needs 2^n amplitudes");
        Vector psi(dim);
        for (Eigen::Index i = 0; i < dim; ++i) psi(i) = parse_complex(a[i]);
        if (std::abs(psi.norm() - 1.0) > 1e-8) throw Error(ErrorCode::InvalidDensityMatrix, "state vector is not normalized");
        return {name, std::nullopt, psi * psi.adjoint()};
    }
    if (type == "density") {
        if (!j.contains("matrix") || !j["matrix"].is_array()) throw Error(ErrorCode::ParseError, "missing 'matrix'");
        const json &m = j["matrix"];
        if (static_cast<Eigen::Index>(m.size()) != dim) throw Error(ErrorCode::DimensionMismatch, "density matrix needs 2^n rows");
        Matrix rho(dim, dim);
        for (Eigen::Index r = 0; r < dim; ++r) {
            if (!m[r].is_array() || static_cast<Eigen::Index>(m[r].size()) != dim)
                throw Error(ErrorCode::DimensionMismatch, "density matrix needs 2^n columns");
            for (Eigen::Index c = 0; c < dim; ++c) rho(r, c) = parse_complex(m[r][c]);
        }
        validate_density_matrix(rho, n);
        return {name, std::nullopt, rho};
    }
    throw Error(ErrorCode::ParseError, "unknown state type '" + type + "'");
}

StateSpec resolve_state(const std::string &name, int n) {
    if (name.rfind("basis_", 0) == 0) {
        const std::string bits = name.substr(6);
        require_n(static_cast<int>(bits.size()), n, "basis state " + name);
        std::vector<std::string> gens;
        for (int k = 0; k < n; ++k) {
            if (bits[k] != '0' && bits[k] != '1') throw Error(ErrorCode::ParseError, "basis state bits must be 0 or 1");
            std::string g(static_cast<size_t>(n), 'I');
            g[k] = 'Z';
            gens.push_back((bits[k] == '1' ? "-" : "+") + g);
        }
        return stabilizer_spec(name, StabilizerGroup::parse(gens));
    }
    const std::array<BellState, 4> bells{BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus};
    for (BellState b : bells)
        if (name == "bell_" + bell_name(b)) {
            require_n(2, n, name);
            return stabilizer_spec(name, bell_group(b));
        }
    if (name == "qec_logical_0" || name == "qec_logical_1") {
        require_n(3, n, name);
        return stabilizer_spec(name, qec_logical_group(name.back() - '0'));
    }
    if (name == "meanking_phi1") {
        require_n(2, n, name);
        const Vector phi = mean_king_solve().basis[0];
        return {name, std::nullopt, phi * phi.adjoint()};
    }
    if (name == "maximally_mixed") {
        require_dense(n, name.c_str());
        const Eigen::Index dim = Eigen::Index{1} << n;
        return {name, std::nullopt, Matrix::Identity(dim, dim) / static_cast<double>(dim)};
    }
    if (std::filesystem::exists(name)) return state_from_json(load_json_file(name), n);
    throw Error(ErrorCode::InvalidArgument, "unknown state '" + name + "' (not a preset or a file)");
}

}  // namespace gfw
