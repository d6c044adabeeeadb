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

#include "gfwigner/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "gfwigner/apps.hpp"
#include "gfwigner/error.hpp"
#include "gfwigner/export.hpp"
#include "gfwigner/presets.hpp"
#include "gfwigner/verify.hpp"

namespace gfw {

using nlohmann::json;

Field make_field(int n, const std::optional<std::string> &poly) {
    if (poly) return Field(n, Field::parse_polynomial(*poly));
    if (const char *path = std::getenv("GFWIGNER_POLY_TABLE"); path && *path) {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::ParseError, std::string("cannot open polynomial table ") + path);
        const auto table = read_polynomial_table(in);
        if (auto it = table.find(n); it != table.end()) return Field(n, it->second);
    }
    return Field(n);
}

std::string field_table(const Field &field, bool csv) {
    const int n = field.n();
    const std::vector<Bits> canon = field.power_ordering(field.companion(), 1);
    const std::vector<Bits> dual = field.power_ordering(field.companion().transpose(), 1);
    std::ostringstream os;
    const std::string sep = csv ? "," : " ";
    if (!csv) os << "GF(2^" << n << ") pi(x)=" << Field::polynomial_string(field.polynomial(), n) << "\n";
    os << "canonical" << sep << "dual\n";
    os << bit_string(0, n) << sep << bit_string(0, n) << "\n";
    for (size_t k = 0; k < canon.size(); ++k) os << bit_string(canon[k], n) << sep << bit_string(dual[k], n) << "\n";
    return os.str();
}

namespace {

struct Options {
    int n = 2;
    std::optional<std::string> poly;
    std::string format;
    std::string output;
    std::string net;
    std::string signs;
    std::string state;
    bool covariant = false;
    bool table = false;
    bool verify = false;
};

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_json(const Vector &v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
    return out;
}

json line_json(const Line &l) { return {{"a", l.a}, {"b", l.b}, {"c", l.c}}; }

std::string pad(const std::string &s, size_t width) { return std::string(width > s.size() ? width - s.size() : 0, ' ') + s; }

void require_n(int n, int lo, int hi, const char *what) {
    if (n < lo || n > hi)
        throw Error(ErrorCode::InvalidArgument,
                    std::string(what) + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
}

void emit(const std::string &text, const Options &o, std::ostream &out) {
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.output);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.output);
    f << text;
}

int report_checks(const std::vector<Check> &checks, std::ostream &out) {
    for (const Check &c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << "\n";
    }
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check &c) { return !c.passed; });
    out << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

QuantumNet select_net(const Options &o, const PhaseSpace &space) {
    const int sources = !o.net.empty() + !o.signs.empty() + o.covariant;
    if (sources > 1) throw Error(ErrorCode::InvalidArgument, "give at most one of --net, --signs, --covariant");
    if (o.covariant) return QuantumNet::covariant_plus(space);
    if (!o.signs.empty()) return net_from_json(load_json_file(o.signs), space);
    return resolve_net(o.net.empty() ? "default" : o.net, space);
}

// --- field, rays --------------------------------------------------------------

int run_field(const Options &o, std::ostream &out) {
    require_n(o.n, 1, Field::kMaxDegree, "field");
    const Field field = make_field(o.n, o.poly);
    const bool csv = o.format == "csv";
    if (o.table) {
        emit(field_table(field, csv), o, out);
        return 0;
    }
    const std::vector<Bits> ax = field.axis_elements();
    const std::vector<std::string> labels = axis_labels(field);
    std::ostringstream os;
    const std::string sep = csv ? "," : "  ";
    if (!csv) os << "GF(2^" << o.n << ") pi(x)=" << Field::polynomial_string(field.polynomial(), o.n) << "\n";
    os << "element" << sep << "bits" << sep << "trace\n";
    for (size_t k = 0; k < ax.size(); ++k) os << labels[k] << sep << bit_string(ax[k], o.n) << sep << field.trace(ax[k]) << "\n";
    emit(os.str(), o, out);
    return 0;
}

int run_rays(const Options &o, std::ostream &out) {
    require_n(o.n, 1, 6, "rays");
    const PhaseSpace space(make_field(o.n, o.poly));
    const std::vector<Bits> ax = space.field().axis_elements();
    const std::vector<std::string> labels = axis_labels(space.field());
    size_t lw = 0;
    for (const auto &l : labels) lw = std::max(lw, l.size());
    std::ostringstream os;
    for (const Striation &st : space.all_striations()) {
        os << "striation " << st.label.to_string() << "\n";
        for (size_t r = ax.size(); r-- > 0;) {
            os << pad(labels[r], lw) << " |";
            for (size_t c = 0; c < ax.size(); ++c) {
                int which = 0;
                while (!space.contains(st.lines[which], {ax[c], ax[r]})) ++which;
                os << ' ' << (which == 0 ? '*' : '.');
            }
            os << "\n";
        }
        os << "\n";
    }
    os << "ray labels\n";
    size_t cw = 1;
    for (int s = 0; s < space.num_striations(); ++s) cw = std::max(cw, space.striation_label(s).to_string().size());
    for (size_t r = ax.size(); r-- > 0;) {
        os << pad(labels[r], lw) << " |";
        for (size_t c = 0; c < ax.size(); ++c) {
            const PhasePoint pt{ax[c], ax[r]};
            os << ' ' << pad(pt.is_origin() ? "o" : space.ray_through(pt).to_string(), cw);
        }
        os << "\n";
    }
    os << pad("", lw) << "   q:";
    for (const auto &l : labels) os << ' ' << pad(l, cw);
    os << "\n";
    emit(os.str(), o, out);
    return 0;
}

// --- mub, uomega --------------------------------------------------------------

int run_mub(const Options &o, std::ostream &out) {
    require_n(o.n, 1, kMaxDenseQubits, "mub");
    const PhaseSpace space(make_field(o.n, o.poly));
    const QuantumNet net = select_net(o, space);
    const std::vector<MubBasis> bases = mub_states(net);
    const double N = static_cast<double>(space.size());
    double cross = 0;
    double gram = 0;
    for (size_t a = 0; a < bases.size(); ++a)
        for (size_t b = a; b < bases.size(); ++b)
            for (size_t i = 0; i < bases[a].states.size(); ++i)
                for (size_t j = 0; j < bases[b].states.size(); ++j) {
                    const double v = std::norm(bases[a].states[i].dot(bases[b].states[j]));
                    if (a == b) gram = std::max(gram, std::abs(v - (i == j ? 1.0 : 0.0)));
                    else cross = std::max(cross, std::abs(v - 1.0 / N));
                }
    json j;
    j["n"] = o.n;
    j["polynomial"] = Field::format_polynomial(space.field().polynomial(), o.n);
    j["net"] = net.fingerprint();
    json arr = json::array();
    for (const MubBasis &b : bases) {
        json states = json::array();
        for (size_t k = 0; k < b.states.size(); ++k)
            states.push_back({{"line", line_json(b.lines[k])}, {"amplitudes", vector_json(b.states[k])}});
        arr.push_back({{"striation", b.label.to_string()}, {"states", states}});
    }
    j["bases"] = arr;
    j["overlaps"] = {{"max_cross_deviation", cross}, {"max_gram_deviation", gram}, {"unbiased", cross < 1e-10 && gram < 1e-10}};
    emit(j.dump(2) + "\n", o, out);
    return 0;
}

int run_uomega(const Options &o, std::ostream &out) {
    require_n(o.n, 1, Field::kMaxDegree, "uomega");
    const Field field = make_field(o.n, o.poly);
    const SqueezeCircuit u(field);
    std::ostringstream os;
    os << "pi(x)=" << Field::polynomial_string(field.polynomial(), o.n) << "\n";
    std::string gates = u.describe();
    if (!gates.empty() && gates.back() != '\n') gates += '\n';
    os << gates << "conjugation\n";
    for (int k = 0; k < o.n; ++k)
        for (const bool x : {true, false}) {
            const Bits bit = Bits{1} << k;
            const PauliTranslation t = PauliTranslation::canonical(o.n, x ? bit : 0, x ? 0 : bit);
            os << "  " << t.to_string() << " -> " << u.conjugate(t).to_string() << "\n";
        }
    emit(os.str(), o, out);
    return 0;
}

// --- wigner -------------------------------------------------------------------

int run_wigner(const Options &o, std::ostream &out) {
    require_n(o.n, 1, kMaxStabilizerGridQubits, "wigner");
    if (o.state.empty()) throw Error(ErrorCode::InvalidArgument, "--state is required");
    const PhaseSpace space(make_field(o.n, o.poly));
    const QuantumNet net = select_net(o, space);
    const StateSpec state = resolve_state(o.state, o.n);
    const WignerGrid grid = state.stabilizer ? stabilizer_wigner(*state.stabilizer, net) : wigner_of(state.rho, net);
    emit(export_grid(grid, net, parse_grid_format(o.format.empty() ? "csv" : o.format)), o, out);
    return 0;
}

// --- bell ---------------------------------------------------------------------

std::string bell_params_text(const std::optional<BellParameters> &p) {
    if (!p) return "not block constant";
    return "a=" + p->a.to_string() + " b=" + p->b.to_string() + " c=" + p->c.to_string() + " d=" + p->d.to_string();
}

int run_bell(const Options &o, std::ostream &out) {
    const GridFormat fmt = parse_grid_format(o.format.empty() ? "ascii" : o.format);
    const auto sols = bell_wigner_solutions(BellState::PhiPlus);
    const PhaseSpace space{Field(2)};
    const QuantumNet def = QuantumNet::all_plus(space);
    const WignerGrid grid = stabilizer_wigner(bell_group(BellState::PhiPlus), def);
    std::ostringstream os;
    if (fmt == GridFormat::Csv) {
        os << "net,pattern,a,b,c,d\n";
        for (const auto &s : sols) {
            os << s.net.fingerprint() << "," << bell_pattern_name(s.pattern);
            if (s.params)
                for (const Rational &r : {s.params->a, s.params->b, s.params->c, s.params->d}) os << "," << r.to_string();
            else os << ",,,,";
            os << "\n";
        }
    } else if (fmt == GridFormat::Json) {
        json j;
        j["state"] = bell_name(BellState::PhiPlus);
        j["default"] = export_json(grid, def);
        json nets = json::array();
        for (const auto &s : sols) {
            json e{{"net", s.net.fingerprint()}, {"pattern", bell_pattern_name(s.pattern)}};
            if (s.params)
                e["parameters"] = {{"a", s.params->a.to_string()}, {"b", s.params->b.to_string()},
                                   {"c", s.params->c.to_string()}, {"d", s.params->d.to_string()}};
            nets.push_back(e);
        }
        j["nets"] = nets;
        os << j.dump(2) << "\n";
    } else {
        os << bell_name(BellState::PhiPlus) << " under the default net (" << def.fingerprint() << ")\n";
        os << export_ascii(grid, space) << bell_params_text(bell_parameters(grid)) << "\n\n";
        std::map<BellPattern, int> tally;
        std::map<BellPattern, const BellNetSolution *> first;
        for (const auto &s : sols) {
            ++tally[s.pattern];
            first.try_emplace(s.pattern, &s);
        }
        os << "patterns over " << sols.size() << " nets\n";
        for (const auto &[pattern, count] : tally) {
            const BellNetSolution &s = *first[pattern];
            os << "  " << bell_pattern_name(pattern) << ": " << count << " nets, e.g. " << s.net.fingerprint() << "  "
               << bell_params_text(s.params) << "\n";
        }
        for (const auto &[pattern, s] : first) os << "\n" << bell_pattern_name(pattern) << "\n" << export_ascii(s->grid, space);
    }
    emit(os.str(), o, out);
    return o.verify ? report_checks(verify_bell(), out) : 0;
}

// --- qec ----------------------------------------------------------------------

json code_json(const CodeParameters &p) {
    json j;
    for (int k = 0; k < 8; ++k) j[std::string(1, static_cast<char>('a' + k))] = p[k].to_string();
    return j;
}

int run_qec(const Options &o, std::ostream &out) {
    const GridFormat fmt = parse_grid_format(o.format.empty() ? "ascii" : o.format);
    const PhaseSpace space{Field(3)};
    const QuantumNet net = resolve_net("qec", space);
    const WignerGrid zero = stabilizer_wigner(qec_logical_group(0), net);
    const WignerGrid one = stabilizer_wigner(qec_logical_group(1), net);
    const auto family = code_solution_family();
    const auto covariant = covariant_code_solutions();
    const auto is_covariant = [&](const CodeParameters &p) {
        return std::find(covariant.begin(), covariant.end(), p) != covariant.end();
    };
    std::ostringstream os;
    if (fmt == GridFormat::Csv) {
        os << "a,b,c,d,e,f,g,h,covariant\n";
        for (const auto &p : family) {
            for (int k = 0; k < 8; ++k) os << p[k].to_string() << ",";
            os << (is_covariant(p) ? 1 : 0) << "\n";
        }
    } else if (fmt == GridFormat::Json) {
        json j;
        j["net"] = net.fingerprint();
        j["logical_0"] = export_json(zero, net);
        j["logical_1"] = export_json(one, net);
        json fam = json::array();
        for (const auto &p : family) {
            json e = code_json(p);
            e["covariant"] = is_covariant(p);
            fam.push_back(e);
        }
        j["solutions"] = fam;
        os << j.dump(2) << "\n";
    } else {
        os << "net " << net.fingerprint() << "\n|0L>\n" << export_ascii(zero, space);
        if (const auto p = code_parameters(zero, space)) os << format_code_parameters(*p) << "\n";
        os << "\n|1L>\n" << export_ascii(one, space);
        if (const auto p = code_parameters(one, space)) os << format_code_parameters(*p) << "\n";
        os << "\n" << family.size() << " solutions, " << covariant.size() << " realized by covariant nets\n";
        for (const auto &p : family) os << "  " << (is_covariant(p) ? "* " : "  ") << format_code_parameters(p) << "\n";
    }
    emit(os.str(), o, out);
    return o.verify ? report_checks(verify_qec(), out) : 0;
}

// --- meanking -----------------------------------------------------------------

int run_meanking(const Options &o, std::ostream &out) {
    const GridFormat fmt = parse_grid_format(o.format.empty() ? "ascii" : o.format);
    const KingSolution sol = mean_king_solve();
    const PhaseSpace &space = sol.net.space();
    const KingParameters kp = king_parameters(sol.grid, space);
    const KingReport report = mean_king_simulate(sol.basis);
    const std::optional<WignerGrid> exact = rationalize(sol.grid);
    const WignerGrid &grid = exact ? *exact : sol.grid;
    std::ostringstream os;
    if (fmt == GridFormat::Csv) {
        os << export_csv(grid, space);
    } else if (fmt == GridFormat::Json) {
        json j;
        j["net"] = sol.net.fingerprint();
        json basis = json::array();
        for (const Vector &v : sol.basis) basis.push_back(vector_json(v));
        j["basis"] = basis;
        j["grid"] = export_json(grid, sol.net);
        json table = json::array();
        for (const auto &e : report.table)
            table.push_back({{"observable", std::string(1, e.observable)}, {"result", e.physicist_result}, {"king", e.king_outcome}});
        j["retrodiction"] = table;
        j["success_probability"] = report.success_probability;
        os << j.dump(2) << "\n";
    } else {
        os << "net " << sol.net.fingerprint() << "\nbasis\n";
        os << std::fixed << std::setprecision(4);
        for (size_t k = 0; k < sol.basis.size(); ++k) {
            os << "  phi" << k + 1 << " =";
            for (Eigen::Index i = 0; i < sol.basis[k].size(); ++i) {
                Complex z = sol.basis[k](i);
                if (std::abs(z.real()) < 5e-13) z.real(0.0);
                if (std::abs(z.imag()) < 5e-13) z.imag(0.0);
                os << "  " << std::showpos << z.real() << z.imag() << "i" << std::noshowpos;
            }
            os << "\n";
        }
        os.unsetf(std::ios::floatfield);
        os << "\nW(phi1)\n" << export_csv(grid, space) << export_ascii(grid, space);
        os << "diagonal";
        for (const Rational &r : kp.diagonal) os << " " << r.to_string();
        os << "\noff-diagonal";
        for (const Rational &r : kp.off_diagonal) os << " " << r.to_string();
        os << "\nmirror symmetric: " << (kp.symmetric ? "yes" : "no") << "\n\nretrodiction\n";
        for (const auto &e : report.table)
            os << "  " << e.observable << " result " << e.physicist_result << " -> king "
               << (e.king_outcome > 0 ? "+1" : e.king_outcome < 0 ? "-1" : "impossible") << "\n";
        os << "success probability " << report.success_probability << "\n";
    }
    emit(os.str(), o, out);
    return o.verify ? report_checks(verify_meanking(), out) : 0;
}

// --- verify -------------------------------------------------------------------

int run_verify(const Options &o, std::ostream &out) {
    require_n(o.n, 1, Field::kMaxDegree, "verify");
    std::vector<Check> checks = verify_invariants(o.n);
    auto append = [&](std::vector<Check> more) { checks.insert(checks.end(), more.begin(), more.end()); };
    if (o.n == 2) {
        append(verify_bell());
        append(verify_meanking());
    }
    if (o.n == 3) append(verify_qec());
    return report_checks(checks, out);
}

int exit_code_for(const Error &e) {
    switch (e.code()) {
        case ErrorCode::AmbiguousInference:
        case ErrorCode::DegenerateConstraints: return 1;
        default: return 2;
    }
}

}  // namespace

int dispatch(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Finite-field phase space and discrete Wigner functions for qubits", "gfwigner"};
    app.require_subcommand(1);
    Options o;
    int (*runner)(const Options &, std::ostream &) = nullptr;

    auto add_n = [&](CLI::App *cmd, bool required) {
        auto *opt = cmd->add_option("--n", o.n, "number of qubits");
        if (required) opt->required();
        cmd->add_option("--poly", o.poly, "primitive polynomial, coefficients low to high (e.g. 1011)");
    };
    auto add_output = [&](CLI::App *cmd) { cmd->add_option("--output,-o", o.output, "write to a file instead of stdout"); };

    auto *field = app.add_subcommand("field", "field elements or the canonical/dual orderings");
    add_n(field, true);
    field->add_flag("--table", o.table, "print the orderings generated by M and its transpose");
    field->add_option("--format", o.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    add_output(field);
    field->callback([&] { runner = run_field; });

    auto *rays = app.add_subcommand("rays", "striation grids and ray labels");
    add_n(rays, true);
    add_output(rays);
    rays->callback([&] { runner = run_rays; });

    auto *mub = app.add_subcommand("mub", "mutually unbiased bases as JSON");
    add_n(mub, true);
    mub->add_flag("--covariant", o.covariant, "use the covariant net with all signs +1");
    mub->add_option("--signs", o.signs, "net JSON file");
    mub->add_option("--net", o.net, "net preset or JSON file");
    add_output(mub);
    mub->callback([&] { runner = run_mub; });

    auto *uomega = app.add_subcommand("uomega", "gates of the squeezing unitary");
    add_n(uomega, true);
    add_output(uomega);
    uomega->callback([&] { runner = run_uomega; });

    auto *wigner = app.add_subcommand("wigner", "Wigner function of a state");
    add_n(wigner, true);
    wigner->add_option("--net", o.net, "net preset or JSON file (default: default)");
    wigner->add_option("--signs", o.signs, "net JSON file");
    wigner->add_flag("--covariant", o.covariant, "use the covariant net with all signs +1");
    wigner->add_option("--state", o.state, "state preset or JSON file")->required();
    wigner->add_option("--format", o.format, "csv, json or ascii")->check(CLI::IsMember({"csv", "json", "ascii"}));
    add_output(wigner);
    wigner->callback([&] { runner = run_wigner; });

    const std::pair<const char *, int (*)(const Options &, std::ostream &)> apps[] = {
        {"bell", run_bell}, {"qec", run_qec}, {"meanking", run_meanking}};
    const char *descriptions[] = {"Bell state grids over all nets", "three-qubit phase code", "mean king basis and retrodiction"};
    for (int k = 0; k < 3; ++k) {
        auto *cmd = app.add_subcommand(apps[k].first, descriptions[k]);
        cmd->add_option("--format", o.format, "ascii, csv or json")->check(CLI::IsMember({"csv", "json", "ascii"}));
        cmd->add_flag("--verify", o.verify, "run the invariant checks afterwards");
        add_output(cmd);
        auto *fn = apps[k].second;
        cmd->callback([&runner, fn] { runner = fn; });
    }

    auto *verify = app.add_subcommand("verify", "run the invariant suite");
    add_n(verify, true);
    verify->callback([&] { runner = run_verify; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return 2;
    }
    try {
        return runner(o, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const nlohmann::json::exception &e) {
        err << "error: invalid JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gfw
