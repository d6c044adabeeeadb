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

#include <cmath>
#include <string>

#include <Eigen/LU>

#include "gfwigner/apps.hpp"
#include "gfwigner/error.hpp"

namespace gfw {

QuantumNet meanking_net(const PhaseSpace &space) {
    if (space.n() != 2) throw Error(ErrorCode::DimensionMismatch, "the mean king net needs n = 2");
    return QuantumNet::covariant(space, 0, 0, 0b10);
}

KingLines king_lines(const PhaseSpace &space) {
    const Bits w2 = space.field().omega_pow(2);
    return {space.make_line(1, 0, w2), space.make_line(1, 0, 0), space.make_line(0, 1, w2),
            space.make_line(0, 1, 0),  space.make_line(1, 1, w2), space.make_line(1, 1, 0)};
}

KingSolution mean_king_solve() {
    const PhaseSpace space{Field(2)};
    const QuantumNet net = meanking_net(space);
    const KingLines lines = king_lines(space);
    Matrix constraints(3, 4);
    constraints.row(0) = line_state(net, lines.v1).adjoint();
    constraints.row(1) = line_state(net, lines.h1).adjoint();
    constraints.row(2) = line_state(net, lines.d1).adjoint();
    Eigen::FullPivLU<Matrix> lu(constraints);
    lu.setThreshold(1e-10);
    if (lu.rank() != 3) throw Error(ErrorCode::DegenerateConstraints, "the three line states are linearly dependent");
    Vector phi = lu.kernel().col(0);
    phi.normalize();
    fix_global_phase(phi);
    const std::array<Vector, 4> basis{phi, PauliTranslation::parse("ZZ").apply(phi),
                                      PauliTranslation::canonical(2, 0b11, 0b11).apply(phi),
                                      PauliTranslation::parse("XX").apply(phi)};
    return {net, lines, basis, wigner_of_state(phi, net)};
}

KingParameters king_parameters(const WignerGrid &grid, const PhaseSpace &space) {
    const std::optional<WignerGrid> exact = rationalize(grid);
    if (!exact) throw Error(ErrorCode::InvalidArgument, "grid values are not multiples of 1/N^2");
    const std::vector<Bits> ax = space.field().axis_elements();
    KingParameters out;
    out.symmetric = true;
    int k = 0;
    for (int i = 0; i < 4; ++i) {
        out.diagonal[i] = exact->exact_at(ax[i], ax[i]);
        for (int j = i + 1; j < 4; ++j) {
            out.off_diagonal[k++] = exact->exact_at(ax[i], ax[j]);
            out.symmetric = out.symmetric && exact->numerator(ax[i], ax[j]) == exact->numerator(ax[j], ax[i]);
        }
    }
    return out;
}

KingReport mean_king_simulate(const std::array<Vector, 4> &basis) {
    Vector bell = Vector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    const std::array<char, 3> observables{'X', 'Y', 'Z'};
    KingReport report;
    double success = 0;
    for (char obs : observables) {
        const PauliTranslation o = PauliTranslation::parse(std::string(1, obs) + "I");
        std::array<double, 2> weight{};
        std::array<std::array<double, 4>, 2> prob{};
        for (int s = 0; s < 2; ++s) {
            const double sign = s == 0 ? 1.0 : -1.0;
            Vector post = 0.5 * (bell + sign * o.apply(bell));
            weight[s] = post.squaredNorm();
            if (weight[s] > 1e-15) post /= std::sqrt(weight[s]);
            for (int i = 0; i < 4; ++i) prob[s][i] = std::norm(basis[i].dot(post));
        }
        for (int i = 0; i < 4; ++i) {
            const bool plus = weight[0] * prob[0][i] > 1e-12;
            const bool minus = weight[1] * prob[1][i] > 1e-12;
            if (plus && minus)
                throw Error(ErrorCode::AmbiguousInference, "result " + std::to_string(i + 1) + " after " + obs +
                                                               " is consistent with both king outcomes");
            const int inferred = plus ? 1 : (minus ? -1 : 0);
            report.table.push_back({obs, i + 1, inferred});
            if (inferred != 0) success += weight[inferred == 1 ? 0 : 1] * prob[inferred == 1 ? 0 : 1][i];
        }
    }
    report.success_probability = success / static_cast<double>(observables.size());
    return report;
}

}  // namespace gfw
