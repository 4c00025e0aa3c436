#pragma once

#include "qwmix/graphs.hpp"
#include "qwmix/walk.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qwmix {

enum class ObstructionCode {
    NotDiv4,
    NotSumTwoSquares,
    NonintegralSpectrumBipartiteRegular,
    PrimeCycleGe5,
    EvenCycleGt4,
    SrgTheoremCase,
};

const char* to_string(ObstructionCode code);

struct Obstruction {
    ObstructionCode code;
    std::string detail;
    std::string paper_case;
};

/// Largest |Im U_jk| over same-part pairs and |Re U_jk| over cross-part pairs.
double block_structure_residual(const Graph& g, double t);

bool divisible_by_four(long long n);

/// a >= b >= 0 with a^2 + b^2 = n, smallest b first.
std::optional<std::pair<long long, long long>> sum_of_two_squares(long long n);

/// H = sqrt(n) D U D with D = diag(1 on the first part, i on the second), rounded to
/// +-1 and checked to satisfy H H^T = n I exactly.
Eigen::MatrixXi dephase_to_real_hadamard(const TransitionMatrix& u, const Bipartition& parts);

/// Every obstruction to uniform mixing that applies to g. Empty means none is known.
std::vector<Obstruction> rule_out_mixing(const Graph& g);

/// mixing_scan with the rule-out reasons of g attached.
MixingReport classify_mixing(const Graph& g, const TimeGrid& grid, const ScanOptions& opts = {});

} // namespace qwmix
