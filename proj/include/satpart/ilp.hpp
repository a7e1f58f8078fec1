#ifndef SATPART_ILP_HPP
#define SATPART_ILP_HPP

#include <optional>
#include <vector>

namespace satpart {

/// Small integer linear feasibility system: box-bounded integer variables
/// and rows  sum_i coeff[i]*x[i]  REL  rhs.
struct IlpVar {
    long long lo = 0;
    long long hi = 0;
};

enum class Rel { Geq, Eq };

struct IlpRow {
    std::vector<long long> coeff;  // dense, one entry per variable
    Rel rel = Rel::Geq;
    long long rhs = 0;
};

struct IlpSystem {
    std::vector<IlpVar> vars;
    std::vector<IlpRow> rows;
};

/// Exact feasibility by depth-first branching in variable index order
/// (lower value first) with interval-consistency pruning: per row the
/// reachable [min,max] of the left-hand side is intersected with the
/// relation, and variable boxes are tightened to a fixpoint before each
/// branch. Returns the lexicographically first feasible point, or nullopt.
std::optional<std::vector<long long>> solve_ilp_feasibility(const IlpSystem& sys);

}  // namespace satpart

#endif
