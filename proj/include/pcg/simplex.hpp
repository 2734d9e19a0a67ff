#pragma once

#include "pcg/rational.hpp"

#include <vector>

namespace pcg {

// maximize c.x subject to A x <= b, x >= 0, in exact rational arithmetic.
struct LinearProgram {
    int num_vars = 0;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<Rational> objective;

    explicit LinearProgram(int num_vars);
    void add_le(std::vector<Rational> coefficients, Rational bound);
    void set_objective(std::vector<Rational> c);
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rational objective_value;
    std::vector<Rational> values;  // one per variable, basic solution
};

// Two-phase primal simplex with Bland's rule throughout; terminates on every
// input and never rounds.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace pcg
