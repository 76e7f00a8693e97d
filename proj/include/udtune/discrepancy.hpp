#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "udtune/lattice.hpp"

namespace udtune {

// Design points mapped into the open unit cube, x = (2u - 1) / (2n).
struct UnitCubeDesign {
    int n = 0;
    int s = 0;
    std::vector<double> points;  // row-major n x s

    double at(int i, int j) const {
        return points[static_cast<std::size_t>(i) * static_cast<std::size_t>(s) +
                      static_cast<std::size_t>(j)];
    }
};

struct ColumnSelection {
    std::vector<int> indices;  // strictly increasing, 0-based into the table
    double cd2 = 0.0;
    std::string method;        // "exhaustive" or "greedy"
};

UnitCubeDesign to_unit_cube(const DesignTable& table,
                            const std::vector<int>& indices);

// Centered L2 discrepancy of the design.  Accumulation order is fixed
// (row-major, ascending indices) so equal designs give bit-equal values.
double cd2(const UnitCubeDesign& design);

// Picks the s-column subset with smallest cd2.  Exhaustive over all C(m, s)
// subsets when that count fits the budget, else deterministic greedy forward
// selection.  Ties break to the lexicographically smallest index list.
ColumnSelection select_columns(const DesignTable& table, int s,
                               long long budget = 100000,
                               unsigned workers = 0);

std::string selection_to_json(const ColumnSelection& sel);

}  // namespace udtune
