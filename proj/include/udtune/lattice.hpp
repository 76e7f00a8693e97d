#pragma once

#include <string>
#include <vector>

namespace udtune {

// Uniform design table built by the good-lattice-point method: one column per
// generator h coprime to n, each column a permutation of 1..n.
struct DesignTable {
    int n = 0;
    std::vector<int> generators;             // ascending, all coprime to n
    std::vector<std::vector<int>> columns;   // columns[j][i], entries in 1..n

    int m() const { return static_cast<int>(columns.size()); }
};

// All h in [1, n-1] with gcd(h, n) = 1, ascending.  Length equals Euler's
// totient of n.
std::vector<int> coprime_generators(int n);

// Column (u_1,...,u_n) with u_1 = h and u_{i+1} = u_i + h, wrapped back by n
// when it would exceed n.  Equals ((i*h - 1) mod n) + 1.
std::vector<int> glp_column(int n, int h);

// Full table: glp_column(n, h) for every coprime generator, ascending.
DesignTable build_full_table(int n);

// CSV form: header row of the generator values, then n rows of levels.
std::string table_to_csv(const DesignTable& table);

}  // namespace udtune
