#pragma once

// Finite groups given by multiplication tables.

#include <string>
#include <vector>

#include "proetale/errors.hpp"

namespace proetale {

struct Group {
    int order = 1;
    std::vector<std::vector<int>> mul;  // mul[g][h] = g * h
    int identity = 0;
    std::vector<int> inverse;

    int op(int g, int h) const { return mul[g][h]; }
    int inv(int g) const { return inverse[g]; }
};

// Validates a raw table (parse errors carry the offending row/column) and
// fills in identity and inverses.
Group group_from_table(const std::vector<std::vector<int>>& mul);

Group cyclic_group(int n);
Group trivial_group();
Group direct_product(const Group& a, const Group& b);
Group symmetric_3();
Group klein_four();

// Quotient map Z/(m) ->> Z/(n) for n | m, as element assignment.
std::vector<int> cyclic_quotient(int m, int n);

bool is_homomorphism(const Group& a, const Group& b, const std::vector<int>& f);
bool is_surjective_map(const std::vector<int>& f, int target_size);

// Multiplication-table isomorphism search (small orders).
bool groups_isomorphic(const Group& a, const Group& b);

}  // namespace proetale
