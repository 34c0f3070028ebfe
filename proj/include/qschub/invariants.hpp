#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qschub/lie.hpp"

namespace qs {

// dim and index of G/P for an arbitrary set of marked nodes. The index is
// measured in units of the polarization: for lambda = sum m_i varpi_i the
// entry for node i is <sum of radical roots, alpha_i^vee> / m_i.
struct ParabolicInvariants {
    std::vector<int> nodes;  // 0-based
    Vec multiplicity;        // m_i
    int dim = 0;
    std::vector<mpq_class> c1;
};
ParabolicInvariants parabolic_invariants(const RootSystem& rs, const Vec& lambda);

struct TableCheck {
    std::string type;  // "B5"
    std::string kind;  // adjoint / coadjoint
    Vec printed_weight, weight;
    int printed_dim = 0;
    std::vector<mpq_class> printed_c1;
    ParabolicInvariants computed;
    bool weight_ok = false, dim_ok = false, c1_ok = false;
    bool dim_2c1 = true;  // dim = 2 c1 - 1, adjoint rows only
    bool ok() const { return weight_ok && dim_ok && c1_ok && dim_2c1; }
};

std::string default_table_path();
// Every row of the shipped table, expanded over its rank range.
std::vector<TableCheck> invariants_table(const std::string& path = default_table_path());
std::string table_json(const std::vector<TableCheck>& rows);
std::string table_csv(const std::vector<TableCheck>& rows);

}  // namespace qs
