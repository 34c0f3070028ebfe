#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qschub/schubert.hpp"

namespace qs {

// theta_d: the coefficientwise maximal positive root alpha (inside `roots` when
// given) with <alpha^vee, varpi> <= d. Throws Certificate if the maximum is not
// unique, NotARoot if nothing satisfies the bound.
Vec theta_d(const RootSystem& rs, const Vec& varpi, Int d);
Vec theta_d(const RootSystem& rs, const Vec& varpi, Int d, const std::vector<Vec>& positive);

struct CascadeStep {
    Vec theta;
    Int d = 0;
};

struct Cascade {
    std::vector<CascadeStep> steps;
    std::optional<Int> budget;  // empty = unbounded
    Int total = 0;              // sum of the d_i; dmax_alg for the unbounded run
    Vec image;                  // w_d(varpi), fundamental coordinates
    bool orthogonal = true;
    bool monotone = true;
};

// Unbounded when budget is empty. `node` is the marked simple root.
Cascade cascade(const RootSystem& rs, int node, std::optional<Int> budget = std::nullopt);
// Stabilization of the unbounded run: budgets total and total+1 give the same steps.
bool cascade_stable(const RootSystem& rs, int node);
Int dmax_alg(const RootSystem& rs, int node);

// Length of the minimal representative of the coset of the element sending
// varpi to mu: #{beta > 0 : <mu, beta^vee> < 0}.
Int parabolic_length(const RootSystem& rs, const Vec& mu);
// s_{theta_1} ... s_{theta_k} applied to varpi
Vec apply_reflections(const RootSystem& rs, const std::vector<Vec>& roots, const Vec& lambda);
bool full_schubert_check(const RootSystem& rs, int node, const std::vector<Vec>& reflections);

struct ChainSpec {
    std::vector<Vec> roots;
    std::vector<Int> degrees;
    Vec endpoint;  // fundamental coordinates
};

std::vector<ChainSpec> enumerate_chains(const RootSystem& rs, const Vec& varpi, const std::vector<Int>& degrees,
                                        const std::optional<Vec>& target = std::nullopt);
// Chains over every composition of `total` into positive parts.
std::vector<ChainSpec> enumerate_chains_total(const RootSystem& rs, const Vec& varpi, Int total,
                                              const std::optional<Vec>& target = std::nullopt);

struct DimIdentity {
    Int length_wd = 0;
    Int predicted = 0;  // c1 d - l_P(w_d) - delta
    bool conjectural = true;
    bool inconsistent = false;
};
DimIdentity dim_identity(const RootSystem& rs, int node, Int d, Int delta_d3);

struct CensusRow {
    std::string type;  // "E7"
    int node = 0;      // 1-based
    Int dim = 0;
    Int c1 = 0;
    Cascade run;
    bool stable = false;
    bool full_schubert = false;
};
std::vector<CensusRow> curves_census(int max_rank = 8);
std::string census_json(const std::vector<CensusRow>& rows);
std::string census_csv(const std::vector<CensusRow>& rows);

// All finite types of rank <= max_rank as (series, rank).
std::vector<std::pair<char, int>> finite_types(int max_rank);

}  // namespace qs
