#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qschub/lie.hpp"

namespace qs {

enum class Flavor { Minuscule, Cominuscule, Adjoint, Coadjoint, Other };

std::string flavor_name(Flavor f);

struct SpaceId {
    char series = 'A';
    int rank = 1;
    int node = 0;  // 0-based marked node
    std::string name() const;  // "F4/P1"
};

SpaceId parse_space(const std::string& text);

// Flavors of varpi_node as listed in the weight table (fundamental weights only).
std::set<Flavor> table_flavors(char series, int rank, int node);
// Same information characterized directly from the root datum.
std::set<Flavor> computed_flavors(const RootSystem& rs, int node);
Flavor primary_flavor(const std::set<Flavor>& fl);

struct SchubertClass {
    WeylElement rep;  // minimal coset representative
    Vec weight;       // rep(varpi), fundamental coordinates
    Vec label;        // rep(varpi) in root coordinates; empty unless (co)adjoint
    int length = 0;
};

class Space {
public:
    explicit Space(SpaceId id);
    static std::shared_ptr<const Space> get(const std::string& name);
    static std::shared_ptr<const Space> get(const SpaceId& id);

    SpaceId id;
    RootSystem rs;
    Vec varpi;
    std::set<Flavor> flavors;
    Flavor flavor = Flavor::Other;
    std::vector<SchubertClass> classes;  // by length, BFS order within a length
    int dim = 0;
    int c1 = 0;  // <sum of roots of the unipotent radical, alpha_P^vee>

    std::string name() const { return id.name(); }
    bool labeled() const { return flavor == Flavor::Adjoint || flavor == Flavor::Coadjoint; }
    size_t size() const { return classes.size(); }
    int point() const { return static_cast<int>(classes.size()) - 1; }
    std::vector<int> betti() const;

    int index_of_weight(const Vec& weight) const;  // -1 if absent
    int index_of_label(const Vec& root) const;     // throws BadLabel
    int index_of_word(const std::vector<int>& word) const;  // coset of the word
    int index_of_spec(const std::string& text) const;       // "[1,2,..]" or "s2 s4 ..."
    const Vec& root_label(int index) const;                 // throws Unsupported

    int dual(int index) const;  // Poincare dual class
    Vec poincare_dual_label(const Vec& root) const;

    // X(alpha) contained in X(beta), rule on labels
    bool bruhat_leq(const Vec& alpha, const Vec& beta) const;
    // X(class i) contained in X(class j), by the subword property on reps
    bool bruhat_contained(int i, int j) const;

private:
    std::map<Vec, int> by_weight_;
    std::vector<int> dual_;
};

// Projection of the Bruhat interval below the element with the given word, as weights.
std::set<Vec> subword_orbit(const RootSystem& rs, const std::vector<int>& word, const Vec& varpi);

bool is_lambda_minuscule(const RootSystem& rs, const WeylElement& w, const Vec& lambda);
// cominuscule variant: minuscule in the dual root system
bool is_lambda_cominuscule(const RootSystem& rs, const WeylElement& w, const Vec& lambda);

// Number of positive roots with positive coefficient on the node.
int parabolic_dimension(const RootSystem& rs, int node);
// Index via the sum of roots of the unipotent radical.
Int index_by_root_sum(const RootSystem& rs, int node);
// Index via the largest coroot alpha^vee with <varpi, alpha^vee> = 1 and the
// length of alpha_P^vee: c1 = <rho, alpha^vee> + 1.
Int index_by_largest_coroot(const RootSystem& rs, int node);
// Index from the flavor-specific formulas in rho, Theta, theta.
Int index_by_flavor_formula(const RootSystem& rs, Flavor f, bool second_line = false);

bool connected_support(const RootSystem& rs, const Vec& a, const Vec& b);

}  // namespace qs
