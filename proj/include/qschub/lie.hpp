#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qs {

using Int = long;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

enum class ErrorKind {
    InvalidType,
    NotARoot,
    BadLabel,
    Unsupported,
    Capacity,
    Parse,
    Certificate,
};

struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Simple roots use Bourbaki numbering; indices are 0-based internally
// (node k of the diagram is index k-1).
//
//   A_n  1-2-...-n
//   B_n  1-2-...-(n-1)=>n        alpha_n short
//   C_n  1-2-...-(n-1)<=n        alpha_n long
//   D_n  1-2-...-(n-2)<(n-1, n)
//   E_n  1-3-4-5-...-n, 2 attached to 4
//   F_4  1-2=>3-4                alpha_1, alpha_2 long
//   G_2  1<=2                    alpha_1 short
class RootSystem {
public:
    static RootSystem build(char series, int rank);
    static RootSystem from_cartan(char series, int rank, Mat cartan);
    RootSystem dual() const;

    char series = 'A';
    int rank = 0;
    Mat cartan;                 // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<Vec> positive_roots;  // simple-root coordinates, by height then lex
    Vec highest_root;           // Theta
    Vec highest_short_root;     // theta
    Vec rho;                    // fundamental coordinates, all ones
    Vec rho_check;              // coweight, <alpha_i, rho_check> = 1
    Vec half_norm;              // (alpha_i, alpha_i)/2 scaled so short simple roots give 1

    std::string name() const;
    bool simply_laced() const;

    // root coordinates -> fundamental coordinates
    Vec root_to_weight(const Vec& root) const;
    // fundamental coordinates -> root coordinates; throws if not in the root lattice
    Vec weight_to_root(const Vec& weight) const;

    Int norm2(const Vec& root) const;  // (beta,beta) in the scaled form (short simple = 2)
    bool is_root(const Vec& root) const;
    bool is_long(const Vec& root) const;
    bool is_short(const Vec& root) const;
    int root_index(const Vec& root) const;  // index in all_roots(), -1 if absent
    const std::vector<Vec>& all_roots() const { return all_roots_; }

    // coordinates of beta^vee in the basis of simple coroots
    Vec coroot(const Vec& root) const;
    // <lambda, gamma^vee> for lambda in fundamental coordinates
    Int pair(const Vec& lambda, const Vec& root) const;
    // <beta, gamma^vee> for two roots in root coordinates
    Int pair_roots(const Vec& beta, const Vec& gamma) const;

    Vec reflect(const Vec& lambda, const Vec& root) const;  // s_gamma on weights
    Vec simple_reflect(const Vec& lambda, int i) const;

    Vec fundamental(int i) const;  // varpi_i, fundamental coordinates
    int max_root_length_ratio() const;

private:
    std::vector<Vec> all_roots_;
    std::map<Vec, int> root_pos_;
    void finish();
};

// Closure of the simple roots under simple reflections; independent of build().
std::vector<Vec> roots_by_reflection_closure(const RootSystem& rs);

class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(std::vector<int> word) : word(std::move(word)) {}
    std::vector<int> word;  // s_{word[0]} s_{word[1]} ... ; acts right to left
    int length() const { return static_cast<int>(word.size()); }
    std::string str() const;  // "s2 s4 s3" with 1-based indices
};

// Parse "s2 s4 s3", "s2s4s3" or "2 4 3" (1-based) into 0-based letters.
std::vector<int> parse_word(const std::string& text);

Vec weyl_apply(const RootSystem& rs, const std::vector<int>& word, const Vec& lambda);
inline Vec weyl_apply(const RootSystem& rs, const WeylElement& w, const Vec& lambda) {
    return weyl_apply(rs, w.word, lambda);
}

// Canonical reduced word from the action on rho.
WeylElement normalize(const RootSystem& rs, const std::vector<int>& word);
// Element sending rho to mu (mu regular, in the W-orbit of rho).
WeylElement element_from_rho_image(const RootSystem& rs, Vec mu);
int inversion_count(const RootSystem& rs, const std::vector<int>& word);
bool same_element(const RootSystem& rs, const std::vector<int>& a, const std::vector<int>& b);

WeylElement longest_element(const RootSystem& rs);
// -w0 acting on node indices
std::vector<int> weyl_involution(const RootSystem& rs);

bool dominant(const Vec& lambda);
bool leq_coefficientwise(const Vec& a, const Vec& b);
Int height(const Vec& root);
bool is_positive(const Vec& root);
std::string vec_str(const Vec& v);

}  // namespace qs
