#pragma once

#include <map>
#include <string>
#include <vector>

#include "superbranch/coeff.hpp"
#include "superbranch/setpartition.hpp"

namespace superbranch {

/// n×n matrix over F_q, q prime, entries in [0, q).
struct FqMatrix {
    int n = 0;
    int q = 2;
    std::vector<int> a; // row-major

    static FqMatrix identity(int n, int q);
    int& at(int i, int j) { return a[i * n + j]; }
    int at(int i, int j) const { return a[i * n + j]; }

    bool is_upper_unitriangular() const;
    bool is_upper_invertible() const;

    friend FqMatrix operator*(const FqMatrix& x, const FqMatrix& y);
    friend auto operator<=>(const FqMatrix&, const FqMatrix&) = default;
};

/// Inverse of an upper unitriangular matrix.
FqMatrix unitriangular_inverse(const FqMatrix& u);

enum class GroupKind { U, B };

/// Largest n the oracle accepts for a given q. Exposed so callers can report it.
int oracle_max_n(int q);

/// Throws DomainError unless q is a supported prime and n is within the guard
/// (n ≤ 5 at q = 2, n ≤ 3 at q = 3). max_n_override > 0 replaces the default.
void check_oracle_guard(int n, int q, int max_n_override = 0);

std::vector<FqMatrix> enumerate_group(int n, int q, GroupKind kind);

/// U_n(F_q) indexed by the base-q digits of its strictly upper entries, read row by row.
std::uint64_t encode_unitriangular(const FqMatrix& u);
FqMatrix decode_unitriangular(std::uint64_t code, int n, int q);

struct SuperclassTable {
    int n = 0;
    int q = 2;
    std::vector<int> class_of;              // by element code
    std::vector<SetPartition> reps;         // by class id
    std::vector<std::uint64_t> sizes;       // by class id
    std::vector<std::vector<std::uint64_t>> members; // by class id, codes ascending

    std::uint64_t order() const { return class_of.size(); }
    /// Class id of the partition's representative u_λ.
    int class_of_partition(const SetPartition& lambda) const;
};

/// Two-sided B_n orbits on u_n, found by BFS over generator multiplications.
SuperclassTable superclasses(int n, int q, int max_n_override = 0);

using ClassFunction = std::vector<BigRational>; // value per element code

/// χ^λ on every element of U_n, via the closed form at class representatives.
ClassFunction char_function(const SetPartition& lambda, const SuperclassTable& table);

/// (1/|G|) Σ f(g) g'(g). Values are real at every q we support.
BigRational group_inner_product(const ClassFunction& f, const ClassFunction& g);

using OracleDecomposition = std::map<SetPartition, BigRational>;

/// Coefficients of Res χ^λ in the supercharacters of U_{n−1}, by group sums.
OracleDecomposition restrict_oracle(const SetPartition& lambda, int q, int max_n_override = 0);

enum class InduceMode { Full, Representatives };

/// Ind χ^μ from U_{n−1} (μ over [n−1]) as a class function on U_n.
/// Full sums over all conjugators need n ≤ 4; Representatives evaluates one
/// element per superclass and allows n ≤ 5.
ClassFunction induced_function(const SetPartition& mu, int n, int q, InduceMode mode = InduceMode::Full);
ClassFunction superinduced_function(const SetPartition& mu, int n, int q);

OracleDecomposition decompose(const ClassFunction& f, const SuperclassTable& table);

OracleDecomposition induce_oracle(const SetPartition& mu, int n, int q, InduceMode mode = InduceMode::Full);
OracleDecomposition superinduce_oracle(const SetPartition& mu, int n, int q);

/// Exact evaluation of a symbolic combination at q, in the oracle's format.
OracleDecomposition evaluate(const CharCombination& c, int q);

/// One compared quantity in a verification suite.
struct CheckResult {
    std::string suite;
    std::string item;
    bool pass = false;
    std::string expected;
    std::string actual;
};

/// Runs "orthogonality", "restriction", "induction", "superinduction",
/// "frobenius", or "all" at (n, q).
std::vector<CheckResult> run_suite(const std::string& suite, int n, int q);

std::string to_string(const OracleDecomposition& d);

} // namespace superbranch
