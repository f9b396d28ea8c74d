#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "marc/subset.hpp"

namespace marc {

/// Real-valued set function on the subsets of {0..K-1}, indexed by mask.
/// Normalized (f(empty) = 0) and finite by construction.
class SubsetFunction {
public:
    SubsetFunction(int K, std::vector<double> values);

    /// Evaluates fn on every subset; fn(empty) is ignored and stored as 0.
    static SubsetFunction tabulate(int K, const std::function<double(Subset)>& fn);

    int K() const noexcept { return K_; }
    double operator()(Subset s) const { return values_[s.mask]; }
    std::span<const double> values() const noexcept { return values_; }
    double full() const { return values_.back(); }

private:
    int K_;
    std::vector<double> values_;
};

// f(S + k1) + f(S + k2) < f(S) + f(S + k1 + k2)
struct SubmodularWitness {
    Subset S;
    int k1;
    int k2;
    double gap;  // lhs - rhs, negative
};

// f(S + k) < f(S)
struct MonotoneWitness {
    Subset S;
    int k;
    double gap;
};

struct Certificate {
    bool submodular = true;
    bool monotone = true;
    std::optional<SubmodularWitness> witness;
    std::optional<MonotoneWitness> monotone_witness;

    bool polymatroid() const { return submodular && monotone; }
};

/// Exhaustive check of the diminishing-returns and monotonicity inequalities.
/// Tolerance is 1e-12 relative to max |f|. Witnesses report the first violation
/// in (mask, k1, k2) order.
Certificate certify(const SubsetFunction& f);

/// Greedy corner point of the dominant face: R[perm[i]] = f(perm[0..i]) - f(perm[0..i-1]).
/// perm holds 0-based source indices. Throws DomainError unless f is a polymatroid
/// rank function or perm is not a permutation.
std::vector<double> vertex_enumeration(const SubsetFunction& f, std::span<const int> perm);

enum class IntersectionKind { Active, Inactive };

// Labels of the five two-user intersection shapes. Case1/Case2 are inactive,
// Case3a/3b/3c are active.
enum class TwoUserCase { Case1, Case2, Case3a, Case3b, Case3c };

struct IntersectionOutcome {
    double max_sum_rate = 0.0;
    Subset argmin_subset;              // S minimizing f1(S) + f2(K \ S)
    IntersectionKind kind = IntersectionKind::Active;
    std::optional<TwoUserCase> two_user_case;  // only for K = 2
    // False when f1 or f2 fails certification. max_sum_rate is then the lemma value,
    // which only upper-bounds the largest sum rate of the intersection.
    bool polymatroid_inputs = true;
};

/// Largest K-user sum rate in {R >= 0 : R_S <= f1(S), R_S <= f2(S)} via
/// min_S f1(S) + f2(K \ S). A mixed subset counts as binding only when it beats
/// min(f1(K), f2(K)) by more than 1e-12; otherwise the outcome is Active and
/// argmin_subset is the full-sum term (empty set when f2(K) <= f1(K), K otherwise).
/// Mixed ties resolve to the lowest mask. Throws DomainError on a ground-set mismatch.
IntersectionOutcome intersection_max_sum(const SubsetFunction& f1, const SubsetFunction& f2);

/// Inactive with argmin {2} -> Case1, argmin {1} -> Case2; Active with
/// f1(K) < f2(K) -> Case3a, f1(K) > f2(K) -> Case3c, equal within 1e-12 -> Case3b.
/// Throws UnsupportedDimension unless K = 2.
TwoUserCase classify_two_user(const SubsetFunction& f1, const SubsetFunction& f2);

std::string to_string(IntersectionKind kind);
std::string to_string(TwoUserCase c);

}  // namespace marc
