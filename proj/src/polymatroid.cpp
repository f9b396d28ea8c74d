#include "marc/polymatroid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "marc/error.hpp"

namespace marc {

namespace {

constexpr double kActiveTieTol = 1e-12;

}  // namespace

SubsetFunction::SubsetFunction(int K, std::vector<double> values) : K_(K), values_(std::move(values)) {
    if (K < 1 || K > kMaxEnumeratedUsers)
        throw DomainError("SubsetFunction: K = " + std::to_string(K) + " outside [1, " +
                          std::to_string(kMaxEnumeratedUsers) + "]");
    if (values_.size() != (std::size_t{1} << K))
        throw DomainError("SubsetFunction: expected 2^K = " + std::to_string(std::size_t{1} << K) +
                          " values, got " + std::to_string(values_.size()));
    if (values_[0] != 0.0) throw DomainError("SubsetFunction: f(empty) must be 0");
    for (std::size_t m = 0; m < values_.size(); ++m)
        if (!std::isfinite(values_[m]))
            throw DomainError("SubsetFunction: non-finite value at " + to_string(Subset{static_cast<std::uint32_t>(m)}));
}

SubsetFunction SubsetFunction::tabulate(int K, const std::function<double(Subset)>& fn) {
    if (K < 1 || K > kMaxEnumeratedUsers)
        throw DomainError("SubsetFunction: K = " + std::to_string(K) + " out of range");
    std::vector<double> values(std::size_t{1} << K, 0.0);
    for (std::uint32_t m = 1; m < values.size(); ++m) values[m] = fn(Subset{m});
    return SubsetFunction(K, std::move(values));
}

Certificate certify(const SubsetFunction& f) {
    const int K = f.K();
    const auto values = f.values();
    double scale = 0.0;
    for (double v : values) scale = std::max(scale, std::abs(v));
    const double tol = 1e-12 * scale;

    Certificate cert;
    for (std::uint32_t m = 0; m < values.size(); ++m) {
        const Subset S{m};
        for (int k1 = 0; k1 < K; ++k1) {
            if (S.contains(k1)) continue;
            const double gap_up = f(S.with(k1)) - f(S);
            if (gap_up < -tol && !cert.monotone_witness) {
                cert.monotone = false;
                cert.monotone_witness = MonotoneWitness{S, k1, gap_up};
            }
            for (int k2 = k1 + 1; k2 < K; ++k2) {
                if (S.contains(k2)) continue;
                const double gap = f(S.with(k1)) + f(S.with(k2)) - f(S) - f(S.with(k1).with(k2));
                if (gap < -tol && !cert.witness) {
                    cert.submodular = false;
                    cert.witness = SubmodularWitness{S, k1, k2, gap};
                }
            }
        }
    }
    return cert;
}

std::vector<double> vertex_enumeration(const SubsetFunction& f, std::span<const int> perm) {
    const int K = f.K();
    if (static_cast<int>(perm.size()) != K) throw DomainError("permutation length differs from K");
    std::vector<bool> seen(static_cast<std::size_t>(K), false);
    for (int k : perm) {
        if (k < 0 || k >= K || seen[static_cast<std::size_t>(k)])
            throw DomainError("not a permutation of the sources");
        seen[static_cast<std::size_t>(k)] = true;
    }
    const Certificate cert = certify(f);
    if (!cert.polymatroid())
        throw DomainError(cert.submodular ? "set function is not monotone"
                                          : "set function is not submodular");

    std::vector<double> rates(static_cast<std::size_t>(K), 0.0);
    Subset prefix = Subset::empty();
    for (int k : perm) {
        const Subset next = prefix.with(k);
        rates[static_cast<std::size_t>(k)] = f(next) - f(prefix);
        prefix = next;
    }
    return rates;
}

IntersectionOutcome intersection_max_sum(const SubsetFunction& f1, const SubsetFunction& f2) {
    if (f1.K() != f2.K())
        throw DomainError("intersection_max_sum: ground sets differ (" + std::to_string(f1.K()) +
                          " vs " + std::to_string(f2.K()) + ")");
    const int K = f1.K();
    const Subset all = Subset::full(K);

    const double full_min = std::min(f1.full(), f2.full());
    double mixed_min = full_min;
    Subset mixed_arg = Subset::empty();
    bool have_mixed = false;
    for (std::uint32_t m = 1; m < all.mask; ++m) {
        const Subset S{m};
        const double v = f1(S) + f2(S.complement(K));
        if (!have_mixed || v < mixed_min) {
            mixed_min = v;
            mixed_arg = S;
            have_mixed = true;
        }
    }

    IntersectionOutcome out;
    if (have_mixed && mixed_min < full_min - kActiveTieTol) {
        out.kind = IntersectionKind::Inactive;
        out.max_sum_rate = mixed_min;
        out.argmin_subset = mixed_arg;
    } else {
        out.kind = IntersectionKind::Active;
        out.max_sum_rate = full_min;
        out.argmin_subset = f2.full() <= f1.full() ? Subset::empty() : all;
    }
    if (K == 2) out.two_user_case = classify_two_user(f1, f2);
    out.polymatroid_inputs = certify(f1).polymatroid() && certify(f2).polymatroid();
    return out;
}

TwoUserCase classify_two_user(const SubsetFunction& f1, const SubsetFunction& f2) {
    if (f1.K() != 2 || f2.K() != 2)
        throw UnsupportedDimension("classify_two_user requires K = 2");
    const Subset one = Subset::single(0);
    const Subset two = Subset::single(1);
    const double full_min = std::min(f1.full(), f2.full());
    const double via_one = f1(one) + f2(two);
    const double via_two = f1(two) + f2(one);
    const double mixed = std::min(via_one, via_two);
    if (mixed < full_min - kActiveTieTol)
        return via_one <= via_two ? TwoUserCase::Case2 : TwoUserCase::Case1;
    const double diff = f1.full() - f2.full();
    if (std::abs(diff) <= kActiveTieTol) return TwoUserCase::Case3b;
    return diff < 0.0 ? TwoUserCase::Case3a : TwoUserCase::Case3c;
}

std::string to_string(IntersectionKind kind) {
    return kind == IntersectionKind::Active ? "Active" : "Inactive";
}

std::string to_string(TwoUserCase c) {
    switch (c) {
        case TwoUserCase::Case1: return "1";
        case TwoUserCase::Case2: return "2";
        case TwoUserCase::Case3a: return "3a";
        case TwoUserCase::Case3b: return "3b";
        case TwoUserCase::Case3c: return "3c";
    }
    return "?";
}

}  // namespace marc
