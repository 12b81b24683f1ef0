#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pwcalc/bigint.hpp"
#include "pwcalc/laurent.hpp"

namespace pwcalc {

// Finitely supported dimension table over (degree, auxiliary grade).
// The auxiliary grade carries weight or perversity per class; both
// gradings are additive under tensor and symmetric powers.
class GradedVS {
public:
    GradedVS() = default;

    void add(int degree, int aux, Int dim);
    Int dim(int degree, int aux) const;
    bool empty() const { return dims_.empty(); }
    const std::map<std::pair<int, int>, Int>& dims() const { return dims_; }

    Int total_dim() const;
    LaurentPoly poincare() const;  // sum over the auxiliary grade

    GradedVS tensor(const GradedVS& other) const;

    // n-th graded symmetric power: odd-degree classes contribute exterior
    // powers, even-degree classes symmetric ones; both gradings add up on
    // monomials.
    GradedVS sym_power(int n) const;

    bool operator==(const GradedVS& rhs) const { return dims_ == rhs.dims_; }

private:
    std::map<std::pair<int, int>, Int> dims_;
};

enum class FiltKind { perverse, weight };

std::string to_string(FiltKind k);

// Dimensions of the graded pieces of a perverse or weight filtration:
// (cohomological degree d, filtration level k) -> dim.
class FiltTable {
public:
    explicit FiltTable(FiltKind kind = FiltKind::perverse) : kind_(kind) {}

    FiltKind kind() const { return kind_; }

    void add(int d, int k, Int dim);
    void set(int d, int k, Int dim);
    Int entry(int d, int k) const;
    bool empty() const { return entries_.empty(); }
    const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }

    // Flat record list (d, k, dim), sorted.
    struct Record {
        int d;
        int k;
        Int dim;
    };
    std::vector<Record> records() const;
    static FiltTable from_records(FiltKind kind, const std::vector<Record>& records);

    // Relabel every level k -> k * num / den (each level must divide exactly).
    FiltTable rescaled_levels(int num, int den, FiltKind new_kind) const;

    // Sum over the degree axis, as a polynomial in the level variable.
    LaurentPoly level_sums() const;
    // Sum over the level axis, as a polynomial in the degree variable.
    LaurentPoly betti() const;

    bool operator==(const FiltTable& rhs) const {
        return kind_ == rhs.kind_ && entries_ == rhs.entries_;
    }

private:
    FiltKind kind_;
    std::map<std::pair<int, int>, Int> entries_;
};

struct TableSums {
    LaurentPoly betti;
    LaurentPoly level_sums;
};

TableSums table_sums(const FiltTable& t);

// Cellwise a - b; throws NegativeCoefficient if any cell goes negative.
FiltTable table_difference(const FiltTable& a, const FiltTable& b);

// One failed symmetry instance: dims at the two cells disagree.
struct Violation {
    int d_left, k_left;
    Int dim_left;
    int d_right, k_right;
    Int dim_right;
};

struct CheckResult {
    bool ok = true;
    std::vector<Violation> violations;
};

// dim Gr^P_{r-k} H^d == dim Gr^P_{r+k} H^{d+2k} for all d and k > 0.
CheckResult check_relative_hard_lefschetz(const FiltTable& t, int r);

// dim Gr^W_{n-2k} H^d == dim Gr^W_{n+2k} H^{d+2k} for all d and k > 0.
CheckResult check_curious_hard_lefschetz(const FiltTable& t, int n);

// p(d, k) == w(d, 2k) for all cells.
CheckResult check_pw_exchange(const FiltTable& p, const FiltTable& w);

} // namespace pwcalc
