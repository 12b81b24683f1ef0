#pragma once

#include <map>
#include <string>
#include <vector>

#include "pwcalc/laurent.hpp"
#include "pwcalc/tables.hpp"

namespace pwcalc {

// Partition of n stored as multiplicities: mult[v] = number of parts equal
// to v. Derived data: n, size |alpha| and the gcd of the part values.
class Partition {
public:
    explicit Partition(std::map<int, int> mult);

    int n() const { return n_; }
    int size() const { return size_; }       // |alpha| = sum of multiplicities
    int gcd_type() const { return gcd_; }    // gcd of part values with nonzero multiplicity
    const std::map<int, int>& mult() const { return mult_; }

    std::string to_string() const;
    bool operator==(const Partition& rhs) const { return mult_ == rhs.mult_; }

private:
    std::map<int, int> mult_;
    int n_;
    int size_;
    int gcd_;
};

// All partitions of n >= 1.
std::vector<Partition> partitions(int n);

// The two-dimensional algebraic group whose Kummer-like fibres are under
// study, together with the grading its cohomology carries:
//   multiplicative_torus  - H^k has weight 2k; g-torsion count g^2
//   elliptic_times_line   - H^k has perversity k (relative to the projection
//                           to the line); g-torsion count g^2
//   abelian_surface       - H^k pure of weight k; g-torsion count g^4
struct SurfaceGroupModel {
    enum class Kind { multiplicative_torus, elliptic_times_line, abelian_surface };

    Kind kind;

    static SurfaceGroupModel multiplicative_torus();
    static SurfaceGroupModel elliptic_times_line();
    static SurfaceGroupModel abelian_surface();

    GradedVS cohomology() const;
    Int torsion_count(int g) const;
    FiltKind table_kind() const;
    // Level increment of one Tate-twist step: 1 on the perverse side,
    // 2 on the weight side.
    int level_shift_per_twist() const;

    std::string name() const;
};

// Cohomology of the partition-indexed symmetric product: the tensor product
// over parts v of Sym^{alpha_v} H^*(X), both gradings additive.
GradedVS sym_product_cohomology(const SurfaceGroupModel& m, const Partition& alpha);

// Poincare polynomial of the 2(n-1)-dimensional Kummer-like fibre: expand
// the splitting of H^*(X x K^[n]) over partitions, with the degree shift
// 2(n - |alpha|) carrying the twist bookkeeping, then divide off P_t(X).
// The splitting guarantees exact divisibility.
LaurentPoly gs_poincare(int n, const SurfaceGroupModel& m);

// The (degree, level) table of H^*(X x K^[n]), assembled summand by summand;
// each partition contributes with degree shifted by 2(n - |alpha|) and level
// shifted by (n - |alpha|) times the model's per-twist step.
FiltTable gs_bigraded(int n, const SurfaceGroupModel& m);

// Verdict of the level exchange between the perverse table of the
// elliptic-times-line side and the weight table of the torus side.
bool check_pw_genus1(int n);

} // namespace pwcalc
