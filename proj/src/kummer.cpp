#include "pwcalc/kummer.hpp"

#include <numeric>
#include <sstream>

#include "pwcalc/errors.hpp"

namespace pwcalc {

Partition::Partition(std::map<int, int> mult) : mult_(std::move(mult)) {
    n_ = 0;
    size_ = 0;
    gcd_ = 0;
    for (auto it = mult_.begin(); it != mult_.end();) {
        if (it->second == 0) {
            it = mult_.erase(it);
            continue;
        }
        if (it->first <= 0 || it->second < 0)
            throw Error("Partition: parts and multiplicities must be positive");
        n_ += it->first * it->second;
        size_ += it->second;
        gcd_ = std::gcd(gcd_, it->first);
        ++it;
    }
    if (n_ < 1) throw Error("Partition: empty partition");
}

std::string Partition::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto it = mult_.rbegin(); it != mult_.rend(); ++it)
        for (int i = 0; i < it->second; ++i) {
            if (!first) os << "+";
            os << it->first;
            first = false;
        }
    return os.str();
}

namespace {

void enumerate_partitions(int remaining, int max_part, std::map<int, int>& current,
                          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        ++current[p];
        enumerate_partitions(remaining - p, p, current, out);
        if (--current[p] == 0) current.erase(p);
    }
}

} // namespace

std::vector<Partition> partitions(int n) {
    if (n < 1) throw Error("partitions: n must be positive");
    std::vector<Partition> out;
    std::map<int, int> current;
    enumerate_partitions(n, n, current, out);
    return out;
}

SurfaceGroupModel SurfaceGroupModel::multiplicative_torus() {
    return {Kind::multiplicative_torus};
}
SurfaceGroupModel SurfaceGroupModel::elliptic_times_line() {
    return {Kind::elliptic_times_line};
}
SurfaceGroupModel SurfaceGroupModel::abelian_surface() {
    return {Kind::abelian_surface};
}

GradedVS SurfaceGroupModel::cohomology() const {
    GradedVS v;
    switch (kind) {
        case Kind::multiplicative_torus:
            v.add(0, 0, 1);
            v.add(1, 2, 2);
            v.add(2, 4, 1);
            return v;
        case Kind::elliptic_times_line:
            v.add(0, 0, 1);
            v.add(1, 1, 2);
            v.add(2, 2, 1);
            return v;
        case Kind::abelian_surface:
            for (int k = 0; k <= 4; ++k) v.add(k, k, binomial(4, k));
            return v;
    }
    throw Error("unreachable");
}

Int SurfaceGroupModel::torsion_count(int g) const {
    if (g < 1) throw Error("torsion_count: g must be positive");
    const Int g2 = Int(g) * g;
    return kind == Kind::abelian_surface ? g2 * g2 : g2;
}

FiltKind SurfaceGroupModel::table_kind() const {
    return kind == Kind::elliptic_times_line ? FiltKind::perverse : FiltKind::weight;
}

int SurfaceGroupModel::level_shift_per_twist() const {
    return table_kind() == FiltKind::perverse ? 1 : 2;
}

std::string SurfaceGroupModel::name() const {
    switch (kind) {
        case Kind::multiplicative_torus: return "multiplicative_torus";
        case Kind::elliptic_times_line: return "elliptic_times_line";
        case Kind::abelian_surface: return "abelian_surface";
    }
    throw Error("unreachable");
}

GradedVS sym_product_cohomology(const SurfaceGroupModel& m, const Partition& alpha) {
    GradedVS acc;
    acc.add(0, 0, 1);
    const GradedVS h = m.cohomology();
    for (const auto& [part, mult] : alpha.mult()) acc = acc.tensor(h.sym_power(mult));
    return acc;
}

LaurentPoly gs_poincare(int n, const SurfaceGroupModel& m) {
    if (n < 1) throw Error("gs_poincare: n must be positive");
    LaurentPoly product_side;
    for (const auto& alpha : partitions(n)) {
        LaurentPoly summand = sym_product_cohomology(m, alpha).poincare();
        summand *= m.torsion_count(alpha.gcd_type());
        product_side += summand.shifted(2 * (n - alpha.size()));
    }
    return poly_divide_exact(product_side, m.cohomology().poincare());
}

FiltTable gs_bigraded(int n, const SurfaceGroupModel& m) {
    if (n < 1) throw Error("gs_bigraded: n must be positive");
    const int step = m.level_shift_per_twist();
    FiltTable out(m.table_kind());
    for (const auto& alpha : partitions(n)) {
        const GradedVS piece = sym_product_cohomology(m, alpha);
        const Int mult = m.torsion_count(alpha.gcd_type());
        const int twist = n - alpha.size();
        for (const auto& [bidegree, dim] : piece.dims())
            out.add(bidegree.first + 2 * twist, bidegree.second + step * twist, dim * mult);
    }
    return out;
}

bool check_pw_genus1(int n) {
    const FiltTable p = gs_bigraded(n, SurfaceGroupModel::elliptic_times_line());
    const FiltTable w = gs_bigraded(n, SurfaceGroupModel::multiplicative_torus());
    return check_pw_exchange(p, w).ok;
}

} // namespace pwcalc
