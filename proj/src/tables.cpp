#include "pwcalc/tables.hpp"

#include <set>

#include "pwcalc/errors.hpp"

namespace pwcalc {

void GradedVS::add(int degree, int aux, Int dim) {
    if (dim < 0) throw Error("GradedVS: negative dimension");
    if (dim == 0) return;
    auto key = std::make_pair(degree, aux);
    auto it = dims_.find(key);
    if (it == dims_.end())
        dims_.emplace(key, std::move(dim));
    else
        it->second += dim;
}

Int GradedVS::dim(int degree, int aux) const {
    auto it = dims_.find({degree, aux});
    return it == dims_.end() ? Int(0) : it->second;
}

Int GradedVS::total_dim() const {
    Int total = 0;
    for (const auto& [key, d] : dims_) total += d;
    return total;
}

LaurentPoly GradedVS::poincare() const {
    LaurentPoly p;
    for (const auto& [key, d] : dims_) p.set_coeff(key.first, p.coeff(key.first) + d);
    return p;
}

GradedVS GradedVS::tensor(const GradedVS& other) const {
    GradedVS out;
    for (const auto& [ka, da] : dims_)
        for (const auto& [kb, db] : other.dims_)
            out.add(ka.first + kb.first, ka.second + kb.second, da * db);
    return out;
}

GradedVS GradedVS::sym_power(int n) const {
    if (n < 0) throw Error("sym_power: negative exponent");

    // Truncated generating series over (monomial length, degree, aux).
    // Each even basis class contributes a geometric factor, each odd class
    // a two-term factor (it squares to zero).
    using Key = std::tuple<int, int, int>;
    std::map<Key, Int> series;
    series[{0, 0, 0}] = 1;

    auto multiply_factor = [&](int deg, int aux, bool odd) {
        std::map<Key, Int> out;
        for (const auto& [key, c] : series) {
            auto [len, d, a] = key;
            const int max_mult = odd ? 1 : n - len;
            for (int m = 0; m <= max_mult && len + m <= n; ++m) {
                Key nk{len + m, d + m * deg, a + m * aux};
                out[nk] += c;
            }
        }
        series = std::move(out);
    };

    for (const auto& [key, d] : dims_) {
        const bool odd = ((key.first % 2) + 2) % 2 == 1;
        Int count = d;
        while (count > 0) {
            multiply_factor(key.first, key.second, odd);
            --count;
        }
    }

    GradedVS out;
    for (const auto& [key, c] : series) {
        auto [len, d, a] = key;
        if (len == n) out.add(d, a, c);
    }
    return out;
}

std::string to_string(FiltKind k) {
    return k == FiltKind::perverse ? "perverse" : "weight";
}

void FiltTable::add(int d, int k, Int dim) {
    if (dim < 0) throw Error("FiltTable: negative dimension");
    if (dim == 0) return;
    entries_[{d, k}] += dim;
}

void FiltTable::set(int d, int k, Int dim) {
    if (dim < 0) throw Error("FiltTable: negative dimension");
    if (dim == 0)
        entries_.erase({d, k});
    else
        entries_[{d, k}] = std::move(dim);
}

Int FiltTable::entry(int d, int k) const {
    auto it = entries_.find({d, k});
    return it == entries_.end() ? Int(0) : it->second;
}

std::vector<FiltTable::Record> FiltTable::records() const {
    std::vector<Record> out;
    out.reserve(entries_.size());
    for (const auto& [key, dim] : entries_) out.push_back({key.first, key.second, dim});
    return out;
}

FiltTable FiltTable::from_records(FiltKind kind, const std::vector<Record>& records) {
    FiltTable t(kind);
    for (const auto& r : records) t.add(r.d, r.k, r.dim);
    return t;
}

FiltTable FiltTable::rescaled_levels(int num, int den, FiltKind new_kind) const {
    FiltTable out(new_kind);
    for (const auto& [key, dim] : entries_) {
        const long long scaled = static_cast<long long>(key.second) * num;
        if (scaled % den != 0)
            throw Error("rescaled_levels: level " + std::to_string(key.second) +
                        " not divisible by " + std::to_string(den));
        out.add(key.first, static_cast<int>(scaled / den), dim);
    }
    return out;
}

LaurentPoly FiltTable::level_sums() const {
    LaurentPoly p;
    for (const auto& [key, dim] : entries_) p.set_coeff(key.second, p.coeff(key.second) + dim);
    return p;
}

LaurentPoly FiltTable::betti() const {
    LaurentPoly p;
    for (const auto& [key, dim] : entries_) p.set_coeff(key.first, p.coeff(key.first) + dim);
    return p;
}

TableSums table_sums(const FiltTable& t) {
    return {t.betti(), t.level_sums()};
}

FiltTable table_difference(const FiltTable& a, const FiltTable& b) {
    if (a.kind() != b.kind()) throw Error("table_difference: kind mismatch");
    std::map<std::pair<int, int>, Int> cells;
    for (const auto& [cell, dim] : a.entries()) cells[cell] += dim;
    for (const auto& [cell, dim] : b.entries()) cells[cell] -= dim;
    FiltTable out(a.kind());
    for (const auto& [cell, dim] : cells) {
        if (dim < 0)
            throw NegativeCoefficient("table_difference at (" + std::to_string(cell.first) +
                                      "," + std::to_string(cell.second) + "): " + dim.str());
        out.add(cell.first, cell.second, dim);
    }
    return out;
}

namespace {

// Collect the symmetry instances touched by the support of the table and
// compare the paired cells.
CheckResult check_reflection(const FiltTable& t, int axis, int level_step) {
    // Instance (d, k) with k > 0 pairs cell (d, axis - level_step*k)
    // against cell (d + 2k, axis + level_step*k).
    std::set<std::pair<int, int>> instances;
    for (const auto& [cell, dim] : t.entries()) {
        const auto [d, lvl] = cell;
        const int offset = lvl - axis;
        if (offset % level_step != 0) continue;
        const int k = offset / level_step;
        if (k < 0)
            instances.insert({d, -k});
        else if (k > 0)
            instances.insert({d - 2 * k, k});
    }
    CheckResult res;
    for (const auto& [d, k] : instances) {
        const int k_left = axis - level_step * k;
        const int k_right = axis + level_step * k;
        const Int left = t.entry(d, k_left);
        const Int right = t.entry(d + 2 * k, k_right);
        if (left != right) {
            res.ok = false;
            res.violations.push_back({d, k_left, left, d + 2 * k, k_right, right});
        }
    }
    return res;
}

} // namespace

CheckResult check_relative_hard_lefschetz(const FiltTable& t, int r) {
    if (t.kind() != FiltKind::perverse)
        throw Error("check_relative_hard_lefschetz expects a perverse table");
    return check_reflection(t, r, 1);
}

CheckResult check_curious_hard_lefschetz(const FiltTable& t, int n) {
    if (t.kind() != FiltKind::weight)
        throw Error("check_curious_hard_lefschetz expects a weight table");
    return check_reflection(t, n, 2);
}

CheckResult check_pw_exchange(const FiltTable& p, const FiltTable& w) {
    if (p.kind() != FiltKind::perverse || w.kind() != FiltKind::weight)
        throw Error("check_pw_exchange expects (perverse, weight)");
    CheckResult res;
    std::set<std::pair<int, int>> cells;  // (d, k) on the perverse side
    for (const auto& [cell, dim] : p.entries()) cells.insert(cell);
    for (const auto& [cell, dim] : w.entries()) {
        const auto [d, kw] = cell;
        if (kw % 2 != 0) {
            // Odd weight can never match a perverse level.
            res.ok = false;
            res.violations.push_back({d, kw / 2, 0, d, kw, dim});
            continue;
        }
        cells.insert({d, kw / 2});
    }
    for (const auto& [d, k] : cells) {
        const Int lhs = p.entry(d, k);
        const Int rhs = w.entry(d, 2 * k);
        if (lhs != rhs) {
            res.ok = false;
            res.violations.push_back({d, k, lhs, d, 2 * k, rhs});
        }
    }
    return res;
}

} // namespace pwcalc
