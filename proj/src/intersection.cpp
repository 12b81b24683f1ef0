#include "pwcalc/intersection.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "pwcalc/errors.hpp"

namespace pwcalc {

namespace {

// Componentwise divisibility of exponent vectors.
bool divides(const RingSpec::Monomial& lhs, const RingSpec::Monomial& m) {
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (m[i] < lhs[i]) return false;
    return true;
}

RingSpec::Monomial quotient(const RingSpec::Monomial& m, const RingSpec::Monomial& lhs) {
    RingSpec::Monomial q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) q[i] = m[i] - lhs[i];
    return q;
}

RingSpec::Monomial product(const RingSpec::Monomial& a, const RingSpec::Monomial& b) {
    RingSpec::Monomial p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) p[i] = a[i] + b[i];
    return p;
}

void accumulate(RingSpec::Element& acc, const RingSpec::Monomial& m, const Int& c) {
    auto it = acc.find(m);
    if (it == acc.end()) {
        if (c != 0) acc.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) acc.erase(it);
}

} // namespace

RingSpec::RingSpec(std::vector<Generator> generators, std::vector<Relation> relations,
                   int top_degree, std::map<Monomial, Int> degree_map)
    : generators_(std::move(generators)),
      relations_(std::move(relations)),
      top_degree_(top_degree),
      degree_map_(std::move(degree_map)) {
    validate_and_index();
}

int RingSpec::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name) return static_cast<int>(i);
    throw Error("unknown ring generator '" + name + "'");
}

int RingSpec::monomial_degree(const Monomial& m) const {
    int deg = 0;
    for (std::size_t i = 0; i < m.size(); ++i) deg += m[i] * generators_[i].degree;
    return deg;
}

std::string RingSpec::monomial_to_string(const Monomial& m) const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (any) os << "*";
        os << generators_[i].name;
        if (m[i] != 1) os << "^" << m[i];
        any = true;
    }
    return any ? os.str() : "1";
}

void RingSpec::validate_and_index() {
    const std::size_t ngen = generators_.size();
    for (const auto& g : generators_)
        if (g.degree <= 0 || g.degree % 2 != 0)
            throw Error("ring generator '" + g.name + "' must have positive even degree");

    for (const auto& rel : relations_) {
        if (rel.lhs.size() != ngen)
            throw Error("relation lhs has wrong arity");
        const int deg = monomial_degree(rel.lhs);
        for (const auto& [m, c] : rel.rhs) {
            if (m.size() != ngen) throw Error("relation rhs has wrong arity");
            if (monomial_degree(m) != deg)
                throw Error("inhomogeneous relation at " + monomial_to_string(rel.lhs));
            if (!std::lexicographical_compare(m.begin(), m.end(), rel.lhs.begin(),
                                              rel.lhs.end()))
                throw Error("relation at " + monomial_to_string(rel.lhs) +
                            " does not decrease the monomial order");
        }
    }

    // Enumerate every monomial of degree <= top_degree and compute its normal
    // form along all one-step rewrite choices; disagreement means the
    // presentation is not confluent.
    std::vector<Monomial> all;
    Monomial cur(ngen, 0);
    std::function<void(std::size_t, int)> enumerate = [&](std::size_t idx, int deg) {
        if (idx == ngen) {
            all.push_back(cur);
            return;
        }
        for (int e = 0; deg + e * generators_[idx].degree <= top_degree_; ++e) {
            cur[idx] = e;
            enumerate(idx + 1, deg + e * generators_[idx].degree);
        }
        cur[idx] = 0;
    };
    enumerate(0, 0);
    std::sort(all.begin(), all.end());  // lex-increasing, so rewrites only point backwards

    std::function<const Element&(const Monomial&)> nf = [&](const Monomial& m) -> const Element& {
        auto it = normal_forms_.find(m);
        if (it != normal_forms_.end()) return it->second;

        std::vector<Element> results;
        for (const auto& rel : relations_) {
            if (!divides(rel.lhs, m)) continue;
            const Monomial rest = quotient(m, rel.lhs);
            Element reduced;
            for (const auto& [rm, rc] : rel.rhs) {
                const Monomial rewritten = product(rm, rest);
                if (monomial_degree(rewritten) > top_degree_) continue;
                for (const auto& [nm, nc] : nf(rewritten)) accumulate(reduced, nm, rc * nc);
            }
            results.push_back(std::move(reduced));
        }
        Element result;
        if (results.empty()) {
            result.emplace(m, 1);
        } else {
            for (std::size_t i = 1; i < results.size(); ++i)
                if (results[i] != results[0])
                    throw NonConfluent("two reduction orders disagree at " +
                                       monomial_to_string(m));
            result = std::move(results[0]);
        }
        return normal_forms_.emplace(m, std::move(result)).first->second;
    };
    for (const auto& m : all) nf(m);

    for (const auto& [m, v] : degree_map_) {
        if (m.size() != ngen) throw Error("degree map key has wrong arity");
        if (monomial_degree(m) != top_degree_)
            throw Error("degree map key " + monomial_to_string(m) + " is not of top degree");
    }
    // A reducible degree-map key must agree with the value computed from its
    // normal form.
    for (const auto& [m, v] : degree_map_) {
        const Element& form = normal_form(m);
        if (form.size() == 1 && form.begin()->first == m && form.begin()->second == 1)
            continue;
        Int via_normal_form = 0;
        for (const auto& [nm, nc] : form) {
            auto it = degree_map_.find(nm);
            if (it == degree_map_.end())
                throw Error("degree map key " + monomial_to_string(m) +
                            " reduces to " + monomial_to_string(nm) +
                            " which has no assigned degree");
            via_normal_form += nc * it->second;
        }
        if (via_normal_form != v)
            throw Error("degree map at " + monomial_to_string(m) +
                        " is not well-defined modulo the relations");
    }
}

const RingSpec::Element& RingSpec::normal_form(const Monomial& m) const {
    if (monomial_degree(m) > top_degree_) return zero_;
    auto it = normal_forms_.find(m);
    if (it == normal_forms_.end())
        throw Error("monomial " + monomial_to_string(m) + " outside the reduction table");
    return it->second;
}

RingElement RingElement::zero(const RingSpec& ring) {
    return RingElement(&ring);
}

RingElement RingElement::one(const RingSpec& ring) {
    RingElement e(&ring);
    e.terms_.emplace(RingSpec::Monomial(ring.generators().size(), 0), 1);
    return e;
}

RingElement RingElement::generator(const RingSpec& ring, const std::string& name) {
    RingSpec::Monomial m(ring.generators().size(), 0);
    m[ring.generator_index(name)] = 1;
    RingSpec::Element t;
    t.emplace(std::move(m), 1);
    return from_terms(ring, t);
}

RingElement RingElement::from_terms(const RingSpec& ring, const RingSpec::Element& terms) {
    RingElement e(&ring);
    for (const auto& [m, c] : terms)
        for (const auto& [nm, nc] : ring.normal_form(m)) accumulate(e.terms_, nm, c * nc);
    return e;
}

std::optional<int> RingElement::degree() const {
    if (terms_.empty()) return std::nullopt;
    int deg = ring_->monomial_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (ring_->monomial_degree(m) != deg)
            throw Error("degree of inhomogeneous element " + to_string());
    return deg;
}

RingElement RingElement::operator+(const RingElement& rhs) const {
    if (ring_ != rhs.ring_) throw Error("ring mismatch");
    RingElement out(ring_);
    out.terms_ = terms_;
    for (const auto& [m, c] : rhs.terms_) accumulate(out.terms_, m, c);
    return out;
}

RingElement RingElement::operator-(const RingElement& rhs) const {
    return *this + (-rhs);
}

RingElement RingElement::operator-() const {
    RingElement out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

RingElement RingElement::operator*(const RingElement& rhs) const {
    if (ring_ != rhs.ring_) throw Error("ring mismatch");
    RingElement out(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) {
            const RingSpec::Monomial m = product(ma, mb);
            if (ring_->monomial_degree(m) > ring_->top_degree()) continue;
            for (const auto& [nm, nc] : ring_->normal_form(m))
                accumulate(out.terms_, nm, ca * cb * nc);
        }
    return out;
}

RingElement RingElement::operator*(const Int& s) const {
    RingElement out(ring_);
    if (s == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
    return out;
}

bool RingElement::operator==(const RingElement& rhs) const {
    return ring_ == rhs.ring_ && terms_ == rhs.terms_;
}

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const Int a = abs(c);
        const bool unit_monomial =
            std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
        if (a != 1 || unit_monomial) os << a.str();
        if (!unit_monomial) {
            if (a != 1) os << "*";
            os << ring_->monomial_to_string(m);
        }
    }
    return os.str();
}

RingElement ring_reduce(const RingSpec& ring, const RingSpec::Element& raw_terms) {
    return RingElement::from_terms(ring, raw_terms);
}

Int ring_degree(const RingElement& e) {
    if (e.is_zero()) return 0;
    const RingSpec& ring = *e.ring();
    Int total = 0;
    for (const auto& [m, c] : e.terms()) {
        if (ring.monomial_degree(m) != ring.top_degree())
            throw DegreeMismatch("ring_degree of element off the top degree: " + e.to_string());
        auto it = ring.degree_map().find(m);
        if (it == ring.degree_map().end())
            throw DegreeMismatch("no assigned degree for monomial " +
                                 ring.monomial_to_string(m));
        total += c * it->second;
    }
    return total;
}

ChernVector ChernVector::trivial(const RingSpec& ring, int rank) {
    ChernVector cv;
    cv.rank = rank;
    cv.c.assign(rank, RingElement::zero(ring));
    return cv;
}

const RingElement& ChernVector::at(int i) const {
    if (i < 1 || i > rank) throw Error("ChernVector index out of range");
    return c[i - 1];
}

void ChernVector::validate() const {
    if (static_cast<int>(c.size()) != rank)
        throw Error("ChernVector: length does not match rank");
    for (int i = 1; i <= rank; ++i) {
        auto deg = c[i - 1].degree();
        if (deg && *deg != 2 * i)
            throw Error("ChernVector: c_" + std::to_string(i) + " is not of degree " +
                        std::to_string(2 * i));
    }
}

ChernVector chern_twist(const ChernVector& cv, const RingElement& l) {
    if (cv.rank == 0) return cv;
    const RingSpec& ring = *cv.c[0].ring();
    if (auto deg = l.degree(); deg && *deg != 2)
        throw Error("chern_twist: twisting class must have degree 2");
    ChernVector out = ChernVector::trivial(ring, cv.rank);
    for (int i = 1; i <= cv.rank; ++i) {
        RingElement acc = RingElement::zero(ring);
        for (int j = 0; j <= i; ++j) {
            const RingElement& cj = (j == 0) ? RingElement::one(ring) : cv.at(j);
            RingElement lp = RingElement::one(ring);
            for (int p = 0; p < i - j; ++p) lp = lp * l;
            acc = acc + (cj * lp) * binomial(cv.rank - j, i - j);
        }
        out.c[i - 1] = acc;
    }
    return out;
}

namespace {

const RingSpec& ring_of(const ChernVector& a, const ChernVector& b) {
    if (!a.c.empty()) return *a.c[0].ring();
    if (!b.c.empty()) return *b.c[0].ring();
    throw Error("Chern operation on two rank-zero vectors");
}

RingElement class_at(const RingSpec& ring, const ChernVector& cv, int i) {
    if (i == 0) return RingElement::one(ring);
    if (i < 0 || i > cv.rank) return RingElement::zero(ring);
    return cv.at(i);
}

} // namespace

ChernVector whitney_product(const ChernVector& total, const ChernVector& extra) {
    const RingSpec& ring = ring_of(total, extra);
    ChernVector out = ChernVector::trivial(ring, total.rank + extra.rank);
    for (int k = 1; k <= out.rank; ++k) {
        RingElement acc = RingElement::zero(ring);
        for (int i = 0; i <= k; ++i)
            acc = acc + class_at(ring, total, i) * class_at(ring, extra, k - i);
        out.c[k - 1] = acc;
    }
    return out;
}

ChernVector whitney_quotient(const ChernVector& total, const ChernVector& sub) {
    if (sub.rank > total.rank) throw Error("whitney_quotient: sub rank exceeds total rank");
    const RingSpec& ring = ring_of(total, sub);
    const int out_rank = total.rank - sub.rank;
    ChernVector out = ChernVector::trivial(ring, out_rank);
    std::vector<RingElement> q(out_rank + 1, RingElement::zero(ring));
    q[0] = RingElement::one(ring);
    for (int k = 1; k <= out_rank; ++k) {
        RingElement acc = class_at(ring, total, k);
        for (int i = 1; i <= std::min(k, sub.rank); ++i)
            acc = acc - sub.at(i) * q[k - i];
        q[k] = acc;
        out.c[k - 1] = q[k];
    }
    return out;
}

Int lagrangian_self_intersection(const Int& euler_char, int dim) {
    if (dim < 1) throw Error("lagrangian_self_intersection: dim must be positive");
    return dim % 2 == 0 ? euler_char : -euler_char;
}

Int lefschetz_pencil_correction(const Int& euler_general, const Int& num_nodes,
                                int dim_ambient) {
    if (num_nodes < 0) throw Error("lefschetz_pencil_correction: negative node count");
    const Int signed_euler =
        (dim_ambient - 1) % 2 == 0 ? euler_general : -euler_general;
    return signed_euler - 2 * num_nodes;
}

Int blowup_selfintersection_correction(const Int& hat_self, const Int& per_center,
                                       const Int& num_centers) {
    return hat_self + num_centers * per_center;
}

const std::array<const char*, 4> IntersectionMatrix::basis = {"fibre", "N~", "Omega~", "K"};

IntersectionMatrixBuilder& IntersectionMatrixBuilder::set(int i, int j, Int value) {
    if (i < 0 || i > 3 || j < 0 || j > 3) throw Error("intersection matrix index out of range");
    auto record = [&](int a, int b) {
        auto it = entries_.find({a, b});
        if (it != entries_.end() && it->second != value)
            throw AsymmetricMatrix("entries (" + std::to_string(a) + "," + std::to_string(b) +
                                   ") disagree: " + it->second.str() + " vs " + value.str());
        entries_[{a, b}] = value;
    };
    record(i, j);
    record(j, i);
    return *this;
}

IntersectionMatrix IntersectionMatrixBuilder::build() const {
    IntersectionMatrix out;
    std::vector<std::vector<Int>> rows(4, std::vector<Int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto it = entries_.find({i, j});
            if (it == entries_.end())
                throw Error("intersection matrix entry (" + std::to_string(i) + "," +
                            std::to_string(j) + ") never assigned");
            out.m[i][j] = it->second;
            rows[i][j] = it->second;
        }
    out.rank = matrix_rank(rows);
    return out;
}

IntersectionMatrix assemble_intersection_matrix(const Int& n_self, const Int& n_omega,
                                                const Int& n_k, const Int& omega_self,
                                                const Int& omega_k, const Int& k_self) {
    IntersectionMatrixBuilder builder;
    for (int j = 0; j < 4; ++j) builder.set(0, j, 0);
    builder.set(1, 1, n_self);
    builder.set(1, 2, n_omega);
    builder.set(1, 3, n_k);
    builder.set(2, 2, omega_self);
    builder.set(2, 3, omega_k);
    builder.set(3, 3, k_self);
    return builder.build();
}

int matrix_rank(const std::vector<std::vector<Int>>& m) {
    std::vector<std::vector<Rational>> a;
    for (const auto& row : m) {
        std::vector<Rational> r;
        r.reserve(row.size());
        for (const auto& v : row) r.emplace_back(v);
        a.push_back(std::move(r));
    }
    const int nrows = static_cast<int>(a.size());
    const int ncols = nrows == 0 ? 0 : static_cast<int>(a[0].size());
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < nrows; ++r) {
            if (a[r][col] == 0) continue;
            const Rational f = a[r][col] / a[rank][col];
            for (int c = col; c < ncols; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

} // namespace pwcalc
