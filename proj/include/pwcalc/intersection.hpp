#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pwcalc/bigint.hpp"

namespace pwcalc {

// A finite graded-commutative intersection ring presented by even-degree
// generators, monomial rewrite relations and a degree (integration) map on
// top-degree monomials. Everything in degree above top_degree is zero.
//
// Relations rewrite a monomial into a linear combination of lexicographically
// smaller monomials of the same degree; this keeps reduction terminating, and
// confluence is certified at construction by reducing every monomial of
// degree <= top_degree along all one-step choices.
class RingSpec {
public:
    using Monomial = std::vector<int>;  // exponent per generator
    using Element = std::map<Monomial, Int>;

    struct Generator {
        std::string name;
        int degree;  // even
    };

    struct Relation {
        Monomial lhs;
        Element rhs;
    };

    RingSpec(std::vector<Generator> generators, std::vector<Relation> relations,
             int top_degree, std::map<Monomial, Int> degree_map);

    const std::vector<Generator>& generators() const { return generators_; }
    int top_degree() const { return top_degree_; }
    int generator_index(const std::string& name) const;
    int monomial_degree(const Monomial& m) const;

    // Normal form of a single monomial (precomputed at construction).
    const Element& normal_form(const Monomial& m) const;

    const std::map<Monomial, Int>& degree_map() const { return degree_map_; }

    std::string monomial_to_string(const Monomial& m) const;

private:
    void validate_and_index();

    std::vector<Generator> generators_;
    std::vector<Relation> relations_;
    int top_degree_;
    std::map<Monomial, Int> degree_map_;
    std::map<Monomial, Element> normal_forms_;
    Element zero_;
};

// Exact linear combination of reduced monomials of one RingSpec; stored in
// normal form at all times.
class RingElement {
public:
    RingElement() = default;
    explicit RingElement(const RingSpec* ring) : ring_(ring) {}

    static RingElement zero(const RingSpec& ring);
    static RingElement one(const RingSpec& ring);
    static RingElement generator(const RingSpec& ring, const std::string& name);
    static RingElement from_terms(const RingSpec& ring, const RingSpec::Element& terms);

    const RingSpec* ring() const { return ring_; }
    const RingSpec::Element& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Homogeneous degree; std::nullopt for 0, error if mixed.
    std::optional<int> degree() const;

    RingElement operator+(const RingElement& rhs) const;
    RingElement operator-(const RingElement& rhs) const;
    RingElement operator*(const RingElement& rhs) const;
    RingElement operator*(const Int& s) const;
    RingElement operator-() const;
    bool operator==(const RingElement& rhs) const;

    std::string to_string() const;

private:
    const RingSpec* ring_ = nullptr;
    RingSpec::Element terms_;
};

// Idempotent normal form under the relation rewriting; elements are kept
// reduced, so this re-reduces the raw term map (used by tests and loaders).
RingElement ring_reduce(const RingSpec& ring, const RingSpec::Element& raw_terms);

// Integration over the fundamental class: exact integer value of a
// homogeneous top-degree element. Throws DegreeMismatch for elements off the
// top degree or monomials without an assigned degree.
Int ring_degree(const RingElement& e);

// Chern classes c_1..c_rank of a vector bundle, each homogeneous of degree 2i.
struct ChernVector {
    int rank = 0;
    std::vector<RingElement> c;

    static ChernVector trivial(const RingSpec& ring, int rank);
    const RingElement& at(int i) const;  // c_i, 1-based

    void validate() const;
};

// Chern classes of F (x) L from those of F and c_1(L) = l.
ChernVector chern_twist(const ChernVector& cv, const RingElement& l);

// Whitney sum: c(F (+) G).
ChernVector whitney_product(const ChernVector& total, const ChernVector& extra);

// c(total)/c(sub), truncated at rank total.rank - sub.rank.
ChernVector whitney_quotient(const ChernVector& total, const ChernVector& sub);

// Self-intersection of a Lagrangian subvariety: its normal bundle is its
// cotangent bundle, so the number is the signed Euler characteristic.
Int lagrangian_self_intersection(const Int& euler_char, int dim);

// Intersection of the zero section with the closed conormal cycle of the
// ordinary-double-point member of a pencil of hypersurfaces in an n-fold:
// (-1)^{n-1} e(general member) - 2 (number of nodes).
Int lefschetz_pencil_correction(const Int& euler_general, const Int& num_nodes, int dim_ambient);

// Pushforward of a self-intersection down a blow-up with num_centers
// exceptional corrections of per_center each.
Int blowup_selfintersection_correction(const Int& hat_self, const Int& per_center,
                                       const Int& num_centers);

struct IntersectionMatrix {
    std::array<std::array<Int, 4>, 4> m;
    int rank;
    static const std::array<const char*, 4> basis;
};

// Collects pairwise intersection numbers; both orders of an off-diagonal
// entry may be assigned and must agree.
class IntersectionMatrixBuilder {
public:
    IntersectionMatrixBuilder& set(int i, int j, Int value);
    IntersectionMatrix build() const;

private:
    std::map<std::pair<int, int>, Int> entries_;
};

// The matrix in the basis fibre, N~, Omega~, K: the fibre row and column
// vanish (a fibre can always be displaced), the rest is filled from the
// six pairwise numbers, and the rank comes from exact row reduction.
IntersectionMatrix assemble_intersection_matrix(const Int& n_self, const Int& n_omega,
                                                const Int& n_k, const Int& omega_self,
                                                const Int& omega_k, const Int& k_self);

// Exact row-reduction rank of an integer matrix.
int matrix_rank(const std::vector<std::vector<Int>>& m);

} // namespace pwcalc
