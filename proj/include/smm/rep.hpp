#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "smm/linalg.hpp"

namespace smm {

class RepError : public std::runtime_error {
public:
    RepError(std::string code, const std::string& msg) : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct Arrow {
    std::size_t source = 0;
    std::size_t target = 0;
    std::string name;
    bool operator==(const Arrow&) const = default;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t vertex_index(const std::string& name) const;
    bool has_oriented_cycle() const;
    // Vertices lying on some oriented cycle (loops included).
    std::vector<bool> cyclic_vertices() const;
    void validate() const;
    bool operator==(const Quiver&) const = default;
};

struct AlgebraSpec {
    Quiver quiver;
    std::optional<std::size_t> truncation;  // J^N = 0
    bool nilpotent = false;                  // objects are nilpotent representations
};

// Arrow a: i -> j acts by a dims[j] x dims[i] matrix.
struct Representation {
    std::vector<std::size_t> dims;
    std::vector<FieldMatrix> mats;
    Scalar p = kDefaultModulus;

    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    bool operator==(const Representation&) const = default;

    static Representation zero(const Quiver& q, Scalar p = kDefaultModulus);
    static Representation simple(const Quiver& q, std::size_t vertex, Scalar p = kDefaultModulus);
    void validate(const Quiver& q) const;
};

Representation direct_sum(const Quiver& q, const Representation& a, const Representation& b);

struct RepMorphism {
    Representation source;
    Representation target;
    std::vector<FieldMatrix> blocks;  // per vertex: target dim x source dim

    bool is_zero() const;
    bool commutes(const Quiver& q) const;
    static RepMorphism zero(const Representation& m, const Representation& n);
    static RepMorphism identity(const Representation& m);
};

RepMorphism compose(const RepMorphism& g, const RepMorphism& f);  // g after f
RepMorphism combine(const std::vector<RepMorphism>& basis, const std::vector<Scalar>& coeffs,
                    const Representation& m, const Representation& n);
// Total matrix of an endomorphism-like map, block diagonal over vertices.
FieldMatrix total_matrix(const RepMorphism& f);
bool is_isomorphism(const RepMorphism& f);

// A 1-cocycle for Ext^1(M, N): per arrow a: i -> j, a dims_N[j] x dims_M[i] matrix.
using Cocycle = std::vector<FieldMatrix>;

std::vector<RepMorphism> hom_basis(const Quiver& q, const Representation& m, const Representation& n);
std::size_t hom_dim(const Quiver& q, const Representation& m, const Representation& n);

// Coordinates of a morphism in a given Hom basis.
class HomCoordinates {
public:
    HomCoordinates() = default;
    HomCoordinates(const std::vector<RepMorphism>& basis, std::size_t flat_size, Scalar p);
    std::vector<Scalar> operator()(const RepMorphism& f) const;
    std::size_t dim() const { return dim_; }

private:
    std::size_t dim_ = 0;
    FieldMatrix left_inv_;
};

std::vector<Scalar> flatten(const std::vector<FieldMatrix>& blocks);

class ExtSpace {
public:
    ExtSpace() = default;
    ExtSpace(const Quiver& q, const Representation& m, const Representation& n);

    std::size_t dim() const { return free_.size(); }
    const Representation& source() const { return m_; }
    const Representation& target() const { return n_; }

    std::vector<Scalar> coordinates(const Cocycle& xi) const;
    Cocycle cocycle(const std::vector<Scalar>& coords) const;
    Cocycle basis_cocycle(std::size_t k) const;
    bool is_split(const Cocycle& xi) const { return is_zero_vector(coordinates(xi)); }

private:
    std::vector<Scalar> flat(const Cocycle& xi) const;
    Cocycle unflat(const std::vector<Scalar>& v) const;

    Quiver q_;
    Representation m_, n_;
    std::vector<std::size_t> offset_;  // per arrow offset in the flat cocycle space
    std::size_t size_ = 0;
    std::vector<std::vector<Scalar>> image_rows_;  // rref rows of im(delta)
    std::vector<std::size_t> image_pivots_;
    std::vector<std::size_t> free_;                // positions spanning a complement
};

struct ExtClass {
    Representation source;  // M
    Representation target;  // N
    std::vector<Scalar> coords;
};

ExtSpace ext1(const AlgebraSpec& alg, const Representation& m, const Representation& n);
std::size_t ext1_dim(const Quiver& q, const Representation& m, const Representation& n);

struct ShortExact {
    Representation middle;
    RepMorphism inclusion;   // N -> E
    RepMorphism projection;  // E -> M
};

ShortExact middle_term(const Quiver& q, const Representation& m, const Representation& n, const Cocycle& xi);
ShortExact middle_term(const Quiver& q, const ExtSpace& space, const std::vector<Scalar>& coords);

// Yoneda actions on cocycles.
Cocycle pushforward(const Quiver& q, const RepMorphism& g, const Cocycle& xi);  // N -> N'
Cocycle pullback(const Quiver& q, const Cocycle& xi, const RepMorphism& f);     // M' -> M

struct Factorization {
    Representation kernel;
    RepMorphism kernel_inclusion;
    Representation image;
    RepMorphism image_inclusion;
    Representation cokernel;
    RepMorphism cokernel_projection;
};

Factorization factor_morphism(const Quiver& q, const RepMorphism& f);

// Subrepresentation spanned by the columns of per-vertex matrices (must be arrow-stable).
Representation subrepresentation(const Quiver& q, const Representation& m, const std::vector<FieldMatrix>& columns);
// Quotient by per-vertex projections with full row rank (kernel must be arrow-stable).
Representation quotient_representation(const Quiver& q, const Representation& m, const std::vector<FieldMatrix>& proj);

struct EndRadical {
    std::vector<RepMorphism> end_basis;
    std::vector<RepMorphism> radical_basis;
    bool nilpotency_certified = false;
};

EndRadical end_radical(const Quiver& q, const Representation& m);

struct Summand {
    Representation rep;
    std::size_t multiplicity = 1;
};

std::vector<Representation> decompose_flat(const Quiver& q, const Representation& m, std::mt19937_64& rng);
std::vector<Summand> decompose(const Quiver& q, const Representation& m, std::mt19937_64& rng);
bool is_indecomposable(const Quiver& q, const Representation& m);
bool is_isomorphic(const Quiver& q, const Representation& a, const Representation& b, std::mt19937_64& rng);
bool is_brick(const Quiver& q, const Representation& m);

std::size_t loewy_length(const Quiver& q, const Representation& m);
bool is_nilpotent(const Quiver& q, const Representation& m);
// Number of composition factors at vertices on oriented cycles.
std::size_t cyclic_length(const Quiver& q, const Representation& m);

struct ClosureResult {
    std::vector<Representation> members;
    bool capped = false;
};

ClosureResult extension_closure(const AlgebraSpec& alg, const std::vector<Representation>& gens, std::size_t cap,
                                std::mt19937_64& rng);

// Uniserial nilpotent representation along a walk of arrows; top at walk[0].
// path lists arrow indices a_1,...,a_{l-1} with source(a_1) = top.
Representation uniserial(const Quiver& q, std::size_t top, const std::vector<std::size_t>& path,
                         Scalar p = kDefaultModulus);
// Indecomposable projective of an acyclic quiver (paths starting at v).
Representation projective(const Quiver& q, std::size_t v, Scalar p = kDefaultModulus);

}  // namespace smm
