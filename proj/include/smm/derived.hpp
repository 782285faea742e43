#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "smm/rep.hpp"

namespace smm {

// Indecomposable object: catalog id placed at a shift.
struct Term {
    std::size_t id = 0;
    int shift = 0;
    auto operator<=>(const Term&) const = default;
};

// Object of a triangulated model as a sorted multiset of indecomposable terms.
using DObject = std::vector<Term>;

DObject normalized(DObject d);

// components[i][j]: coordinates of the component source[j] -> target[i] in the graded Hom basis.
struct DMorphism {
    DObject source;
    DObject target;
    std::vector<std::vector<std::vector<Scalar>>> components;
};

// Minimal approximation data. Right: sum(summands) -> object. Left: object -> sum(summands).
struct Approximation {
    Term object;
    DObject summands;
    std::vector<std::vector<Scalar>> components;  // per summand, Hom coordinates
    DObject cone;      // right: cone(summands -> object); left: cone(object -> summands)
    bool verified = false;  // the approximation property was checked against every candidate
};

struct TermClosure {
    std::vector<Term> members;
    bool capped = false;
};

// Bounded derived category of a hereditary abelian category of quiver representations
// (path algebra of an acyclic quiver, or nilpotent representations). Modules are catalogued
// lazily; Hom(M[a], N[b]) is Hom(M,N) for b = a, Ext^1(M,N) for b = a + 1, zero otherwise.
class DerivedEngine {
public:
    DerivedEngine(AlgebraSpec alg, Scalar p, std::uint64_t seed);

    const AlgebraSpec& algebra() const { return alg_; }
    const Quiver& quiver() const { return alg_.quiver; }
    Scalar modulus() const { return p_; }
    std::mt19937_64& rng() { return rng_; }

    std::size_t module_count() const { return modules_.size(); }
    const Representation& module(std::size_t id) const { return modules_.at(id); }
    std::optional<std::size_t> find(const Representation& r);
    std::size_t find_or_add(const Representation& r);  // r must be indecomposable
    // Decomposes r and registers every summand; result repeated by multiplicity.
    std::vector<std::size_t> register_summands(const Representation& r);

    std::size_t hom_dim(Term a, Term b);
    const std::vector<RepMorphism>& hom_basis_of(std::size_t a, std::size_t b);
    const ExtSpace& ext_space(std::size_t a, std::size_t b);
    RepMorphism hom_element(std::size_t a, std::size_t b, const std::vector<Scalar>& coords);
    std::vector<Scalar> hom_coordinates(std::size_t a, std::size_t b, const RepMorphism& f);

    // g o f for f: x -> y, g: y -> z in graded coordinates.
    std::vector<Scalar> compose(Term x, Term y, Term z, const std::vector<Scalar>& g, const std::vector<Scalar>& f);
    // Basis of the radical rad(a, b) in coordinates of Hom(a, b).
    const std::vector<std::vector<Scalar>>& radical(Term a, Term b);

    DObject cone(const DMorphism& f);

    Approximation right_approximation(Term d, const std::vector<Term>& candidates);
    Approximation left_approximation(Term d, const std::vector<Term>& candidates);
    // Cone of the full evaluation map (right) or coevaluation map (left) over the candidates.
    DObject evaluation_cone(Term d, const std::vector<Term>& candidates, bool right);
    // Drops summands that are redundant for the approximation property (lowest index first).
    Approximation minimize_right(const Approximation& a);

    // Extension closure of Hom-orthogonal bricks; summands with cyclic length above cap are dropped.
    TermClosure extension_closure(const std::vector<Term>& gens, std::size_t cap, std::size_t max_members = 400);

    std::size_t length(std::size_t id) const { return modules_.at(id).total_dim(); }
    std::size_t cyclic_length(std::size_t id) const;

private:
    struct PairCache {
        bool hom_ready = false;
        std::vector<RepMorphism> hom;
        HomCoordinates coords;
        std::optional<ExtSpace> ext;
    };
    PairCache& pair(std::size_t a, std::size_t b);
    const std::vector<std::vector<Scalar>>& basis_products(Term x, Term y, Term z);

    AlgebraSpec alg_;
    Scalar p_;
    std::mt19937_64 rng_;
    std::vector<Representation> modules_;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_dims_;
    std::map<std::pair<std::size_t, std::size_t>, PairCache> pairs_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, int, int>, std::vector<std::vector<Scalar>>> products_;
    std::map<std::pair<Term, Term>, std::vector<std::vector<Scalar>>> radicals_;
};

}  // namespace smm
