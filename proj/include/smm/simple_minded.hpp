#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smm/model.hpp"

namespace smm {

enum class VerdictStatus { Holds, Fails, Inconclusive };
std::string to_string(VerdictStatus s);

struct Verdict {
    VerdictStatus status = VerdictStatus::Holds;
    std::vector<Term> witness;  // finite witness for Fails (objects to re-check independently)
    std::string notes;
    int window_lo = 0;
    int window_hi = 0;
    std::size_t cap = 0;

    bool holds() const { return status == VerdictStatus::Holds; }
    bool fails() const { return status == VerdictStatus::Fails; }
};

enum class CollectionKind { SMC, WSMS };
enum class Direction { Right, Left };
std::string to_string(CollectionKind k);
std::string to_string(Direction d);
Direction direction_from_string(const std::string& s);

// source -> object -> cone -> source[1] (right); object -> source -> cone -> object[1] (left).
struct Triangle {
    DObject source;
    Term object;
    DObject cone;
};

struct MutationStep {
    Direction direction = Direction::Right;
    std::vector<std::size_t> subset;
    std::vector<Triangle> triangles;
};

struct Collection {
    std::vector<Term> members;
    CollectionKind kind = CollectionKind::SMC;
    int w = 0;  // for w-SMS
    std::vector<MutationStep> history;
};

enum class ApproxStatus { Found, NotFound, Diverging };
std::string to_string(ApproxStatus s);

struct ApproxResult {
    ApproxStatus status = ApproxStatus::Found;
    Approximation approx;
    // Boundary summands of the truncated approximations for growing caps, with their cones.
    std::vector<Term> chain;
    std::vector<DObject> chain_cones;
    std::size_t cap = 0;
};

struct MutationResult {
    bool ok = false;
    Collection result;               // rho_S(U) or lambda_S(U) as defined by the approximation triangles
    std::optional<Collection> normalized;  // SMC only: result shifted by [-1] (right) or [1] (left)
    Verdict axioms;
    std::optional<std::size_t> missing;  // member whose approximation is missing
    ApproxResult evidence;
};

struct TorsionPairSpec {
    std::vector<Term> heart;
    std::vector<Term> torsion;
    std::vector<Term> torsionfree;
    Verdict verdict;
};

struct TiltResult {
    std::vector<Term> simples;
    TorsionPairSpec pair;
    Verdict checks;
};

struct Theorem1Report {
    std::array<Verdict, 6> conditions;
    bool consistent = true;
};

struct AdjacencyReport {
    Verdict silting;
    Verdict cosilting;
    std::vector<Term> aisle;
    std::vector<Term> coaisle;
    std::vector<Term> projective_coheart;
    std::vector<Term> injective_coheart;
};

enum class OrthMode { Semibrick, W, Infinity };

// Computations with collections over a fixed category model; caches closures and approximations.
class Workbench {
public:
    explicit Workbench(CategoryModel& m);

    CategoryModel& model() { return model_; }
    std::vector<Term> catalog();
    Verdict base_verdict() const;

    const TermClosure& closure(std::vector<Term> gens);
    bool in_closure(const std::vector<Term>& gens, Term t);

    ApproxResult approximate(Term d, const std::vector<Term>& candidates, Direction dir);
    ApproxResult right_approximation(Term d, const std::vector<Term>& s);
    ApproxResult left_approximation(Term d, const std::vector<Term>& s);

    Verdict check_orthogonality(const Collection& u, OrthMode mode);
    Verdict check_generation(const Collection& u);
    Verdict check_collection(const Collection& u);
    // Filtration layers of d by shifts of <U>: layer index -> approximation source. Empty optional when
    // the filtration does not exist; inconclusive set when a layer approximation was not certified.
    std::optional<std::map<int, DObject>> filtration(Term d, const Collection& u, bool& inconclusive);

    MutationResult mutate(const Collection& u, const std::vector<std::size_t>& subset, Direction dir);
    TorsionPairSpec torsion_pair(const Collection& u, const std::vector<std::size_t>& subset);
    TiltResult simple_tilt(const Collection& u, const std::vector<std::size_t>& subset, Direction dir);
    Theorem1Report check_theorem1(const Collection& u, const std::vector<std::size_t>& subset);
    Verdict check_setup(const std::vector<Term>& s, CollectionKind kind, int w);
    Verdict check_mutation_pair(const std::vector<Term>& a, const std::vector<Term>& b, const std::vector<Term>& s);
    AdjacencyReport check_adjacency(const Collection& u);

    std::vector<Term> subset_terms(const Collection& u, const std::vector<std::size_t>& subset) const;
    bool is_heart_mono(Term sub, Term whole, const std::vector<Term>& heart_set);

private:
    std::pair<int, int> hom_range(const std::vector<Term>& a, const std::vector<Term>& b) const;

    CategoryModel& model_;
    std::map<std::vector<Term>, TermClosure> closures_;
    std::map<std::tuple<Term, std::vector<Term>, int>, ApproxResult> approx_cache_;
    std::optional<std::vector<Term>> catalog_;
};

Collection standard_collection(CategoryModel& m, int shift = 0);
std::vector<std::vector<std::size_t>> all_subsets(std::size_t n);

}  // namespace smm
