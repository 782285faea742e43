#pragma once

#include <map>
#include <optional>
#include <vector>

#include "smm/simple_minded.hpp"

namespace smm {

// Simple-minded reduction Z at S, materialized as a windowed member list with the <1> and <-1> tables.
struct ReductionContext {
    std::vector<Term> s;
    CollectionKind kind = CollectionKind::SMC;
    int w = 0;
    std::vector<Term> members;  // catalog objects of Z, S excluded
    std::map<Term, Term> up;    // z -> z<1> where z<1> is again a listed member
    std::map<Term, Term> down;  // z -> z<-1>
    Verdict setup;
};

// Throws RepError("SetupFails") when the setup does not hold.
ReductionContext reduce(Workbench& wb, const std::vector<Term>& s, CollectionKind kind, int w);
bool in_reduction(Workbench& wb, const std::vector<Term>& s, CollectionKind kind, int w, Term d);
bool in_reduction(Workbench& wb, const ReductionContext& ctx, Term d);

// z<1> = cone(s_z -> z[1]) and z<-1> = cocone(z[-1] -> s^z), both from evaluation maps out of (into) <S>.
DObject z_shift(Workbench& wb, const ReductionContext& ctx, Term z);
DObject z_unshift(Workbench& wb, const ReductionContext& ctx, Term z);

// Orthogonality axioms of an SMC or w-SMS evaluated inside Z, with Hom from D and the shift <1>.
Verdict check_orthogonality_in_reduction(Workbench& wb, const ReductionContext& ctx, const std::vector<Term>& a,
                                         int depth = 3);

// rho_S(U) minus S equals (U minus S)<1>, and lambda_S(U) minus S equals (U minus S)<-1>.
Verdict verify_reduce_shift_lift(Workbench& wb, const Collection& u, const std::vector<std::size_t>& subset);

struct IterationTrace {
    std::vector<Collection> steps;  // steps[0] = U
    std::vector<Verdict> verdicts;  // axioms of steps[1..]
    std::optional<std::size_t> period;
    std::optional<std::size_t> cycle_start;
    bool aborted = false;
    std::optional<MutationResult> failure;
};

IterationTrace iterate_mutation(Workbench& wb, const Collection& u, const std::vector<std::size_t>& subset,
                                Direction dir, std::size_t n);

}  // namespace smm
