#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smm/simple_minded.hpp"

namespace smm {

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);
    Rational operator+(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator-() const { return Rational(-num, den); }
    bool operator==(const Rational& o) const = default;
    int sign() const { return (num > 0) - (num < 0); }
    std::string to_string() const;
};

struct Charge {
    Rational x;
    Rational y;
    bool operator==(const Charge& o) const = default;
};

// True for (y > 0) or (y = 0, x < 0).
bool in_upper_half_plane(const Charge& z);
// Sign of phase(a) - phase(b) for charges in the upper half plane.
int compare_phase(const Charge& a, const Charge& b);
// Phase in units of pi, for display only.
double phase_value(const Charge& z);

// Charges of the members of a collection (the simples of its heart).
struct CentralCharge {
    std::vector<Charge> values;
};

struct HNFactor {
    Representation rep;
    std::vector<long long> multiplicities;
    Charge charge;
};

struct HNFiltration {
    std::vector<HNFactor> factors;  // strictly decreasing phases
    bool inconclusive = false;
};

struct Subobject {
    std::vector<FieldMatrix> basis;  // per vertex columns
    std::vector<std::size_t> dims;
};

// Stability data on a heart equal to a shifted category of modules (the collection is the vertex simples).
class HeartStability {
public:
    HeartStability(Workbench& wb, const Collection& u, CentralCharge z);

    bool supported() const { return supported_; }
    int heart_shift() const { return shift_; }
    std::vector<long long> multiplicities(const std::vector<std::size_t>& dims) const;
    Charge charge(const std::vector<std::size_t>& dims) const;
    Charge charge(Term h) const;

    std::vector<Subobject> subobjects(const Representation& h);
    HNFiltration hn_filtration(const Representation& h);
    bool semistable(const Representation& h);

private:
    Workbench& wb_;
    DerivedEngine* engine_ = nullptr;
    std::vector<std::size_t> vertex_of_member_;
    CentralCharge z_;
    int shift_ = 0;
    bool supported_ = false;
    std::vector<std::size_t> heart_modules_;
};

struct PhaseGapResult {
    Verdict verdict;
    std::optional<Charge> phi;           // charge realizing the maximal phase below 1
    std::vector<Term> family;            // approaching-1 family for Fails
    std::vector<Charge> family_charges;
};

PhaseGapResult phase_gap_check(Workbench& wb, const Collection& u, const std::vector<std::size_t>& subset);
CentralCharge canonical_charge(const Collection& u, const std::vector<std::size_t>& subset);

// Scatter plot of charges with labels.
std::string charge_svg(const std::vector<std::pair<std::string, Charge>>& points);

}  // namespace smm
