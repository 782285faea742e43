#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smm/derived.hpp"

namespace smm {

enum class ModelKind { DerivedHereditary, OrbitCY, TubeDerived, NilDerived };

std::string to_string(ModelKind k);
ModelKind model_kind_from_string(const std::string& s);

struct ModelConfig {
    ModelKind kind = ModelKind::DerivedHereditary;
    std::string preset;  // a_n, orbit, tube, ky-counterexample, or empty for a custom quiver
    std::optional<Quiver> quiver;
    std::size_t n = 0;     // A_n rank (a_n, orbit)
    std::size_t w = 0;     // orbit Calabi-Yau parameter
    std::size_t rank = 0;  // tube rank
    std::optional<std::size_t> truncation;
    int window_lo = -2;
    int window_hi = 2;
    std::size_t cap = 6;  // bound on composition factors at cyclic vertices
    Scalar p = kDefaultModulus;
    std::uint64_t seed = 20240601;
    bool operator==(const ModelConfig&) const = default;
};

struct ArNode {
    Term term;
    double x = 0;
    double y = 0;
};

struct ArLayout {
    std::vector<ArNode> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> arrows;  // indices into nodes
};

// Uniform interface to a computable triangulated category with a finite (windowed) catalog.
class CategoryModel {
public:
    explicit CategoryModel(ModelConfig cfg) : cfg_(std::move(cfg)) {}
    virtual ~CategoryModel() = default;

    const ModelConfig& config() const { return cfg_; }
    ModelKind kind() const { return cfg_.kind; }
    Scalar modulus() const { return cfg_.p; }
    std::size_t cap() const { return cfg_.cap; }

    // Catalog of indecomposables (window shifts, cap-bounded).
    virtual std::vector<Term> enumerate() = 0;
    virtual Term shift(Term t, int k) const = 0;
    virtual std::string label(Term t) const = 0;
    virtual Term parse(const std::string& s) = 0;
    virtual std::size_t length(Term t) const = 0;
    virtual std::size_t cyclic_length(Term t) const = 0;
    // True when the indecomposables form infinite families bounded only by the cap.
    virtual bool capped_family() const = 0;
    // Class in K_0 (dimension vector with sign (-1)^shift); empty when not available.
    virtual std::vector<long long> k0(Term t) const = 0;

    virtual std::size_t hom_dim(Term a, Term b) = 0;
    virtual std::vector<Scalar> compose(Term x, Term y, Term z, const std::vector<Scalar>& g,
                                        const std::vector<Scalar>& f) = 0;
    virtual DObject cone(const DMorphism& f) = 0;

    virtual bool has_serre() const = 0;
    virtual Term serre(Term t) = 0;
    virtual Term tau(Term t) = 0;
    // w when the model is (-w)-Calabi-Yau.
    virtual std::optional<int> calabi_yau() const { return std::nullopt; }

    virtual Approximation right_approximation(Term d, const std::vector<Term>& candidates) = 0;
    virtual Approximation left_approximation(Term d, const std::vector<Term>& candidates) = 0;
    virtual Approximation minimize(const Approximation& a) = 0;
    virtual TermClosure extension_closure(const std::vector<Term>& gens, std::size_t cap) = 0;
    // Cone of the evaluation map sum L^{Hom(L,d)} -> d (right) or d -> sum L^{Hom(d,L)} (left).
    virtual DObject evaluation_cone(Term d, const std::vector<Term>& candidates, bool right) = 0;

    virtual ArLayout layout() = 0;
    // Underlying hereditary engine (null for orbit models).
    virtual DerivedEngine* engine() { return nullptr; }

    std::string label(const DObject& d) const;
    DObject shift(const DObject& d, int k) const;

protected:
    ModelConfig cfg_;
};

// Bounded derived category of a hereditary category of quiver representations.
class HereditaryModel : public CategoryModel {
public:
    explicit HereditaryModel(ModelConfig cfg);

    std::vector<Term> enumerate() override;
    Term shift(Term t, int k) const override { return {t.id, t.shift + k}; }
    std::string label(Term t) const override;
    Term parse(const std::string& s) override;
    std::size_t length(Term t) const override { return engine_.length(t.id); }
    std::size_t cyclic_length(Term t) const override { return engine_.cyclic_length(t.id); }
    bool capped_family() const override { return quiver().has_oriented_cycle(); }
    std::vector<long long> k0(Term t) const override;

    std::size_t hom_dim(Term a, Term b) override { return engine_.hom_dim(a, b); }
    std::vector<Scalar> compose(Term x, Term y, Term z, const std::vector<Scalar>& g,
                                const std::vector<Scalar>& f) override
    {
        return engine_.compose(x, y, z, g, f);
    }
    DObject cone(const DMorphism& f) override { return engine_.cone(f); }

    bool has_serre() const override;
    Term serre(Term t) override;
    Term tau(Term t) override;

    Approximation right_approximation(Term d, const std::vector<Term>& c) override
    {
        return engine_.right_approximation(d, c);
    }
    Approximation left_approximation(Term d, const std::vector<Term>& c) override
    {
        return engine_.left_approximation(d, c);
    }
    Approximation minimize(const Approximation& a) override { return engine_.minimize_right(a); }
    TermClosure extension_closure(const std::vector<Term>& gens, std::size_t cap) override
    {
        // Closures over algebras with oriented cycles are truncated anyway; bound their size.
        return engine_.extension_closure(gens, cap, quiver().has_oriented_cycle() ? 2 * seeded_ + 8 : 400);
    }
    DObject evaluation_cone(Term d, const std::vector<Term>& c, bool right) override
    {
        return engine_.evaluation_cone(d, c, right);
    }

    ArLayout layout() override;
    DerivedEngine* engine() override { return &engine_; }

    const Quiver& quiver() const { return engine_.quiver(); }
    std::string module_label(std::size_t id) const;
    // Module given by its top-first composition series of vertex names, if uniserial along unique arrows.
    std::optional<std::size_t> uniserial_by_series(const std::vector<std::string>& series);

private:
    void seed_catalog();
    std::optional<std::vector<std::size_t>> series_of(std::size_t id) const;

    DerivedEngine engine_;
    std::size_t seeded_ = 0;
};

// D^b(A_n)/F with F = Serre[w] = tau[w+1]; indecomposables in Auslander-Reiten coordinates.
class OrbitModel : public CategoryModel {
public:
    explicit OrbitModel(ModelConfig cfg);

    std::vector<Term> enumerate() override;
    Term shift(Term t, int k) const override;
    std::string label(Term t) const override;
    Term parse(const std::string& s) override;
    std::size_t length(Term t) const override;
    std::size_t cyclic_length(Term) const override { return 0; }
    bool capped_family() const override { return false; }
    std::vector<long long> k0(Term) const override { return {}; }

    std::size_t hom_dim(Term a, Term b) override;
    std::vector<Scalar> compose(Term, Term, Term, const std::vector<Scalar>&, const std::vector<Scalar>&) override;
    DObject cone(const DMorphism& f) override;

    bool has_serre() const override { return true; }
    Term serre(Term t) override;
    Term tau(Term t) override;
    std::optional<int> calabi_yau() const override { return static_cast<int>(cfg_.w); }

    Approximation right_approximation(Term d, const std::vector<Term>& c) override;
    Approximation left_approximation(Term d, const std::vector<Term>& c) override;
    Approximation minimize(const Approximation& a) override;
    TermClosure extension_closure(const std::vector<Term>& gens, std::size_t cap) override;
    DObject evaluation_cone(Term d, const std::vector<Term>& c, bool right) override;

    ArLayout layout() override;

    std::size_t class_count() const { return classes_.size(); }
    // Auslander-Reiten coordinates (k, y) with x = k + y/2.
    std::pair<long, long> coords(Term t) const { return classes_.at(t.id); }
    Term from_coords(long k, long y) const;
    Term project(Term cover) const;
    Term lift(Term t) const;
    DerivedEngine& cover() { return cover_; }
    Term apply_f(Term cover, int times) const;

private:
    using Za = std::pair<long, long>;
    Za shift_za(Za c, int k) const;
    Za f_za(Za c, int times) const;
    Za canonical(Za c) const;
    Term cover_term(Za c) const;
    Za cover_za(Term t) const;
    std::vector<Term> cover_candidates(Term d_lift, const std::vector<Term>& c);
    Approximation project(const Approximation& a) const;

    DerivedEngine cover_;
    std::vector<Za> classes_;
    std::map<Za, std::size_t> class_index_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> interval_id_;  // (i,j) 1-based -> cover module
    std::vector<std::pair<std::size_t, std::size_t>> interval_of_;
    long period2_ = 0;  // change of 2k+y under F
    int radius_ = 3;
};

std::unique_ptr<CategoryModel> make_model(const ModelConfig& cfg);

ModelConfig preset_a_n(std::size_t n);
ModelConfig preset_orbit(std::size_t n, std::size_t w);
ModelConfig preset_tube(std::size_t r);
ModelConfig preset_ky(std::size_t cap = 8);
ModelConfig preset_by_name(const std::string& name, const std::vector<std::size_t>& args);

}  // namespace smm
