#include "smm/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

namespace smm {

std::string to_string(ModelKind k)
{
    switch (k) {
    case ModelKind::DerivedHereditary: return "DerivedHereditary";
    case ModelKind::OrbitCY: return "OrbitCY";
    case ModelKind::TubeDerived: return "TubeDerived";
    case ModelKind::NilDerived: return "NilDerived";
    }
    return "?";
}

ModelKind model_kind_from_string(const std::string& s)
{
    for (auto k : {ModelKind::DerivedHereditary, ModelKind::OrbitCY, ModelKind::TubeDerived, ModelKind::NilDerived})
        if (to_string(k) == s) return k;
    throw RepError("InvalidModel", "unknown model kind '" + s + "'");
}

std::string CategoryModel::label(const DObject& d) const
{
    if (d.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += " + ";
        s += label(d[i]);
    }
    return s;
}

DObject CategoryModel::shift(const DObject& d, int k) const
{
    DObject out;
    for (const auto& t : d) out.push_back(shift(t, k));
    return normalized(out);
}

namespace {

std::string shift_suffix(int s)
{
    return s == 0 ? "" : "[" + std::to_string(s) + "]";
}

// Splits a trailing "[k]" shift off an object name.
std::pair<std::string, int> split_shift(std::string s)
{
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (!s.empty() && s.back() == ']') {
        auto open = s.rfind('[');
        if (open != std::string::npos && open > 0) {
            std::string inner = s.substr(open + 1, s.size() - open - 2);
            bool numeric = !inner.empty() &&
                           std::all_of(inner.begin() + (inner[0] == '-' || inner[0] == '+'), inner.end(),
                                       [](unsigned char c) { return std::isdigit(c); }) &&
                           inner != "-" && inner != "+";
            if (numeric) return {s.substr(0, open), std::stoi(inner)};
        }
    }
    return {s, 0};
}

std::optional<std::size_t> parse_index(const std::string& s, const std::string& prefix)
{
    if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    std::string rest = s.substr(prefix.size());
    if (!std::all_of(rest.begin(), rest.end(), [](unsigned char c) { return std::isdigit(c); })) return std::nullopt;
    return std::stoul(rest);
}

Quiver linear_quiver(std::size_t n)
{
    Quiver q;
    for (std::size_t i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    for (std::size_t i = 0; i + 1 < n; ++i) q.arrows.push_back({i, i + 1, "a" + std::to_string(i + 1)});
    return q;
}

// Cyclic quiver with arrows i -> i-1.
Quiver cyclic_quiver(std::size_t r)
{
    Quiver q;
    for (std::size_t i = 1; i <= r; ++i) q.vertices.push_back(std::to_string(i));
    for (std::size_t i = 0; i < r; ++i) q.arrows.push_back({i, (i + r - 1) % r, "a" + std::to_string(i + 1)});
    return q;
}

Quiver loop_quiver()
{
    return Quiver{{"1", "2"}, {{0, 0, "l"}, {0, 1, "b"}}};
}

AlgebraSpec algebra_for(const ModelConfig& cfg)
{
    Quiver q;
    if (cfg.preset == "a_n") q = linear_quiver(cfg.n);
    else if (cfg.preset == "tube") q = cyclic_quiver(cfg.rank);
    else if (cfg.preset == "ky-counterexample") q = loop_quiver();
    else if (cfg.quiver) q = *cfg.quiver;
    else throw RepError("InvalidModel", "model needs a preset or a quiver");
    q.validate();
    bool cyclic = q.has_oriented_cycle();
    if (cfg.kind == ModelKind::DerivedHereditary && cyclic)
        throw RepError("InvalidModel", "DerivedHereditary needs an acyclic quiver");
    return AlgebraSpec{q, cfg.truncation, cyclic};
}

// Per-vertex dimensions of rad^k M for k = 0, 1, ...
std::vector<std::vector<std::size_t>> radical_series(const Quiver& q, const Representation& m)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<FieldMatrix> layer;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) layer.push_back(FieldMatrix::identity(m.dims[v], m.p));
    for (std::size_t step = 0; step <= m.total_dim() + 1; ++step) {
        std::vector<std::size_t> d;
        std::size_t tot = 0;
        for (const auto& l : layer) {
            d.push_back(l.cols());
            tot += l.cols();
        }
        out.push_back(d);
        if (tot == 0) break;
        std::vector<FieldMatrix> next;
        for (std::size_t v = 0; v < q.vertex_count(); ++v) next.emplace_back(m.dims[v], 0, m.p);
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            const auto& ar = q.arrows[a];
            next[ar.target] = FieldMatrix::hstack(next[ar.target], m.mats[a] * layer[ar.source]);
        }
        for (auto& nx : next) nx = column_space_basis(nx);
        layer = std::move(next);
    }
    return out;
}

}  // namespace

HereditaryModel::HereditaryModel(ModelConfig cfg)
    : CategoryModel(std::move(cfg)), engine_(algebra_for(cfg_), cfg_.p, cfg_.seed)
{
    if (cfg_.preset == "tube") cfg_.kind = ModelKind::TubeDerived;
    if (cfg_.window_lo > cfg_.window_hi) throw RepError("InvalidModel", "empty shift window");
    seed_catalog();
}

void HereditaryModel::seed_catalog()
{
    const auto& q = quiver();
    const Scalar p = cfg_.p;
    if (cfg_.preset == "a_n") {
        for (std::size_t len = 1; len <= cfg_.n; ++len)
            for (std::size_t i = 0; i + len <= cfg_.n; ++i) {
                std::vector<std::size_t> path;
                for (std::size_t k = i; k + 1 < i + len; ++k) path.push_back(k);
                engine_.find_or_add(uniserial(q, i, path, p));
            }
    } else if (cfg_.preset == "tube") {
        const std::size_t r = cfg_.rank;
        for (std::size_t len = 1; len <= cfg_.cap; ++len)
            for (std::size_t t = 0; t < r; ++t) {
                std::vector<std::size_t> path;
                std::size_t v = t;
                for (std::size_t k = 1; k < len; ++k) {
                    path.push_back(v);  // arrow index v starts at vertex v
                    v = (v + r - 1) % r;
                }
                engine_.find_or_add(uniserial(q, t, path, p));
            }
    } else if (cfg_.preset == "ky-counterexample") {
        auto x = [&](std::size_t n) { return uniserial(q, 0, std::vector<std::size_t>(n - 1, 0), p); };
        auto m = [&](std::size_t n) {
            std::vector<std::size_t> path(n - 1, 0);
            path.push_back(1);
            return uniserial(q, 0, path, p);
        };
        engine_.find_or_add(x(1));
        engine_.find_or_add(Representation::simple(q, 1, p));
        for (std::size_t n = 1; n <= cfg_.cap; ++n) {
            engine_.find_or_add(m(n));
            if (n + 1 <= cfg_.cap) engine_.find_or_add(x(n + 1));
        }
    } else {
        std::vector<Representation> simples;
        for (std::size_t v = 0; v < q.vertex_count(); ++v) simples.push_back(Representation::simple(q, v, p));
        std::size_t bound = q.has_oriented_cycle() ? cfg_.cap * q.vertex_count() : 64;
        auto cl = smm::extension_closure(engine_.algebra(), simples, bound, engine_.rng());
        for (const auto& m : cl.members) engine_.find_or_add(m);
    }
    seeded_ = engine_.module_count();
}

std::vector<Term> HereditaryModel::enumerate()
{
    std::vector<Term> out;
    for (int s = cfg_.window_lo; s <= cfg_.window_hi; ++s)
        for (std::size_t id = 0; id < seeded_; ++id)
            if (engine_.cyclic_length(id) <= cfg_.cap) out.push_back({id, s});
    return out;
}

std::optional<std::vector<std::size_t>> HereditaryModel::series_of(std::size_t id) const
{
    const auto& m = engine_.module(id);
    auto rs = radical_series(quiver(), m);
    std::vector<std::size_t> series;
    for (std::size_t k = 0; k + 1 < rs.size(); ++k) {
        std::size_t vertex = 0, diff = 0;
        for (std::size_t v = 0; v < rs[k].size(); ++v)
            if (rs[k][v] != rs[k + 1][v]) {
                diff += rs[k][v] - rs[k + 1][v];
                vertex = v;
            }
        if (diff != 1) return std::nullopt;
        series.push_back(vertex);
    }
    if (series.size() != m.total_dim()) return std::nullopt;
    return series;
}

std::string HereditaryModel::module_label(std::size_t id) const
{
    const auto& q = quiver();
    if (cfg_.preset == "ky-counterexample" && id < seeded_) {
        if (id == 0) return "s1";
        if (id == 1) return "s2";
        const auto& m = engine_.module(id);
        std::size_t n = m.dims[0];
        return (m.dims[1] ? "m" : "x") + std::to_string(n);
    }
    auto series = series_of(id);
    if (!series) return "M" + std::to_string(id);
    if (series->size() == 1) return "s" + q.vertices[(*series)[0]];
    std::string s = "[";
    for (std::size_t k = 0; k < series->size(); ++k) {
        if (k) s += ";";
        s += "s" + q.vertices[(*series)[k]];
    }
    return s + "]";
}

std::string HereditaryModel::label(Term t) const
{
    return module_label(t.id) + shift_suffix(t.shift);
}

std::optional<std::size_t> HereditaryModel::uniserial_by_series(const std::vector<std::string>& series)
{
    const auto& q = quiver();
    if (series.empty()) return std::nullopt;
    std::vector<std::size_t> verts;
    for (const auto& s : series) {
        auto it = std::find(q.vertices.begin(), q.vertices.end(), s);
        if (it == q.vertices.end()) return std::nullopt;
        verts.push_back(static_cast<std::size_t>(it - q.vertices.begin()));
    }
    std::vector<std::size_t> path;
    for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
        std::optional<std::size_t> arrow;
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].source == verts[k] && q.arrows[a].target == verts[k + 1]) {
                if (arrow) return std::nullopt;
                arrow = a;
            }
        if (!arrow) return std::nullopt;
        path.push_back(*arrow);
    }
    auto rep = uniserial(q, verts[0], path, cfg_.p);
    if (!is_indecomposable(q, rep)) return std::nullopt;
    return engine_.find_or_add(rep);
}

Term HereditaryModel::parse(const std::string& text)
{
    auto [base, sh] = split_shift(text);
    const auto& q = quiver();
    auto fail = [&]() -> Term { throw RepError("UnknownObject", "cannot parse object '" + text + "'"); };
    if (auto id = parse_index(base, "M")) {
        if (*id >= engine_.module_count()) return fail();
        return {*id, sh};
    }
    if (cfg_.preset == "ky-counterexample") {
        for (std::size_t id = 0; id < seeded_; ++id)
            if (module_label(id) == base) return {id, sh};
        if (base == "x1") return {0, sh};
    }
    std::vector<std::string> series;
    if (base.size() > 2 && base.front() == '[' && base.back() == ']') {
        std::stringstream ss(base.substr(1, base.size() - 2));
        std::string item;
        while (std::getline(ss, item, ';')) {
            if (item.size() < 2 || (item[0] != 's' && item[0] != 'S')) return fail();
            series.push_back(item.substr(1));
        }
    } else if (base.size() >= 2 && (base[0] == 's' || base[0] == 'S')) {
        series.push_back(base.substr(1));
    } else if (base.size() >= 2 && (base[0] == 'P' || base[0] == 'I') && !q.has_oriented_cycle()) {
        auto it = std::find(q.vertices.begin(), q.vertices.end(), base.substr(1));
        if (it == q.vertices.end()) return fail();
        std::size_t v = static_cast<std::size_t>(it - q.vertices.begin());
        Representation r = projective(q, v, cfg_.p);
        if (base[0] == 'I') {
            // Injective: dual of the projective of the opposite quiver.
            Quiver op = q;
            for (auto& a : op.arrows) std::swap(a.source, a.target);
            Representation pr = projective(op, v, cfg_.p);
            r.dims = pr.dims;
            r.mats.clear();
            for (std::size_t a = 0; a < q.arrows.size(); ++a) r.mats.push_back(pr.mats[a].transpose());
        }
        return {engine_.find_or_add(r), sh};
    } else {
        return fail();
    }
    auto id = uniserial_by_series(series);
    if (!id) return fail();
    return {*id, sh};
}

std::vector<long long> HereditaryModel::k0(Term t) const
{
    std::vector<long long> v;
    long long sign = (t.shift % 2 == 0) ? 1 : -1;
    for (auto d : engine_.module(t.id).dims) v.push_back(sign * static_cast<long long>(d));
    return v;
}

bool HereditaryModel::has_serre() const
{
    return !quiver().has_oriented_cycle() || cfg_.preset == "tube";
}

Term HereditaryModel::serre(Term t)
{
    const auto& q = quiver();
    if (cfg_.preset == "tube") {
        Term tt = tau(t);
        return {tt.id, tt.shift + 1};
    }
    if (q.has_oriented_cycle())
        throw RepError("NoSerreFunctor", "this model has no Serre functor");
    // Serre(M) = N[s] with dim N_i = dim Hom(M, P_i[s]).
    for (int s = 0; s <= 1; ++s) {
        std::vector<std::size_t> dims;
        std::size_t tot = 0;
        for (std::size_t v = 0; v < q.vertex_count(); ++v) {
            std::size_t pid = engine_.find_or_add(projective(q, v, cfg_.p));
            dims.push_back(engine_.hom_dim({t.id, 0}, {pid, s}));
            tot += dims.back();
        }
        if (tot == 0) continue;
        std::optional<std::size_t> found;
        for (std::size_t id = 0; id < engine_.module_count(); ++id)
            if (engine_.module(id).dims == dims) {
                if (found) throw RepError("NoSerreFunctor", "dimension vector does not determine the Serre image");
                found = id;
            }
        if (!found) throw RepError("NoSerreFunctor", "Serre image is missing from the catalog");
        return {*found, t.shift + s};
    }
    throw RepError("InternalError", "Serre image vanishes");
}

Term HereditaryModel::tau(Term t)
{
    if (cfg_.preset == "tube") {
        auto series = series_of(t.id);
        if (!series) throw RepError("InternalError", "tube module is not uniserial");
        std::vector<std::string> rotated;
        const auto& q = quiver();
        for (auto v : *series) rotated.push_back(q.vertices[(v + cfg_.rank - 1) % cfg_.rank]);
        return {*uniserial_by_series(rotated), t.shift};
    }
    Term s = serre(t);
    return {s.id, s.shift - 1};
}

ArLayout HereditaryModel::layout()
{
    ArLayout out;
    auto terms = enumerate();
    std::map<std::tuple<long, long, long>, std::size_t> pos;  // key per preset
    if (cfg_.preset == "a_n") {
        const long n = static_cast<long>(cfg_.n);
        for (const auto& t : terms) {
            auto series = *series_of(t.id);
            long i = static_cast<long>(series.front()) + 1, j = static_cast<long>(series.back()) + 1;
            long k = n - j, y = j - i;
            for (int s = 0; s < t.shift; ++s) std::tie(k, y) = std::make_pair(k + y + 1, n - 1 - y);
            for (int s = 0; s > t.shift; --s) std::tie(k, y) = std::make_pair(k - n + y, n - 1 - y);
            pos[{k, y, 0}] = out.nodes.size();
            out.nodes.push_back({t, k + y / 2.0, static_cast<double>(y)});
        }
        for (const auto& [key, idx] : pos) {
            auto [k, y, z] = key;
            for (auto nb : {std::make_tuple(k, y + 1, 0L), std::make_tuple(k + 1, y - 1, 0L)}) {
                auto it = pos.find(nb);
                if (it != pos.end()) out.arrows.push_back({idx, it->second});
            }
        }
    } else if (cfg_.preset == "tube") {
        const long r = static_cast<long>(cfg_.rank), width = r + static_cast<long>(cfg_.cap);
        for (const auto& t : terms) {
            auto series = *series_of(t.id);
            long top = static_cast<long>(series.front()), len = static_cast<long>(series.size());
            pos[{top, len, t.shift}] = out.nodes.size();
            out.nodes.push_back({t, top - (len - 1) / 2.0 + t.shift * width, static_cast<double>(len - 1)});
        }
        for (const auto& [key, idx] : pos) {
            auto [top, len, s] = key;
            for (auto nb : {std::make_tuple((top + 1) % r, len + 1, s), std::make_tuple(top, len - 1, s)}) {
                auto it = pos.find(nb);
                if (it != pos.end()) out.arrows.push_back({idx, it->second});
            }
        }
    } else {
        const double width = static_cast<double>(cfg_.cap + 2);
        for (const auto& t : terms) {
            const auto& m = engine_.module(t.id);
            double row = (cfg_.preset == "ky-counterexample" && m.dims.size() > 1 && m.dims[1] > 0) ? 1.0 : 0.0;
            out.nodes.push_back({t, static_cast<double>(cyclic_length(t)) + t.shift * width, row});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------------

OrbitModel::OrbitModel(ModelConfig cfg)
    : CategoryModel(std::move(cfg)),
      cover_(AlgebraSpec{linear_quiver(cfg_.n), std::nullopt, false}, cfg_.p, cfg_.seed)
{
    if (cfg_.n < 1 || cfg_.w < 1) throw RepError("InvalidModel", "orbit model needs n >= 1 and w >= 1");
    const auto& q = cover_.quiver();
    const std::size_t n = cfg_.n;
    for (std::size_t len = 1; len <= n; ++len)
        for (std::size_t i = 1; i + len - 1 <= n; ++i) {
            std::size_t j = i + len - 1;
            std::vector<std::size_t> path;
            for (std::size_t k = i - 1; k + 1 < j; ++k) path.push_back(k);
            std::size_t id = cover_.find_or_add(uniserial(q, i - 1, path, cfg_.p));
            interval_id_[{i, j}] = id;
            if (interval_of_.size() <= id) interval_of_.resize(id + 1);
            interval_of_[id] = {i, j};
        }
    Za o = f_za({0, 0}, 1);
    period2_ = 2 * o.first + o.second;
    if (period2_ <= 0) throw RepError("InvalidModel", "orbit functor does not move the fundamental domain");
    radius_ = 3 + static_cast<int>((2 * n + 2) / static_cast<std::size_t>(period2_));
    for (long x2 = 0; x2 < period2_; ++x2)
        for (long y = 0; y < static_cast<long>(n); ++y)
            if ((x2 - y) % 2 == 0) {
                class_index_[{(x2 - y) / 2, y}] = classes_.size();
                classes_.push_back({(x2 - y) / 2, y});
            }
}

OrbitModel::Za OrbitModel::shift_za(Za c, int k) const
{
    const long n = static_cast<long>(cfg_.n);
    for (; k > 0; --k) c = {c.first + c.second + 1, n - 1 - c.second};
    for (; k < 0; ++k) c = {c.first - n + c.second, n - 1 - c.second};
    return c;
}

OrbitModel::Za OrbitModel::f_za(Za c, int times) const
{
    const int w1 = static_cast<int>(cfg_.w) + 1;
    for (; times > 0; --times) {
        c = shift_za(c, w1);
        c.first -= 1;
    }
    for (; times < 0; ++times) {
        c.first += 1;
        c = shift_za(c, -w1);
    }
    return c;
}

OrbitModel::Za OrbitModel::canonical(Za c) const
{
    while (2 * c.first + c.second >= period2_) c = f_za(c, -1);
    while (2 * c.first + c.second < 0) c = f_za(c, 1);
    return c;
}

Term OrbitModel::cover_term(Za c) const
{
    const long n = static_cast<long>(cfg_.n);
    int s = 0;
    while (c.first > n - 1 - c.second) {
        c = shift_za(c, -1);
        ++s;
    }
    while (c.first < 0) {
        c = shift_za(c, 1);
        --s;
    }
    std::size_t j = static_cast<std::size_t>(n - c.first), i = j - static_cast<std::size_t>(c.second);
    return {interval_id_.at({i, j}), s};
}

OrbitModel::Za OrbitModel::cover_za(Term t) const
{
    auto [i, j] = interval_of_.at(t.id);
    Za c{static_cast<long>(cfg_.n) - static_cast<long>(j), static_cast<long>(j) - static_cast<long>(i)};
    return shift_za(c, t.shift);
}

Term OrbitModel::from_coords(long k, long y) const
{
    if (y < 0 || y >= static_cast<long>(cfg_.n)) throw RepError("UnknownObject", "orbit coordinate out of range");
    return {class_index_.at(canonical({k, y})), 0};
}

Term OrbitModel::project(Term cover) const
{
    return {class_index_.at(canonical(cover_za(cover))), 0};
}

Term OrbitModel::lift(Term t) const
{
    return cover_term(shift_za(classes_.at(t.id), t.shift));
}

Term OrbitModel::apply_f(Term cover, int times) const
{
    return cover_term(f_za(cover_za(cover), times));
}

std::vector<Term> OrbitModel::enumerate()
{
    std::vector<Term> out;
    for (std::size_t i = 0; i < classes_.size(); ++i) out.push_back({i, 0});
    return out;
}

Term OrbitModel::shift(Term t, int k) const
{
    return {class_index_.at(canonical(shift_za(classes_.at(t.id), t.shift + k))), 0};
}

std::string OrbitModel::label(Term t) const
{
    Term c = shift(t, 0);
    auto [k, y] = classes_.at(c.id);
    long x2 = 2 * k + y;
    std::string x = std::to_string(x2 / 2);
    if (x2 % 2) x = (x2 < 0 && x2 / 2 == 0 ? "-" : "") + x + ".5";
    return "(" + x + "," + std::to_string(y) + ")";
}

Term OrbitModel::parse(const std::string& text)
{
    auto [base, sh] = split_shift(text);
    auto fail = [&]() -> Term { throw RepError("UnknownObject", "cannot parse orbit object '" + text + "'"); };
    if (base.size() < 5 || base.front() != '(' || base.back() != ')') return fail();
    auto comma = base.find(',');
    if (comma == std::string::npos) return fail();
    double x = 0;
    long y = 0;
    try {
        x = std::stod(base.substr(1, comma - 1));
        y = std::stol(base.substr(comma + 1, base.size() - comma - 2));
    } catch (const std::exception&) {
        return fail();
    }
    long x2 = std::lround(2 * x);
    if (std::fabs(2 * x - x2) > 1e-9 || (x2 - y) % 2 != 0 || y < 0 || y >= static_cast<long>(cfg_.n)) return fail();
    Za c = shift_za({(x2 - y) / 2, y}, sh);
    return {class_index_.at(canonical(c)), 0};
}

std::size_t OrbitModel::length(Term t) const
{
    return cover_.length(lift(t).id);
}

std::size_t OrbitModel::hom_dim(Term a, Term b)
{
    Term la = lift(a), lb = lift(b);
    std::size_t s = 0;
    for (int i = -radius_; i <= radius_; ++i) s += cover_.hom_dim(la, apply_f(lb, i));
    return s;
}

std::vector<Scalar> OrbitModel::compose(Term, Term, Term, const std::vector<Scalar>&, const std::vector<Scalar>&)
{
    throw RepError("Unsupported", "composition is computed in the covering category");
}

DObject OrbitModel::cone(const DMorphism& f)
{
    DMorphism c;
    for (const auto& s : f.source) c.source.push_back(lift(s));
    std::vector<std::optional<int>> lift_index(f.target.size());
    c.components.assign(f.target.size(), std::vector<std::vector<Scalar>>(f.source.size()));
    for (std::size_t i = 0; i < f.target.size(); ++i) {
        Term base = lift(f.target[i]);
        for (std::size_t j = 0; j < f.source.size(); ++j) {
            const auto& comp = f.components[i][j];
            std::size_t off = 0;
            for (int k = -radius_; k <= radius_; ++k) {
                std::size_t h = cover_.hom_dim(c.source[j], apply_f(base, k));
                std::vector<Scalar> block(comp.begin() + static_cast<long>(std::min(off, comp.size())),
                                          comp.begin() + static_cast<long>(std::min(off + h, comp.size())));
                off += h;
                if (is_zero_vector(block)) continue;
                if (lift_index[i] && *lift_index[i] != k)
                    throw RepError("MixedOrbitCone", "morphism components live in different lifts");
                lift_index[i] = k;
                c.components[i][j] = block;
            }
        }
    }
    for (std::size_t i = 0; i < f.target.size(); ++i) {
        c.target.push_back(apply_f(lift(f.target[i]), lift_index[i].value_or(0)));
        for (std::size_t j = 0; j < f.source.size(); ++j)
            if (c.components[i][j].empty()) c.components[i][j].assign(cover_.hom_dim(c.source[j], c.target[i]), 0);
    }
    DObject out;
    for (const auto& t : cover_.cone(c)) out.push_back(project(t));
    return normalized(out);
}

Term OrbitModel::serre(Term t)
{
    Za c = cover_za(lift(t));
    c.first -= 1;
    c = shift_za(c, 1);
    return {class_index_.at(canonical(c)), 0};
}

Term OrbitModel::tau(Term t)
{
    Za c = cover_za(lift(t));
    c.first -= 1;
    return {class_index_.at(canonical(c)), 0};
}

std::vector<Term> OrbitModel::cover_candidates(Term, const std::vector<Term>& c)
{
    std::vector<Term> out;
    for (const auto& t : c) {
        Term l = lift(t);
        for (int k = -radius_ - 1; k <= radius_ + 1; ++k) out.push_back(apply_f(l, k));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Approximation OrbitModel::project(const Approximation& a) const
{
    Approximation r = a;
    r.object = project(a.object);
    for (auto& s : r.summands) s = project(s);
    r.cone.clear();
    for (const auto& t : a.cone) r.cone.push_back(project(t));
    r.cone = normalized(r.cone);
    return r;
}

Approximation OrbitModel::right_approximation(Term d, const std::vector<Term>& c)
{
    Term dl = lift(d);
    return project(cover_.right_approximation(dl, cover_candidates(dl, c)));
}

Approximation OrbitModel::left_approximation(Term d, const std::vector<Term>& c)
{
    Term dl = lift(d);
    return project(cover_.left_approximation(dl, cover_candidates(dl, c)));
}

Approximation OrbitModel::minimize(const Approximation& a)
{
    // Orbit approximations are assembled minimal in the cover.
    return a;
}

TermClosure OrbitModel::extension_closure(const std::vector<Term>& gens, std::size_t cap)
{
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (hom_dim(gens[i], gens[i]) != 1)
            throw RepError("NonSemibrick", "generator " + std::to_string(i) + " is not a brick with End = F_p");
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (shift(gens[i], 0) != shift(gens[j], 0) && hom_dim(gens[i], gens[j]) != 0)
                throw RepError("NonSemibrick",
                               "generators " + std::to_string(i) + " and " + std::to_string(j) + " are not Hom-orthogonal");
    }
    std::vector<Term> lifted;
    for (const auto& g : gens)
        for (int k = -1; k <= 1; ++k) lifted.push_back(apply_f(lift(g), k));
    std::sort(lifted.begin(), lifted.end());
    lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
    TermClosure cl = cover_.extension_closure(lifted, cap);
    TermClosure out;
    out.capped = cl.capped;
    std::set<Term> seen;
    for (const auto& g : gens)
        if (seen.insert(shift(g, 0)).second) out.members.push_back(shift(g, 0));
    for (const auto& t : cl.members) {
        Term p = project(t);
        if (seen.insert(p).second) out.members.push_back(p);
    }
    return out;
}

DObject OrbitModel::evaluation_cone(Term d, const std::vector<Term>& c, bool right)
{
    Term dl = lift(d);
    DObject out;
    for (const auto& t : cover_.evaluation_cone(dl, cover_candidates(dl, c), right)) out.push_back(project(t));
    return normalized(out);
}

ArLayout OrbitModel::layout()
{
    ArLayout out;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        auto [k, y] = classes_[i];
        out.nodes.push_back({{i, 0}, k + y / 2.0, static_cast<double>(y)});
    }
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        auto [k, y] = classes_[i];
        const long n = static_cast<long>(cfg_.n);
        if (y + 1 < n) out.arrows.push_back({i, class_index_.at(canonical({k, y + 1}))});
        if (y > 0) out.arrows.push_back({i, class_index_.at(canonical({k + 1, y - 1}))});
    }
    return out;
}

// ---------------------------------------------------------------------------------------------

std::unique_ptr<CategoryModel> make_model(const ModelConfig& cfg)
{
    if (cfg.kind == ModelKind::OrbitCY) return std::make_unique<OrbitModel>(cfg);
    return std::make_unique<HereditaryModel>(cfg);
}

ModelConfig preset_a_n(std::size_t n)
{
    ModelConfig c;
    c.kind = ModelKind::DerivedHereditary;
    c.preset = "a_n";
    c.n = n;
    c.window_lo = -2;
    c.window_hi = 2;
    return c;
}

ModelConfig preset_orbit(std::size_t n, std::size_t w)
{
    ModelConfig c;
    c.kind = ModelKind::OrbitCY;
    c.preset = "orbit";
    c.n = n;
    c.w = w;
    c.window_lo = 0;
    c.window_hi = 0;
    return c;
}

ModelConfig preset_tube(std::size_t r)
{
    ModelConfig c;
    c.kind = ModelKind::TubeDerived;
    c.preset = "tube";
    c.rank = r;
    c.cap = 6;
    c.window_lo = -1;
    c.window_hi = 1;
    return c;
}

ModelConfig preset_ky(std::size_t cap)
{
    ModelConfig c;
    c.kind = ModelKind::NilDerived;
    c.preset = "ky-counterexample";
    c.cap = cap;
    c.window_lo = -1;
    c.window_hi = 1;
    return c;
}

ModelConfig preset_by_name(const std::string& name, const std::vector<std::size_t>& args)
{
    auto arg = [&](std::size_t i, std::size_t dflt) { return i < args.size() ? args[i] : dflt; };
    if (name == "a_n") return preset_a_n(arg(0, 3));
    if (name == "orbit") return preset_orbit(arg(0, 5), arg(1, 2));
    if (name == "tube") return preset_tube(arg(0, 3));
    if (name == "ky-counterexample") return preset_ky(arg(0, 8));
    throw RepError("InvalidModel", "unknown preset '" + name + "'");
}

}  // namespace smm
