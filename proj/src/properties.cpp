#include "paramhom/properties.hpp"

#include "paramhom/cohomology.hpp"
#include "paramhom/extended.hpp"
#include "paramhom/io.hpp"
#include "paramhom/levelset.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace paramhom
{

namespace
{

std::vector<double> extended_pool(ConstructibleRSpace const& x, bool with_critical)
{
    std::vector<double> out{-infinity};
    auto const pool = corner_pool(x, with_critical);
    out.insert(out.end(), pool.begin(), pool.end());
    out.push_back(infinity);
    return out;
}

/// `count` distinct sorted indices below `size`.
std::vector<std::size_t> pick_sorted(std::size_t size, std::size_t count, Rng& rng)
{
    if (size < count)
        throw ContractError("corner pool too small");
    std::uniform_int_distribution<std::size_t> dist(0, size - 1);
    std::set<std::size_t> chosen;
    while (chosen.size() < count)
        chosen.insert(dist(rng));
    return {chosen.begin(), chosen.end()};
}

void fail(PropertyResult& r, std::string const& detail)
{
    if (r.passed)
        r.detail = detail;
    r.passed = false;
}

std::string dim_type(int k, Behavior t)
{
    return "H" + std::to_string(k) + " " + behavior_code(t);
}

} // namespace

std::string describe_rectangle(Rectangle const& r)
{
    return "[" + format_value(r.a) + ", " + format_value(r.b) + "] x [" + format_value(r.c) +
           ", " + format_value(r.d) + "]";
}

std::vector<double> corner_pool(ConstructibleRSpace const& x, bool with_critical)
{
    auto const& a = x.critical_values;
    std::vector<double> out;
    if (a.empty())
        return {-1.0, 0.0, 1.0, 2.0};
    double step = 1;
    for (std::size_t i = 1; i < a.size(); ++i)
        step = i == 1 ? a[1] - a[0] : std::min(step, a[i] - a[i - 1]);
    for (int j = 1; j <= 4; ++j) {
        out.push_back(a.front() - j * step / 2);
        out.push_back(a.back() + j * step / 2);
    }
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        for (int j = 1; j <= 7; ++j)
            out.push_back(a[i] + (a[i + 1] - a[i]) * j / 8);
    if (with_critical)
        out.insert(out.end(), a.begin(), a.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rectangle random_rectangle(ConstructibleRSpace const& x, Rng& rng, bool with_critical)
{
    auto const pool = extended_pool(x, with_critical);
    auto const i = pick_sorted(pool.size(), 4, rng);
    return {pool[i[0]], pool[i[1]], pool[i[2]], pool[i[3]]};
}

RectangleSplit random_split(ConstructibleRSpace const& x, Rng& rng, bool with_critical)
{
    auto const pool = extended_pool(x, with_critical);
    auto const i = pick_sorted(pool.size(), 5, rng);
    double const v0 = pool[i[0]], v1 = pool[i[1]], v2 = pool[i[2]], v3 = pool[i[3]],
                 v4 = pool[i[4]];
    bool const horizontal = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
    if (horizontal)
        return {{v0, v2, v3, v4}, {v0, v1, v3, v4}, {v1, v2, v3, v4}, true};
    return {{v0, v1, v2, v4}, {v0, v1, v2, v3}, {v0, v1, v3, v4}, false};
}

PropertyResult check_additivity(MeasureEngine& engine, int max_dim, Rng& rng, std::size_t count)
{
    PropertyResult r;
    r.name = "additivity";
    for (std::size_t n = 0; n < count; ++n) {
        auto const s = random_split(engine.space(), rng);
        for (int k = 0; k <= max_dim; ++k) {
            auto const whole = engine.measures(k, s.whole);
            auto const first = engine.measures(k, s.first);
            auto const second = engine.measures(k, s.second);
            for (auto t : all_behaviors) {
                auto const i = behavior_index(t);
                ++r.checks;
                if (whole[i] != first[i] + second[i])
                    fail(r, dim_type(k, t) + " " + (s.horizontal ? "horizontal" : "vertical") +
                                " split of " + describe_rectangle(s.whole) + " into " +
                                describe_rectangle(s.first) + " + " +
                                describe_rectangle(s.second) + ": " + std::to_string(whole[i]) +
                                " != " + std::to_string(first[i]) + " + " +
                                std::to_string(second[i]));
            }
        }
    }
    return r;
}

PropertyResult check_equivalence(MeasureEngine& engine, std::vector<DiagramSet> const& diagrams,
                                 Rng& rng, std::size_t count)
{
    PropertyResult r;
    r.name = "equivalence";
    int const max_dim = static_cast<int>(diagrams.size()) - 1;
    for (std::size_t n = 0; n < count; ++n) {
        auto const rect = random_rectangle(engine.space(), rng);
        for (int k = 0; k <= max_dim; ++k) {
            auto const direct = engine.measures(k, rect);
            for (auto t : all_behaviors) {
                ++r.checks;
                auto const counted = diagrams[k][t].count_in(rect);
                if (direct[behavior_index(t)] != counted)
                    fail(r, dim_type(k, t) + " on " + describe_rectangle(rect) + ": measure " +
                                std::to_string(direct[behavior_index(t)]) + ", diagram count " +
                                std::to_string(counted));
            }
        }
    }
    for (int k = 0; k <= max_dim; ++k) {
        ++r.checks;
        try {
            if (!(engine.extract(k) == diagrams[k]))
                fail(r, "H" + std::to_string(k) +
                            ": diagrams extracted from the measures differ from the levelset "
                            "diagrams");
        } catch (ContractError const& e) {
            fail(r, "H" + std::to_string(k) + ": " + e.what());
        }
    }
    return r;
}

PropertyResult check_restriction(ConstructibleRSpace const& x, int max_dim, PrimeField field,
                                 Rng& rng, std::size_t count)
{
    PropertyResult r;
    r.name = "restriction";
    for (std::size_t n = 0; n < count; ++n) {
        auto const rect = random_rectangle(x, rng);
        for (int k = 0; k <= max_dim; ++k) {
            auto const z = extended_sequence(x, k, rect, field);
            auto const full = decompose(z);
            for (std::size_t m = 2; m < z.length(); ++m) {
                ++r.checks;
                if (decompose(coarsen(z, m)) != restrict_intervals(full, m))
                    fail(r, "H" + std::to_string(k) + " extended sequence of " +
                                describe_rectangle(rect) + " coarsened at node " +
                                std::to_string(m));
            }
        }
    }
    return r;
}

PropertyResult check_duality(ConstructibleRSpace const& x, std::vector<DiagramSet> const& diagrams,
                             PrimeField field)
{
    PropertyResult r;
    r.name = "duality";
    for (auto const& d : diagrams) {
        ++r.checks;
        if (!(cohomology_diagrams_unchecked(x, d.dim, field) == d))
            fail(r, "H" + std::to_string(d.dim) + ": cohomology diagrams differ from homology");
    }
    return r;
}

PropertyResult check_bound(MeasureEngine& engine, int max_dim, Rng& rng, std::size_t count)
{
    PropertyResult r;
    r.name = "bound";
    for (std::size_t n = 0; n < count; ++n) {
        auto const rect = random_rectangle(engine.space(), rng, true);
        for (int k = 0; k <= max_dim; ++k) {
            auto const m = engine.measures(k, rect);
            std::size_t const total = m[0] + m[1] + m[2] + m[3];
            std::size_t const bound =
                closed_bar_bound(engine.space(), k, rect.b, rect.c, engine.field());
            ++r.checks;
            if (total > bound)
                fail(r, "H" + std::to_string(k) + " on " + describe_rectangle(rect) +
                            ": four measures sum to " + std::to_string(total) +
                            ", closed bar multiplicity " + std::to_string(bound));
        }
    }
    return r;
}

PropertyResult check_correspondence(MeasureEngine& engine, int max_dim, Rng& rng,
                                    std::size_t count)
{
    PropertyResult r;
    r.name = "correspondence";
    auto const& x = engine.space();
    for (std::size_t n = 0; n < count; ++n) {
        auto const rect = random_rectangle(x, rng);
        std::vector<MeasureValues> meas;
        std::vector<IntervalMultiset> ext;
        for (int i = 0; i <= max_dim + 1; ++i) {
            meas.push_back(engine.measures(i, rect));
            ext.push_back(decompose(extended_sequence(x, i, rect, engine.field())));
        }
        auto ext_count = [&](int i, ExtendedType t) -> std::size_t {
            auto it = ext[i].find(extended_pattern(t));
            return it == ext[i].end() ? 0 : it->second;
        };
        auto par = [&](int i, Behavior t) -> std::size_t {
            return i < 0 ? 0 : meas[i][behavior_index(t)];
        };
        for (int i = 0; i <= max_dim + 1; ++i) {
            struct Pair
            {
                ExtendedType e;
                int shift;
                Behavior b;
            };
            for (auto const& [e, shift, b] :
                 {Pair{ExtendedType::ordinary, 0, Behavior::down_down},
                  Pair{ExtendedType::extended_plus, 0, Behavior::down_up},
                  Pair{ExtendedType::relative, 1, Behavior::up_up},
                  Pair{ExtendedType::extended_minus, 1, Behavior::up_down}}) {
                ++r.checks;
                auto const lhs = ext_count(i, e);
                auto const rhs = par(i - shift, b);
                if (lhs != rhs)
                    fail(r, extended_code(e) + " in degree " + std::to_string(i) + " on " +
                                describe_rectangle(rect) + ": " + std::to_string(lhs) +
                                " vs " + dim_type(i - shift, b) + " " + std::to_string(rhs));
            }
        }
    }
    return r;
}

PropertyResult check_reversal(MeasureEngine& engine, int max_dim, Rng& rng, std::size_t count)
{
    PropertyResult r;
    r.name = "reversal";
    MeasureEngine reversed(coordinate_reverse(engine.space()), engine.field());
    auto mirror = [](Behavior t) {
        if (t == Behavior::up_up)
            return Behavior::down_down;
        if (t == Behavior::down_down)
            return Behavior::up_up;
        return t;
    };
    for (std::size_t n = 0; n < count; ++n) {
        auto const rect = random_rectangle(engine.space(), rng, true);
        for (int k = 0; k <= max_dim; ++k) {
            auto const here = engine.measures(k, rect);
            auto const there = reversed.measures(k, reverse_rectangle(rect));
            for (auto t : all_behaviors) {
                ++r.checks;
                if (here[behavior_index(t)] != there[behavior_index(mirror(t))])
                    fail(r, dim_type(k, t) + " on " + describe_rectangle(rect) +
                                " against the reversed space");
            }
        }
    }
    return r;
}

PropertyResult check_typing(ConstructibleRSpace const& x, std::vector<DiagramSet> const& diagrams)
{
    PropertyResult r;
    r.name = "typing";
    auto const& a = x.critical_values;
    auto on_grid = [&](double v) {
        return std::isinf(v) || std::find(a.begin(), a.end(), v) != a.end();
    };
    for (auto const& set : diagrams) {
        for (auto const& d : set.diagrams) {
            auto const [pd, qd] = decorations_of(d.type());
            for (auto const& [pt, m] : d.points()) {
                ++r.checks;
                if (pt.pdec != pd || pt.qdec != qd || !pt.valid())
                    fail(r, dim_type(set.dim, d.type()) + ": point (" + format_value(pt.p) +
                                ", " + format_value(pt.q) + ") has the wrong decorations");
                if (!on_grid(pt.p) || !on_grid(pt.q))
                    fail(r, dim_type(set.dim, d.type()) + ": point (" + format_value(pt.p) +
                                ", " + format_value(pt.q) + ") is off the critical grid");
            }
        }
    }
    return r;
}

std::vector<PropertyResult> validate_properties(ConstructibleRSpace const& x, int max_dim,
                                                PrimeField field, ValidateOptions const& options)
{
    auto const diagrams = parametrized_homology(x, max_dim, field);
    MeasureEngine engine(x, field, options.inject_fault);
    std::size_t const n = options.rectangles;
    std::vector<PropertyResult> out;
    auto run = [&](std::uint64_t salt, auto&& suite) {
        Rng rng(options.seed * 1000003 + salt);
        out.push_back(suite(rng));
    };
    run(1, [&](Rng& rng) { return check_additivity(engine, max_dim, rng, n); });
    run(2, [&](Rng& rng) { return check_equivalence(engine, diagrams, rng, n); });
    run(3, [&](Rng& rng) { return check_restriction(x, max_dim, field, rng, std::max<std::size_t>(1, n / 4)); });
    run(4, [&](Rng&) { return check_duality(x, diagrams, field); });
    run(5, [&](Rng& rng) { return check_bound(engine, max_dim, rng, n); });
    run(6, [&](Rng& rng) { return check_correspondence(engine, max_dim, rng, std::max<std::size_t>(1, n / 2)); });
    run(7, [&](Rng& rng) { return check_reversal(engine, max_dim, rng, n); });
    run(8, [&](Rng&) { return check_typing(x, diagrams); });
    return out;
}

} // namespace paramhom
