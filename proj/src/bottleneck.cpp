#include "paramhom/bottleneck.hpp"

#include "paramhom/levelset.hpp"

#include <algorithm>
#include <cmath>

namespace paramhom
{

namespace
{

double coordinate_gap(double u, double v)
{
    if (u == v)
        return 0;
    return std::fabs(u - v);
}

/// Perfect matching check on the graph whose left side is A plus one
/// diagonal slot per point of B, and right side is B plus one diagonal slot
/// per point of A. Diagonal-to-diagonal pairs are always allowed.
class Matcher
{
public:
    Matcher(std::vector<PlanePoint> const& a, std::vector<PlanePoint> const& b, double delta)
        : na_(a.size()), nb_(b.size()), adj_(na_ + nb_)
    {
        for (std::size_t i = 0; i < na_; ++i) {
            for (std::size_t j = 0; j < nb_; ++j)
                if (dinf(a[i], b[j]) <= delta)
                    adj_[i].push_back(j);
            if (diagonal_distance(a[i]) <= delta)
                adj_[i].push_back(nb_ + i);
        }
        for (std::size_t j = 0; j < nb_; ++j) {
            if (diagonal_distance(b[j]) <= delta)
                adj_[na_ + j].push_back(j);
            for (std::size_t i = 0; i < na_; ++i)
                adj_[na_ + j].push_back(nb_ + i);
        }
    }

    bool perfect()
    {
        std::size_t const n = na_ + nb_;
        match_right_.assign(n, npos);
        for (std::size_t u = 0; u < n; ++u) {
            seen_.assign(n, false);
            if (!augment(u))
                return false;
        }
        return true;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool augment(std::size_t u)
    {
        for (std::size_t v : adj_[u]) {
            if (seen_[v])
                continue;
            seen_[v] = true;
            if (match_right_[v] == npos || augment(match_right_[v])) {
                match_right_[v] = u;
                return true;
            }
        }
        return false;
    }

    std::size_t na_;
    std::size_t nb_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> match_right_;
    std::vector<bool> seen_;
};

} // namespace

double dinf(PlanePoint const& x, PlanePoint const& y)
{
    return std::max(coordinate_gap(x.first, y.first), coordinate_gap(x.second, y.second));
}

double diagonal_distance(PlanePoint const& x)
{
    bool const pi = std::isinf(x.first);
    bool const qi = std::isinf(x.second);
    if (pi || qi)
        return infinity;
    return (x.second - x.first) / 2;
}

std::vector<PlanePoint> expand(UndecoratedDiagram const& d)
{
    std::vector<PlanePoint> out;
    for (auto const& [pt, m] : d)
        out.insert(out.end(), m, pt);
    return out;
}

double bottleneck_distance(UndecoratedDiagram const& a, UndecoratedDiagram const& b)
{
    auto const pa = expand(a);
    auto const pb = expand(b);
    std::vector<double> candidates{0.0};
    for (auto const& x : pa) {
        candidates.push_back(diagonal_distance(x));
        for (auto const& y : pb)
            candidates.push_back(dinf(x, y));
    }
    for (auto const& y : pb)
        candidates.push_back(diagonal_distance(y));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    while (!candidates.empty() && std::isinf(candidates.back()))
        candidates.pop_back();

    auto feasible = [&](double delta) { return Matcher(pa, pb, delta).perfect(); };
    if (candidates.empty() || !feasible(candidates.back()))
        return infinity;
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t const mid = lo + (hi - lo) / 2;
        if (feasible(candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

std::vector<StabilityRecord> stability_report(ConstructibleRSpace const& x,
                                              std::vector<double> const& values, int max_dim,
                                              PrimeField field)
{
    if (values.size() != x.size())
        throw ContractError("stability: expected " + std::to_string(x.size()) +
                            " critical values, got " + std::to_string(values.size()));
    ConstructibleRSpace y = x;
    y.critical_values = values;
    auto const problems = validate(y);
    if (!problems.empty())
        throw ContractError("stability: perturbed space is invalid: " + problems.front());

    double delta = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        delta = std::max(delta, std::fabs(values[i] - x.critical_values[i]));

    auto const hx = parametrized_homology(x, max_dim, field);
    auto const hy = parametrized_homology(y, max_dim, field);
    std::vector<StabilityRecord> out;
    for (int k = 0; k <= max_dim; ++k) {
        for (auto t : all_behaviors) {
            double const d = bottleneck_distance(undecorate(hx[k][t]), undecorate(hy[k][t]));
            out.push_back({k, t, d, delta, d <= delta + 1e-9});
        }
    }
    return out;
}

} // namespace paramhom
