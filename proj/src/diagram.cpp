#include "paramhom/diagram.hpp"

#include "paramhom/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace paramhom
{

std::pair<Decoration, Decoration> decorations_of(Behavior b)
{
    switch (b) {
    case Behavior::up_down:
        return {Decoration::plus, Decoration::minus};
    case Behavior::down_down:
        return {Decoration::minus, Decoration::minus};
    case Behavior::up_up:
        return {Decoration::plus, Decoration::plus};
    case Behavior::down_up:
        return {Decoration::minus, Decoration::plus};
    }
    throw std::logic_error("unknown behavior");
}

std::string behavior_code(Behavior b)
{
    switch (b) {
    case Behavior::up_down:
        return "oo";
    case Behavior::down_down:
        return "co";
    case Behavior::up_up:
        return "oc";
    case Behavior::down_up:
        return "cc";
    }
    throw std::logic_error("unknown behavior");
}

Behavior behavior_from_code(std::string const& code)
{
    for (auto b : all_behaviors)
        if (behavior_code(b) == code)
            return b;
    throw std::invalid_argument("unknown type code '" + code + "' (expected oo, co, oc or cc)");
}

std::string behavior_name(Behavior b)
{
    switch (b) {
    case Behavior::up_down:
        return "up-down";
    case Behavior::down_down:
        return "down-down";
    case Behavior::up_up:
        return "up-up";
    case Behavior::down_up:
        return "down-up";
    }
    throw std::logic_error("unknown behavior");
}

std::size_t behavior_index(Behavior b)
{
    return static_cast<std::size_t>(b);
}

bool DecoratedPoint::valid() const
{
    if (std::isnan(p) || std::isnan(q))
        return false;
    if (p == -infinity && pdec != Decoration::plus)
        return false;
    if (q == infinity && qdec != Decoration::minus)
        return false;
    if (p == infinity || q == -infinity)
        return false;
    if (p < q)
        return true;
    return p == q && pdec == Decoration::minus && qdec == Decoration::plus;
}

std::pair<int, int> DecoratedPoint::tick() const
{
    return {pdec == Decoration::plus ? 1 : -1, qdec == Decoration::plus ? 1 : -1};
}

bool Rectangle::valid() const
{
    return valid_allowing_diagonal() && b < c;
}

bool Rectangle::valid_allowing_diagonal() const
{
    if (std::isnan(a) || std::isnan(b) || std::isnan(c) || std::isnan(d))
        return false;
    if (b == -infinity || c == -infinity || b == infinity || c == infinity)
        return false;
    if (a == infinity || d == -infinity)
        return false;
    return a < b && b <= c && c < d;
}

Rectangle reverse_rectangle(Rectangle const& r)
{
    return {-r.d, -r.c, -r.b, -r.a};
}

bool contains(Rectangle const& r, DecoratedPoint const& pt)
{
    if (!(pt.p >= r.a && pt.p <= r.b && pt.q >= r.c && pt.q <= r.d))
        return false;
    if (pt.p == r.a && pt.pdec != Decoration::plus)
        return false;
    if (pt.p == r.b && pt.pdec != Decoration::minus)
        return false;
    if (pt.q == r.c && pt.qdec != Decoration::plus)
        return false;
    if (pt.q == r.d && pt.qdec != Decoration::minus)
        return false;
    return true;
}

std::size_t DecoratedDiagram::total() const
{
    std::size_t n = 0;
    for (auto const& [pt, m] : points_)
        n += m;
    return n;
}

void DecoratedDiagram::add(double p, double q, std::size_t multiplicity)
{
    auto const [pd, qd] = decorations_of(type_);
    add(DecoratedPoint{p, pd, q, qd}, multiplicity);
}

void DecoratedDiagram::add(DecoratedPoint const& pt, std::size_t multiplicity)
{
    auto const [pd, qd] = decorations_of(type_);
    if (pt.pdec != pd || pt.qdec != qd)
        throw ContractError("decorations do not match the diagram type " + behavior_code(type_));
    if (!pt.valid()) {
        std::ostringstream msg;
        msg << "invalid decorated point (" << pt.p << ", " << pt.q << ")";
        throw ContractError(msg.str());
    }
    if (multiplicity == 0)
        throw ContractError("zero multiplicity");
    points_[pt] += multiplicity;
}

std::size_t DecoratedDiagram::count_in(Rectangle const& r) const
{
    std::size_t n = 0;
    for (auto const& [pt, m] : points_)
        if (contains(r, pt))
            n += m;
    return n;
}

DiagramSet::DiagramSet(int d)
    : dim(d),
      diagrams{DecoratedDiagram(d, Behavior::up_down), DecoratedDiagram(d, Behavior::down_down),
               DecoratedDiagram(d, Behavior::up_up), DecoratedDiagram(d, Behavior::down_up)}
{
}

DecoratedDiagram& DiagramSet::operator[](Behavior b)
{
    return diagrams[behavior_index(b)];
}

DecoratedDiagram const& DiagramSet::operator[](Behavior b) const
{
    return diagrams[behavior_index(b)];
}

std::size_t measure_via_diagram(DecoratedDiagram const& d, Rectangle const& r)
{
    return d.count_in(r);
}

namespace
{

double split_point(double lo, double hi)
{
    if (std::isfinite(lo) && std::isfinite(hi))
        return lo + (hi - lo) / 2;
    if (std::isfinite(hi))
        return hi - 1;
    return lo + 1;
}

} // namespace

DecoratedDiagram extract_diagram(MeasureOracle const& mu, Behavior type, int dim,
                                 std::vector<double> const& values, double epsilon)
{
    std::vector<double> grid(values);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    if (epsilon <= 0) {
        double gap = infinity;
        for (std::size_t i = 1; i < grid.size(); ++i)
            gap = std::min(gap, grid[i] - grid[i - 1]);
        epsilon = std::isfinite(gap) ? gap / 2 : 1.0;
    }
    double const lowest = grid.empty() ? 0.0 : grid.front();
    double const highest = grid.empty() ? 0.0 : grid.back();

    std::vector<double> candidates;
    candidates.push_back(-infinity);
    candidates.insert(candidates.end(), grid.begin(), grid.end());
    candidates.push_back(infinity);

    auto const [pd, qd] = decorations_of(type);
    auto p_range = [&](double p) -> std::pair<double, double> {
        if (p == -infinity)
            return {-infinity, lowest - epsilon};
        return pd == Decoration::minus ? std::pair{p - epsilon, p} : std::pair{p, p + epsilon};
    };
    auto q_range = [&](double q) -> std::pair<double, double> {
        if (q == infinity)
            return {highest + epsilon, infinity};
        return qd == Decoration::minus ? std::pair{q - epsilon, q} : std::pair{q, q + epsilon};
    };

    DecoratedDiagram out(dim, type);
    for (double p : candidates) {
        for (double q : candidates) {
            DecoratedPoint const pt{p, pd, q, qd};
            if (!pt.valid())
                continue;
            auto const [a, b] = p_range(p);
            auto const [c, d] = q_range(q);
            Rectangle const r{a, b, c, d};
            if (!r.valid_allowing_diagonal())
                throw ContractError("extract_diagram: epsilon too large for the grid");
            std::size_t const m = mu(r);

            double const s = split_point(a, b);
            std::size_t const horizontal = mu({a, s, c, d}) + mu({s, b, c, d});
            double const t = split_point(c, d);
            std::size_t const vertical = mu({a, b, c, t}) + mu({a, b, t, d});
            if (horizontal != m || vertical != m) {
                std::ostringstream msg;
                msg << "extract_diagram: measure is not additive on [" << a << "," << b << "]x["
                    << c << "," << d << "]: whole " << m << ", horizontal split " << horizontal
                    << ", vertical split " << vertical;
                throw ContractError(msg.str());
            }
            if (m > 0)
                out.add(pt, m);
        }
    }
    return out;
}

UndecoratedDiagram undecorate(DecoratedDiagram const& d)
{
    UndecoratedDiagram out;
    for (auto const& [pt, m] : d.points())
        out[{pt.p, pt.q}] += m;
    return out;
}

} // namespace paramhom
