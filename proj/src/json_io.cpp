#include "plab/json_io.hpp"

namespace plab {

namespace {

std::string str(long long n)
{
    return std::to_string(n);
}

} // namespace

Json to_json(const Integer& n)
{
    return n.get_str();
}

Json to_json(const Rational& q)
{
    return to_string(q);
}

Json to_json(const KElement& a)
{
    return Json::array({to_string(a[0]), to_string(a[1]), to_string(a[2])});
}

Json to_json(const ECPoint& P)
{
    if (P.is_infinity()) return "infinity";
    return Json{{"u", to_string(P.u())}, {"v", to_string(P.v())}};
}

Json to_json(const ProjPoint& p)
{
    Json out = Json::array();
    for (const auto& c : p.coords()) out.push_back(c.get_str());
    return out;
}

Json to_json(const UnitClass& u)
{
    return u.to_string();
}

Json to_json(const DeltaPair& d)
{
    return Json{{"delta_A", to_json(d.delta_A)}, {"delta_B", to_json(d.delta_B)}};
}

Json to_json(const CDPoint& p)
{
    return Json{{"x", to_string(p.x)}, {"y", to_string(p.y)}};
}

Json to_json(const FpFactorization& f, const std::string& var)
{
    Json factors = Json::array();
    for (const auto& fac : f.factors)
        factors.push_back({{"factor", fac.factor.to_string(var)}, {"multiplicity", str(fac.multiplicity)}});
    return Json{{"p", str(static_cast<long long>(f.p))},
                {"unit", str(static_cast<long long>(f.unit))},
                {"factors", factors},
                {"text", f.to_string(var)}};
}

Json to_json(const PreimageTree& t)
{
    Json levels = Json::array();
    for (const auto& level : t.levels) {
        Json row = Json::array();
        for (const auto& node : level) row.push_back({{"value", to_string(node.value)}, {"cycle", node.cycle}});
        levels.push_back(row);
    }
    Json values = Json::array();
    for (const auto& v : t.values) values.push_back(to_string(v));
    Json cut = Json::array();
    for (const auto& v : t.truncated_at) cut.push_back(to_string(v));
    return Json{{"d", str(t.d)},
                {"c", to_string(t.c)},
                {"root", to_string(t.root)},
                {"levels", levels},
                {"union", values},
                {"union_size", str(static_cast<long long>(t.values.size()))},
                {"cycle_detected", t.cycle_detected},
                {"truncated", t.truncated},
                {"truncated_at", cut}};
}

Json to_json(const DMSolution& s)
{
    return Json::array({s.x.get_str(), s.y.get_str(), s.z.get_str()});
}

Json to_json(const DMSearchResult& r)
{
    Json trivial = Json::array(), nontrivial = Json::array();
    for (const auto& s : r.trivial) trivial.push_back(to_json(s));
    for (const auto& s : r.nontrivial) nontrivial.push_back(to_json(s));
    return Json{{"n", str(r.n)},
                {"bound", str(r.bound)},
                {"trivial", trivial},
                {"nontrivial", nontrivial},
                {"nontrivial_count", str(static_cast<long long>(r.nontrivial.size()))}};
}

Json to_json(const RouteVerdict& v)
{
    Json cands = Json::array();
    for (const auto& c : v.candidates)
        cands.push_back({{"point", to_json(c.point.point)},
                         {"order", str(c.point.order)},
                         {"excluded_because", c.excluded_because}});
    std::string curve = std::string("y^2 = x^3 ") + (v.curve_b < 0 ? "- " : "+ ") + to_string(abs(v.curve_b));
    return Json{{"d", str(v.d)},
                {"c", to_string(v.c)},
                {"curve", curve},
                {"first_preimage_exists", v.first_preimage_exists},
                {"second_preimage_exists", v.second_preimage_exists},
                {"candidates", cands}};
}

Json to_json(const SingularReport& r)
{
    Json roots = Json::array();
    for (auto c : r.double_roots) roots.push_back(str(c));
    Json points = Json::array();
    for (const auto& p : r.points) {
        Json coords = Json::array();
        for (auto x : p.projective_point) coords.push_back(str(x));
        points.push_back({{"c0", str(p.c0)},
                          {"hessian_det", str(static_cast<long long>(p.hessian_det))},
                          {"hessian_nondegenerate", p.hessian_nondegenerate},
                          {"projective_point", coords}});
    }
    return Json{{"p", str(static_cast<long long>(r.p))},
                {"double_roots", roots},
                {"points", points},
                {"inverted_in_base_ring", r.inverted_in_base_ring}};
}

} // namespace plab
