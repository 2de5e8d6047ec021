#include "volset/report.hpp"

namespace volset::report {

Json to_json(const FieldSpec& spec)
{
    Json j;
    j["p"] = spec.p;
    j["k"] = spec.k;
    j["q"] = spec.q;
    if (spec.k > 1)
        j["mod"] = spec.modulus;
    return j;
}

Json to_json(const Vector& v)
{
    Json j = Json::array();
    for (Elem e : v)
        j.push_back(e.value);
    return j;
}

Json to_json(const std::vector<Vector>& vs)
{
    Json j = Json::array();
    for (const auto& v : vs)
        j.push_back(to_json(v));
    return j;
}

Json to_json(const ScalarSet& s)
{
    Json j = Json::array();
    for (Elem e : s.elements)
        j.push_back(e.value);
    return j;
}

Json to_json(const Matrix& m)
{
    return to_json(m.to_rows());
}

Json to_json(const Subspace& s)
{
    Json j;
    j["dim"] = s.dim();
    j["pivots"] = s.pivots();
    j["basis"] = to_json(s.basis());
    return j;
}

Json to_json(const CountTable& t)
{
    Json j;
    j["gram"] = to_json(t.gram);
    j["e_size"] = t.e_size;
    j["f_size"] = t.f_size;
    j["main_term"] = to_string(t.main_term());
    Json rows = Json::array();
    for (std::uint32_t v = 0; v < t.q; ++v) {
        Json r;
        r["t"] = v;
        r["nu"] = t.counts[v];
        r["scaled_deviation"] = t.scaled_deviation[v];
        r["bound_holds"] = t.deviation_bound_holds(Elem{v});
        rows.push_back(std::move(r));
    }
    j["counts"] = std::move(rows);
    return j;
}

Json to_json(const CoverageCertificate& c)
{
    Json j;
    j["field"] = to_json(c.field);
    j["dim"] = c.dim;
    j["set_size"] = c.set_size;
    j["seed"] = c.seed;
    j["evaluations"] = c.evaluations;
    j["exhaustive"] = c.exhaustive;
    j["hypothesis_met"] = c.hypothesis_met;
    j["in_proof_range"] = c.in_proof_range;
    j["covered"] = c.covered();
    j["red_flag"] = c.red_flag();
    j["covered_values"] = to_json(c.covered_values());
    Json missing = Json::array();
    for (Elem e : c.missing)
        missing.push_back(e.value);
    j["missing"] = std::move(missing);
    Json w = Json::array();
    for (const auto& [t, rows] : c.witnesses) {
        Json item;
        item["t"] = t;
        item["rows"] = to_json(rows);
        w.push_back(std::move(item));
    }
    j["witnesses"] = std::move(w);
    return j;
}

Json to_json(const TraceStep& s)
{
    Json j;
    j["label"] = s.label;
    j["lhs"] = s.lhs.str();
    j["rel"] = to_string(s.rel);
    j["rhs"] = s.rhs.str();
    j["pass"] = s.pass;
    return j;
}

Json to_json(const ProofTrace& t)
{
    Json j;
    j["name"] = t.name;
    j["passed"] = t.passed();
    Json steps = Json::array();
    for (const auto& s : t.steps)
        steps.push_back(to_json(s));
    j["steps"] = std::move(steps);
    Json obs = Json::array();
    for (const auto& s : t.observations)
        obs.push_back(to_json(s));
    j["observations"] = std::move(obs);
    j["notes"] = t.notes;
    if (t.coverage)
        j["coverage"] = to_json(*t.coverage);
    return j;
}

Json to_json(const ScanResult& r)
{
    Json j;
    j["field"] = to_json(r.field);
    j["dim"] = r.dim;
    j["seed"] = r.seed;
    j["family"] = to_string(r.family);
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["size"] = row.size;
        x["trials"] = row.trials;
        x["covered"] = row.covered;
        x["inconclusive"] = row.inconclusive;
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json describe_input(const PointSet& e, const std::string& source)
{
    Json j;
    j["source"] = source;
    j["field"] = to_json(e.field().spec());
    j["dim"] = e.dim();
    j["size"] = e.size();
    return j;
}

} // namespace volset::report
