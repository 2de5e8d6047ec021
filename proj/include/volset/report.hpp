#pragma once

// JSON views of library results. Keys keep insertion order; sets are sorted
// by element index and vectors appear as integer arrays.

#include <json.hpp>

#include "volset/grassmann.hpp"
#include "volset/proofcheck.hpp"
#include "volset/sets.hpp"

namespace volset::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "volset";
inline constexpr const char* kToolVersion = "1.0.0";

Json to_json(const FieldSpec& spec);
Json to_json(const Vector& v);
Json to_json(const std::vector<Vector>& vs);
Json to_json(const ScalarSet& s);
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);
Json to_json(const CountTable& t);
Json to_json(const CoverageCertificate& c);
Json to_json(const TraceStep& s);
Json to_json(const ProofTrace& t);
Json to_json(const ScanResult& r);

/// Input description: field, dimension and size (points are not repeated).
Json describe_input(const PointSet& e, const std::string& source);

} // namespace volset::report
