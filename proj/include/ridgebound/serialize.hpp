#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ridgebound/codes.hpp"
#include "ridgebound/gram.hpp"
#include "ridgebound/lattice.hpp"
#include "ridgebound/packing.hpp"
#include "ridgebound/rates.hpp"
#include "ridgebound/simulate.hpp"
#include "ridgebound/variation.hpp"
#include "ridgebound/verification.hpp"

namespace ridgebound {

using Json = nlohmann::ordered_json;

// NaN and infinities become null.
Json number_or_null(double x);
// %.17g, "nan" / "inf" / "-inf" for non-finite values.
std::string format_double(double x);

Json to_json(const Codebook& cb);
Codebook codebook_from_json(const Json& j);

Json directions_to_json(const std::vector<RidgeDirection>& dirs, int d, int v0);
std::vector<RidgeDirection> directions_from_json(const Json& j);

Json to_json(const PackingSet& ps);
PackingSet packing_from_json(const Json& j);

Json to_json(const VerificationReport& report);
Json to_json(const PackingReport& report);
Json to_json(const CodebookReport& report);

Json to_json(const ConditionOutcome& c);
Json to_json(const RateConstants& c);
Json to_json(const RateResult& r);

Json to_json(const ExperimentReport& r);

Json to_json(const IdentityGridReport& r);
Json to_json(const std::map<std::string, VariationConstant>& constants);
Json to_json(const ClassMapping& m);

// Header "row,c0,c1,..."; the first column is the row index.
std::string gram_to_csv(const GramMatrix& g);
std::string rate_table_to_csv(const std::vector<RateTableRow>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace ridgebound
