#pragma once

// JSON encodings of the library's exchange types.
//
//   Partition              [4,3,2,2,2,2,1]
//   ExactMatrix            {"rows":R,"cols":C,"entries":[["1","-1/2",...],...]}
//   UBParams               {"n":n,"m":m,"h":[..],"u":[..],"d":[..],"v":[[],["1"],..]}
//   CommutationCertificate {"case":"b","k":2,"mu":[3],"delta":"0"}
//   JordanReport           {"rank_sequence":[..],"jordan_type":[..],"nilpotency_index":q}
//   OracleReport           {"hook":[n,m],"grid":[..],"attained":[[..],..],
//                           "missing_vs_theorem":[..],"extra_vs_theorem":[..]}
//
// Rationals are written as canonical strings ("3", "-1/2"); readers also
// accept JSON integers.

#include <json.hpp>

#include "hookcomm/classifier.hpp"
#include "hookcomm/exact_matrix.hpp"
#include "hookcomm/hook_structure.hpp"
#include "hookcomm/oracle.hpp"
#include "hookcomm/partition.hpp"

namespace hookcomm {

using Json = nlohmann::json;

Json to_json_value(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json_value(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json_value(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

Json to_json_value(const HookType& hook, const UBParams& params);
std::pair<HookType, UBParams> ub_params_from_json(const Json& j);

Json to_json_value(const CommutationCertificate& cert);
CommutationCertificate certificate_from_json(const Json& j);

Json to_json_value(const JordanReport& report);
Json to_json_value(const OracleReport& report);
Json to_json_value(const std::vector<CommutingEntry>& entries);

}  // namespace hookcomm
