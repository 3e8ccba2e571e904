#ifndef KGD_JSON_IO_HPP
#define KGD_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "kgd/configuration.hpp"
#include "kgd/group.hpp"
#include "kgd/matrix.hpp"
#include "kgd/strategies.hpp"

namespace kgd {

using json = nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings beyond that; both forms parse back bit-exactly.
json to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

json to_json(const Rational& q);           // [num, den]
Rational rational_from_json(const json& j);

// {"radicands": [s...], "coeffs": [[num,den]...]}
json to_json(const ExactScalar& x);
ExactScalar exact_scalar_from_json(const json& j);

// {"m1", "m2", "radicands", "entries": [[...coeff pairs per radicand...]]}
json to_json(const ExactMat& m);
ExactMat exact_mat_from_json(const json& j);

json to_json(const SignStrategy& s);
SignStrategy sign_strategy_from_json(const json& j);

// {"name","d","m","radicands","rows",...}
json to_json(const Configuration& c);
Configuration configuration_from_json(const json& j);

// {"m1","m2","generators":[{"rows":[signed 1-based...],"cols":[...]}]}
json to_json(const SignedPermutationGroup& g);
SignedPermutationGroup group_from_json(const json& j);

/// Instance file reader: JSON matrix object or plain text
/// "m1 m2" header followed by m1*m2 numbers.
ExactMat read_instance_file(const std::string& path);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace kgd

#endif  // KGD_JSON_IO_HPP
