#pragma once

#include <string>

#include <json.hpp>

#include "quiverkit/graded.hpp"
#include "quiverkit/mckay.hpp"
#include "quiverkit/permutation.hpp"
#include "quiverkit/polynomial.hpp"
#include "quiverkit/pretzel.hpp"
#include "quiverkit/quiver.hpp"
#include "quiverkit/spectral.hpp"

namespace quiverkit::io {

// Objects keep insertion order so output is stable and reads naturally.
using json = nlohmann::ordered_json;

// Reads a JSON document from a file, or standard input for "-". Parse
// failures become Error with the byte position in the message.
json read_json(const std::string& path);
json parse_json(const std::string& text, const std::string& origin = "<input>");

// {"labels": [...], "adj": [[...], ...]}; labels optional on input.
Quiver quiver_from_json(const json& j);
json to_json(const Quiver& q);

// {"image": [...]}
VertexPermutation permutation_from_json(const json& j);
json to_json(const VertexPermutation& p);

// "p/q", "p", or a JSON integer.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

// {"vertices": [...],
//  "arrows": [{"name", "src", "tgt", "deg"}],
//  "relations": [[{"coef": "p/q", "path": ["a", "b"]}, ...], ...]}
// src and tgt are vertex labels; deg defaults to 1.
GradedPresentation presentation_from_json(const json& j);
json to_json(const GradedPresentation& p);

// {"class_sizes": [...], "chars": [[[re, im], ...], ...], "v_char": [[re, im], ...]}
CharacterTable table_from_json(const json& j);
json to_json(const CharacterTable& t);

// A JSON integer when it fits in 64 bits, a decimal string otherwise.
json bigint_to_json(const BigInt& x);

json to_json(const SpectralCertificate& c);
json to_json(const PretzelFactorization& f);
json to_json(const HilbertTruncation& h);

// Rounds to 12 significant digits, so that JSON output (which prints the
// shortest round-tripping form) is stable across platforms.
double round12(double x);

}  // namespace quiverkit::io
