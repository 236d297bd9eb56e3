#pragma once

// JSON encodings of the library's values. Key order is fixed so output is
// byte-stable.

#include <nlohmann/json.hpp>

#include <string_view>

#include "hatsplit/complex.hpp"
#include "hatsplit/homology.hpp"
#include "hatsplit/link_graph.hpp"
#include "hatsplit/multigraph.hpp"
#include "hatsplit/split_search.hpp"
#include "hatsplit/word_model.hpp"

namespace hatsplit {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "1.0.0";
// Bumped whenever a document layout below changes incompatibly.
inline constexpr int kComplexSchema = 1;
inline constexpr int kGraphSchema = 1;
inline constexpr int kCertificateSchema = 1;

Json to_json(const HomologySummary& h);
Json to_json(const Multigraph& g);
Json to_json(const Multigraph& g, const VertexInvolution& alpha);  // {"pairs":[[u,v],..]}
Json to_json(const LinkGraph& link);
Json to_json(const SimplicialComplex& c);
Json to_json(const CollapseSequence& s);
Json to_json(const SplitCertificate& cert);
Json to_json(const SearchReport& r);

// Inverses; throw ParseError on malformed documents.
Multigraph multigraph_from_json(const Json& j);
VertexInvolution involution_from_json(const Multigraph& g, const Json& j);
SimplicialComplex complex_from_json(const Json& j);
TargetGraph target_from_json(const Json& j);
CollapseSequence collapse_from_json(const Json& j);
SplitCertificate certificate_from_json(const Json& j);

}  // namespace hatsplit
