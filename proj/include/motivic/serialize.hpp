#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "motivic/case_studies.hpp"
#include "motivic/classifier.hpp"
#include "motivic/groebner.hpp"
#include "motivic/yfy.hpp"

namespace motivic::io {

using Json = nlohmann::json;  // std::map objects, so keys come out sorted

Json to_json(const yfy::FanoReport& r);
Json to_json(const yfy::FanoClassResult& r);
Json to_json(const yfy::NoEmptyTrace& t);
Json to_json(const yfy::RelDimFacts& f);
/// Citations are attached only with `explain`.
Json to_json(const bounds::Verdict& v, bool explain = false);
Json to_json(const bounds::VarietyProfile& p);
Json to_json(const studies::Certificate& c, bool explain = false);
Json to_json(const ideal::GroebnerBasis& gb);
Json to_json(const gen::GenerationResult& r);
Json to_json(const std::vector<MotivicClass>& classes);
Json to_json(const MeasureValue& v);

/// Two-space indented dump with a trailing newline. Parsing the output and
/// dumping again reproduces it byte for byte.
std::string dump(const Json& j);

}  // namespace motivic::io
