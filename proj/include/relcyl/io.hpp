#pragma once

#include <string>

#include <json.hpp>

#include "relcyl/axioms.hpp"
#include "relcyl/duality.hpp"
#include "relcyl/game.hpp"
#include "relcyl/represent.hpp"
#include "relcyl/setalg.hpp"
#include "relcyl/transform.hpp"

// Canonical JSON for every file the toolkit reads or writes. Keys come out in
// a fixed order and sets sorted, so equal values serialize to equal bytes.
// Readers throw FormatError with a path-like location on malformed input.
namespace relcyl::io {

using Json = nlohmann::ordered_json;

Json to_json(Element e);  // sorted atom indices
Element element_from_json(const Json& j, int num_atoms, const std::string& where = "element");

Json to_json(const Signature& s);
Signature signature_from_json(const Json& j);

// {"dimension","atoms","signature","c","sub_dual","swap_dual","d"}; absent
// operators are null. Structure and index ranges are checked here; the
// algebraic conditions are left to validate_bao.
Json to_json(const FiniteBAO& a);
FiniteBAO algebra_from_json(const Json& j);

Json to_json(const Unit& u);
Unit unit_from_json(const Json& j);

Json to_json(const Network& n);
Network network_from_json(const Json& j);

Json to_json(const Move& m);
Json to_json(const TranscriptEntry& e);
Json to_json(const Play& p);

Json to_json(const Representation& r);
Representation representation_from_json(const Json& j);
Json to_json(const VerifyReport& r);

Json to_json(const Frame& f);
Frame frame_from_json(const Json& j);

Json to_json(const SubstWord& w);  // [["sub",i,j], ["swap",i,j], ...]
SubstWord word_from_json(const Json& j);

Json to_json(const Violation& v);
Json to_json(const ViolationReport& r);

Json read_file(const std::string& path);
// Two-space indentation, ASCII only, trailing newline.
std::string dump(const Json& j);
void write_file(const std::string& path, const Json& j);

}  // namespace relcyl::io
