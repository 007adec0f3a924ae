#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "childci/types.hpp"

namespace childci {

inline constexpr const char* kSessionSchema = "childci-q/1";

// Parses one session-log document. Guarantees on return: exactly six test
// records ordered by test_id, events stable-sorted by (t, pointer_id), every
// type invariant checked. Throws SchemaError / MonotonicityError / RangeError.
SessionLog parse_session(const nlohmann::json& doc);
SessionLog parse_session_text(const std::string& text);
SessionLog load_session(const std::filesystem::path& path);

// Canonical serialization; parse(serialize(x)) == x.
nlohmann::json session_to_json(const SessionLog& log);
std::string serialize_session(const SessionLog& log);
void save_session(const SessionLog& log, const std::filesystem::path& path);

}  // namespace childci
