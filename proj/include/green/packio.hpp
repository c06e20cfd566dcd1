#pragma once

#include <string>

#include "green/springer.hpp"

namespace green {

/// Parses pack text (UTF-8 JSON) into a DataPack. Structural errors only;
/// semantic validation happens in validate_pack.
DataPack parse_pack_text(const std::string& text);

/// Canonical serialization; load of a dump reproduces the dump bit-exactly.
std::string dump_pack_text(const DataPack& pack);

/// Parse + full validation against the type named inside the pack.
/// Returns the pack together with the constructed group data via out-params
/// free of charge since validation needs them anyway.
DataPack load_pack(const std::string& text);

}  // namespace green
