#pragma once

#include <string>

namespace gapcert {

/// Hex digest of SHA-256, used for content-addressing inputs in reports.
std::string sha256_hex(const std::string& data);

} // namespace gapcert
