#pragma once

#include <string>
#include <vector>

#include "multibump/grid.hpp"

namespace multibump {

// Field dump schema tag; bump on layout changes.
inline constexpr const char* kFieldSchema = "multibump-field-v1";

/// CSV dump: '#'-prefixed header with schema tag and grid metadata, then one
/// "x,z,value" row per node (x-fastest). Written atomically (tmp + rename).
void write_field_csv(const std::string& path, const Field2D& f);
Field2D read_field_csv(const std::string& path);

/// Binary dump: magic, grid metadata, raw little-endian doubles.
void write_field_binary(const std::string& path, const Field2D& f);
Field2D read_field_binary(const std::string& path);

/// Plain CSV table with a '#' header naming the columns.
void write_table_csv(const std::string& path,
                     const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows);

/// Atomic whole-file write used for all artifacts.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace multibump
