#pragma once

// JSON economy files and vector files. Schema in docs/economy-format.md.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bundlecon/preferences.hpp"

namespace bundlecon {

struct LoadOptions {
  /// Unknown fields become notes instead of SchemaError.
  bool lenient = false;
};

/// Throws ParseError ("line L, column C: ...") on malformed JSON and
/// SchemaError naming the offending field path on schema violations.
Economy parseEconomy(std::string_view text, LoadOptions options = {});
Economy loadEconomy(const std::filesystem::path& path, LoadOptions options = {});

/// Canonical JSON text; parseEconomy(serializeEconomy(e)) reproduces e with
/// identical values on every bundle.
std::string serializeEconomy(const Economy& e);
void saveEconomy(const Economy& e, const std::filesystem::path& path);

/// Serializes one valuation spec as a JSON combinator tree.
std::string serializeValuation(const Valuation& v);

/// A vector file: {"vectors": [[...], ...]} with optional "goods" naming
/// the coordinates. All vectors must share one length.
std::vector<IntVector> parseVectors(std::string_view text, LoadOptions options = {});
std::vector<IntVector> loadVectors(const std::filesystem::path& path, LoadOptions options = {});

}  // namespace bundlecon
