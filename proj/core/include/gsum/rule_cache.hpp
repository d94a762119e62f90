#pragma once

#include "gsum/rule_core.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace gsum {

inline constexpr int kRuleFileVersion = 1;

/// File name of the cached n-point rule inside a cache directory.
std::string rule_file_name(std::size_t n);

/// Serializes a rule as {version, n, nodes[], weights[]} with 17 significant
/// digits per value.
std::string rule_to_json(const SummationRule& rule);

/// Parses and validates a rule; throws CorruptCache on malformed text or a
/// violated invariant, and when the stored n differs from expected_n.
SummationRule rule_from_json(const std::string& text, std::size_t expected_n);

/// Writes <dir>/rule_<n>.json through a temporary file and rename, so a
/// concurrent reader sees either the old or the new file.
void store_rule(const SummationRule& rule, const std::filesystem::path& dir);

/// Throws NotFound if the file is absent, CorruptCache if it fails validation.
SummationRule load_rule(std::size_t n, const std::filesystem::path& dir);

/// Process-wide memo of built rules, optionally backed by a cache directory.
/// Thread-safe; returned rules are immutable.
class RuleCache {
public:
    RuleCache() = default;
    explicit RuleCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::shared_ptr<const SummationRule> get(std::size_t n);

    const std::optional<std::filesystem::path>& directory() const noexcept { return dir_; }

    /// Number of rules built from scratch (not loaded, not memoized).
    std::size_t builds() const;

private:
    std::optional<std::filesystem::path> dir_;
    mutable std::mutex mutex_;
    std::map<std::size_t, std::shared_ptr<const SummationRule>> rules_;
    std::size_t builds_ = 0;
};

} // namespace gsum
