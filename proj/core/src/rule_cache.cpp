#include "gsum/rule_cache.hpp"

#include "gsum/errors.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace gsum {
namespace {

void append_double(std::string& out, double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    out.append(buf, res.ptr);
}

void append_array(std::string& out, const std::vector<double>& values)
{
    out += '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0)
            out += ", ";
        append_double(out, values[i]);
    }
    out += ']';
}

} // namespace

std::string rule_file_name(std::size_t n)
{
    return "rule_" + std::to_string(n) + ".json";
}

std::string rule_to_json(const SummationRule& rule)
{
    std::string out = "{\"version\": " + std::to_string(kRuleFileVersion) +
                      ", \"n\": " + std::to_string(rule.size()) + ", \"nodes\": ";
    append_array(out, rule.nodes);
    out += ", \"weights\": ";
    append_array(out, rule.weights);
    out += "}\n";
    return out;
}

SummationRule rule_from_json(const std::string& text, std::size_t expected_n)
{
    SummationRule rule;
    try {
        const auto doc = nlohmann::json::parse(text);
        if (doc.at("version").get<int>() != kRuleFileVersion)
            throw CorruptCache("unsupported rule file version");
        if (doc.at("n").get<std::size_t>() != expected_n)
            throw CorruptCache("rule file holds n = " + doc.at("n").dump() + ", expected " +
                               std::to_string(expected_n));
        rule.nodes = doc.at("nodes").get<std::vector<double>>();
        rule.weights = doc.at("weights").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw CorruptCache(std::string("malformed rule file: ") + e.what());
    }
    if (rule.size() != expected_n)
        throw CorruptCache("rule file node count does not match n");
    try {
        validate_rule(rule);
    } catch (const ArgumentError& e) {
        throw CorruptCache(std::string("invalid cached rule: ") + e.what());
    }
    return rule;
}

void store_rule(const SummationRule& rule, const std::filesystem::path& dir)
{
    namespace fs = std::filesystem;
    validate_rule(rule);
    fs::create_directories(dir);

    const fs::path target = dir / rule_file_name(rule.size());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot write " + tmp.string());
        out << rule_to_json(rule);
        if (!out.flush())
            throw Error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

SummationRule load_rule(std::size_t n, const std::filesystem::path& dir)
{
    const auto path = dir / rule_file_name(n);
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw NotFound("no cached rule at " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return rule_from_json(buf.str(), n);
}

std::shared_ptr<const SummationRule> RuleCache::get(std::size_t n)
{
    std::lock_guard lock(mutex_);
    if (auto it = rules_.find(n); it != rules_.end())
        return it->second;

    std::shared_ptr<const SummationRule> rule;
    if (dir_) {
        try {
            rule = std::make_shared<const SummationRule>(load_rule(n, *dir_));
        } catch (const NotFound&) {
        } catch (const CorruptCache&) {
            // rebuilt and overwritten below
        }
    }
    if (!rule) {
        rule = std::make_shared<const SummationRule>(build_rule(n));
        ++builds_;
        if (dir_) {
            try {
                store_rule(*rule, *dir_);
            } catch (const std::exception&) {
                // a read-only cache directory only costs rebuilds
            }
        }
    }
    rules_.emplace(n, rule);
    return rule;
}

std::size_t RuleCache::builds() const
{
    std::lock_guard lock(mutex_);
    return builds_;
}

} // namespace gsum
