#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "specladder/errors.hpp"

namespace specladder {

// Flat key-value configuration: lines of the form `section.key = value`,
// with `#` comments and blank lines ignored. The built-in defaults mirror
// the checked-in specladder.cfg; a file loaded on top only overrides the
// keys it names. Lookup order in the CLI: --config flag, then the
// SPECLADDER_CONFIG environment variable, then the defaults.
class Config {
public:
    static Config defaults();

    // Parses `text` and overlays it onto the defaults. Throws
    // InvalidParameter with the line number on malformed input.
    static Config parse(const std::string& text);

    // Reads and parses a file; throws InvalidParameter when unreadable.
    static Config load(const std::string& path);

    // Resolves the active configuration: explicit path if nonempty, else the
    // SPECLADDER_CONFIG environment variable, else defaults.
    static Config resolve(const std::string& explicit_path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    double get_double(const std::string& key) const;
    std::size_t get_count(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    void set(const std::string& key, const std::string& value);

    const std::map<std::string, std::string>& raw() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

}  // namespace specladder
