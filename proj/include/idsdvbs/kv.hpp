#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace idsdvbs {

// Line-oriented "key=value" text. Blank lines and lines starting with '#'
// are ignored; key order is preserved on output.
class KeyValues {
public:
    void set(std::string key, std::string value);
    bool has(std::string_view key) const;

    /// Throws DecodeError naming the missing key.
    const std::string& get(std::string_view key) const;

    const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }

    std::string to_text() const;

    /// Throws DecodeError (position = line number) on malformed lines or
    /// duplicate keys.
    static KeyValues parse(std::string_view text);

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace idsdvbs
