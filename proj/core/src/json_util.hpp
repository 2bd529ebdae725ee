// Internal JSON helpers. Not installed; public headers stay free of the
// JSON dependency.
#ifndef BYZFUSION_SRC_JSON_UTIL_HPP
#define BYZFUSION_SRC_JSON_UTIL_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace byzfusion::detail {

using nlohmann::json;

// Error with enough context to point the user at the offending spot.
class JsonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::size_t line_of_offset(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

inline json parse_or_throw(const std::string& text,
                           const std::string& source_name) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    std::ostringstream msg;
    msg << source_name << ":" << line_of_offset(text, err.byte)
        << ": " << err.what();
    throw JsonError(msg.str());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw JsonError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename T>
T require(const json& obj, const std::string& key,
          const std::string& context) {
  if (!obj.contains(key)) {
    throw JsonError(context + ": missing required key \"" + key + "\"");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& err) {
    throw JsonError(context + ": bad value for \"" + key + "\": " + err.what());
  }
}

template <typename T>
T get_or(const json& obj, const std::string& key, T fallback,
         const std::string& context) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& err) {
    throw JsonError(context + ": bad value for \"" + key + "\": " + err.what());
  }
}

}  // namespace byzfusion::detail

#endif  // BYZFUSION_SRC_JSON_UTIL_HPP
