#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "infinilie/suites.hpp"

namespace infinilie {

namespace {

std::int64_t to_int(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw ConfigError("config: " + key + " is not an integer: '" + text + "'");
  }
}

bool to_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("config: " + key + " is not a boolean: '" + text + "'");
}

}  // namespace

SuiteConfig load_config(const std::string& path, SuiteConfig base) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) throw ConfigError("config: key '" + section + "' outside a section");
    for (const auto& [key, node] : body) {
      const std::string value = node.get_value<std::string>();
      const std::string full = section + "." + key;
      if (section == "run") {
        if (key == "trunc") {
          try {
            base.trunc = Exponent::parse(value);
          } catch (const Error&) {
            throw ConfigError("config: run.trunc is not a rational: '" + value + "'");
          }
        } else if (key == "ramification") {
          base.ramification = to_int(full, value);
        } else if (key == "seed") {
          const std::int64_t s = to_int(full, value);
          if (s < 0) throw ConfigError("config: run.seed must be non-negative");
          base.seed = static_cast<std::uint64_t>(s);
        } else if (key == "height") {
          base.height = to_int(full, value);
        } else if (key == "inject_fault") {
          base.inject_fault = to_bool(full, value);
        } else {
          throw ConfigError("config: unknown key " + full);
        }
      } else if (section == "samples") {
        const std::int64_t n = to_int(full, value);
        if (n < 1 || n > 1000000) throw ConfigError("config: " + full + " must be between 1 and 1000000");
        base.samples[key] = static_cast<int>(n);
      } else {
        throw ConfigError("config: unknown section [" + section + "]");
      }
    }
  }
  base.validate();
  return base;
}

}  // namespace infinilie
