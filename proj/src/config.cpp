#include "grammod/config.hpp"

#include <fstream>
#include <sstream>

#include "grammod/error.hpp"

namespace grammod {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

bool parseBool(const std::string& v, int line) {
    if (v == "true" || v == "1" || v == "on")
        return true;
    if (v == "false" || v == "0" || v == "off")
        return false;
    throw ParseError("expected a boolean, got '" + v + "'", line, 1);
}

std::int64_t parseInt(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        std::int64_t n = std::stoll(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument(v);
        return n;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + v + "'", line, 1);
    }
}

} // namespace

Config parseConfig(std::string_view text) {
    Config cfg;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineNo = 0;
    while (std::getline(in, raw)) {
        ++lineNo;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value", lineNo, 1);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "maxMatches")
            cfg.maxMatches = parseInt(value, lineNo);
        else if (key == "commonOverlapCap")
            cfg.commonOverlapCap = static_cast<int>(parseInt(value, lineNo));
        else if (key == "commonConnected")
            cfg.commonConnected = parseBool(value, lineNo);
        else if (key == "repeatCap")
            cfg.repeatCap = parseInt(value, lineNo);
        else if (key == "subset-new-only")
            cfg.subsetNewOnly = parseBool(value, lineNo);
        else if (key == "storeAllMatches")
            cfg.storeAllMatches = parseBool(value, lineNo);
        else if (key == "maxHostGraphVertices")
            cfg.maxHostGraphVertices = static_cast<int>(parseInt(value, lineNo));
        else
            throw ParseError("unknown config key '" + key + "'", lineNo, 1);
    }
    return cfg;
}

Config parseConfigFile(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parseConfig(ss.str());
}

} // namespace grammod
