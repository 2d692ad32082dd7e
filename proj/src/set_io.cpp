#include "sumdens/set_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace sumdens {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    auto nl = text.find('\n');
    out.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

bool skippable(std::string_view line) { return line.empty() || line.front() == '#'; }

std::string at_line(std::size_t i) { return "line " + std::to_string(i + 1) + ": "; }

std::uint64_t parse_u64(std::string_view s, const std::string& where, int base = 10) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw ParseError(where + "bad integer '" + std::string(s) + "'");
  }
  return v;
}

TorusSet torus_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("intervals") || !j["intervals"].is_array()) {
    throw ParseError("json: expected an object with an \"intervals\" array");
  }
  RawIntervalList raw;
  std::size_t i = 0;
  for (const auto& item : j["intervals"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
      throw ParseError("json: interval " + std::to_string(i) + " must be a pair of rational strings");
    }
    raw.push_back({parse_rational(item[0].get<std::string>()), parse_rational(item[1].get<std::string>())});
    ++i;
  }
  return TorusSet::normalize(raw);
}

TorusSet torus_from_lines(std::string_view text) {
  RawIntervalList raw;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = trim(lines[i]);
    if (skippable(line)) continue;
    std::istringstream in{std::string(line)};
    std::string lo, hi, extra;
    if (!(in >> lo >> hi) || (in >> extra)) throw ParseError(at_line(i) + "expected 'p/q r/s'");
    try {
      raw.push_back({parse_rational(lo), parse_rational(hi)});
    } catch (const ParseError& e) {
      throw ParseError(at_line(i) + e.what());
    }
  }
  return TorusSet::normalize(raw);
}

}  // namespace

std::string torus_to_json(const TorusSet& a) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& iv : a.intervals()) arr.push_back({to_string(iv.lo), to_string(iv.hi)});
  return nlohmann::json{{"intervals", arr}}.dump() + "\n";
}

std::string torus_to_lines(const TorusSet& a) {
  std::string out;
  for (const auto& iv : a.intervals()) out += to_string(iv.lo) + " " + to_string(iv.hi) + "\n";
  return out;
}

TorusSet parse_torus_set(std::string_view text) {
  auto t = trim(text);
  if (!t.empty() && t.front() == '{') return torus_from_json(t);
  return torus_from_lines(t);
}

std::string integer_to_text(const FiniteIntegerSet& a) {
  std::string out = "horizon " + std::to_string(a.horizon()) + "\n";
  for (auto m : a.members()) {
    out += std::to_string(m);
    out += '\n';
  }
  return out;
}

std::string integer_to_bitmap(const FiniteIntegerSet& a) {
  std::string out = "bitmap " + std::to_string(a.horizon()) + "\n";
  char buf[20];
  for (auto w : a.words()) {
    std::snprintf(buf, sizeof buf, "%016llx\n", static_cast<unsigned long long>(w));
    out += buf;
  }
  return out;
}

FiniteIntegerSet parse_integer_set(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && skippable(trim(lines[i]))) ++i;
  if (i == lines.size()) throw ParseError("empty integer-set file");
  auto header = trim(lines[i]);
  auto sp = header.find(' ');
  std::string_view kind = header.substr(0, sp);
  if (sp == std::string_view::npos || (kind != "horizon" && kind != "bitmap")) {
    throw ParseError(at_line(i) + "expected 'horizon N' or 'bitmap N'");
  }
  const std::uint64_t horizon = parse_u64(trim(header.substr(sp + 1)), at_line(i));
  if (horizon < 1) throw ParseError(at_line(i) + "horizon must be >= 1");
  ++i;
  if (kind == "horizon") {
    FiniteIntegerSet a(horizon);
    for (; i < lines.size(); ++i) {
      auto line = trim(lines[i]);
      if (skippable(line)) continue;
      std::uint64_t m = parse_u64(line, at_line(i));
      if (m >= horizon) throw ParseError(at_line(i) + "member " + std::to_string(m) + " outside horizon");
      a.insert(m);
    }
    return a;
  }
  std::vector<std::uint64_t> words;
  for (; i < lines.size(); ++i) {
    auto line = trim(lines[i]);
    if (skippable(line)) continue;
    if (line.size() > 16) throw ParseError(at_line(i) + "bitmap word longer than 16 hex digits");
    words.push_back(parse_u64(line, at_line(i), 16));
  }
  if (words.size() != (horizon + 63) / 64) {
    throw ParseError("bitmap has " + std::to_string(words.size()) + " words, expected " +
                     std::to_string((horizon + 63) / 64));
  }
  if (horizon % 64 != 0 && (words.back() >> (horizon % 64)) != 0) {
    throw ParseError("bitmap has bits set beyond the horizon");
  }
  return FiniteIntegerSet::from_words(horizon, std::move(words));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace sumdens
