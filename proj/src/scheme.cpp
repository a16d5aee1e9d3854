#include "anonrs/scheme.hpp"

#include <charconv>
#include <map>
#include <string>

#include "anonrs/error.hpp"

namespace anonrs {
namespace {

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

std::string_view field_value(std::string_view line, std::string_view key) {
  if (line.substr(0, key.size()) != key || line.size() < key.size() + 2 ||
      line.substr(key.size(), 2) != ": ") {
    raise(Errc::parse, "expected '" + std::string(key) + ": ...', got '" + std::string(line) + "'");
  }
  return line.substr(key.size() + 2);
}

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    raise(Errc::parse, std::string("bad ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

const char* to_string(Certification c) {
  switch (c) {
    case Certification::full: return "full";
    case Certification::sampled: return "sampled";
    case Certification::none: return "none";
  }
  return "none";
}

Certification parse_certification(std::string_view text) {
  if (text == "full") return Certification::full;
  if (text == "sampled") return Certification::sampled;
  if (text == "none") return Certification::none;
  raise(Errc::parse, "unknown certification '" + std::string(text) + "'");
}

void require_distinct(std::span<const Element> alpha) {
  std::map<Element, std::size_t> first;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    auto [it, fresh] = first.emplace(alpha[i], i + 1);
    if (!fresh) {
      raise(Errc::duplicate_alpha, "alpha_" + std::to_string(it->second) + " = alpha_" +
                                       std::to_string(i + 1) + " = " + alpha[i].to_string());
    }
  }
}

void validate_scheme(const Scheme& scheme) {
  if (scheme.k < 1 || 2 * scheme.k - 1 > scheme.n) {
    raise(Errc::contract, "need 1 <= 2k-1 <= n (n=" + std::to_string(scheme.n) +
                              ", k=" + std::to_string(scheme.k) + ")");
  }
  if (scheme.alpha.size() != static_cast<std::size_t>(scheme.n)) {
    raise(Errc::contract, "expected " + std::to_string(scheme.n) + " evaluation points, got " +
                              std::to_string(scheme.alpha.size()));
  }
  for (std::size_t i = 0; i < scheme.alpha.size(); ++i) {
    if (!(scheme.alpha[i].field() == scheme.field)) {
      raise(Errc::field_mismatch, "alpha_" + std::to_string(i + 1) + " is from another field");
    }
    if (scheme.alpha[i].is_zero()) raise(Errc::contract, "alpha_" + std::to_string(i + 1) + " is zero");
  }
  require_distinct(scheme.alpha);
}

std::string write_scheme(const Scheme& scheme) {
  std::string out = "anonrs-scheme v1\n";
  out += "field: " + scheme.field.describe() + "\n";
  out += "n: " + std::to_string(scheme.n) + "\n";
  out += "k: " + std::to_string(scheme.k) + "\n";
  out += std::string("certified: ") + to_string(scheme.certified) + "\n";
  out += "alpha:";
  for (const auto& a : scheme.alpha) out += " " + scheme.field.format(a);
  out += "\n";
  return out;
}

Scheme read_scheme(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.size() != 6) raise(Errc::parse, "scheme file must have 6 lines");
  if (lines[0] != "anonrs-scheme v1") raise(Errc::parse, "missing 'anonrs-scheme v1' header");
  Field field = Field::parse_description(field_value(lines[1], "field"));
  Scheme s{parse_int(field_value(lines[2], "n"), "n"), parse_int(field_value(lines[3], "k"), "k"),
           field, {}, parse_certification(field_value(lines[4], "certified"))};
  if (lines[5] != "alpha:") {
    std::string_view rest = field_value(lines[5], "alpha");
    while (!rest.empty()) {
      const std::size_t sp = rest.find(' ');
      const std::string_view tok = rest.substr(0, sp);
      if (!tok.empty()) s.alpha.push_back(field.parse(tok));
      if (sp == std::string_view::npos) break;
      rest.remove_prefix(sp + 1);
    }
  }
  if (s.n < 1 || s.alpha.size() != static_cast<std::size_t>(s.n)) {
    raise(Errc::parse, "n=" + std::to_string(s.n) + " but " + std::to_string(s.alpha.size()) +
                           " alpha entries");
  }
  if (s.k < 1) raise(Errc::parse, "k must be positive");
  return s;
}

std::string write_shares(const Field& field, std::span<const Element> shares) {
  std::string out = "anonrs-shares v1\n";
  for (const auto& e : shares) out += field.format(e) + "\n";
  return out;
}

std::vector<Element> read_shares(const Field& field, std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0] != "anonrs-shares v1") {
    raise(Errc::parse, "missing 'anonrs-shares v1' header");
  }
  std::vector<Element> out;
  for (std::size_t i = 1; i < lines.size(); ++i) out.push_back(field.parse(lines[i]));
  return out;
}

}  // namespace anonrs
