#include "sigkit/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sigkit {

namespace {

std::string_view trimmed(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

bool all_digits(std::string_view text) {
  return !text.empty() &&
         std::all_of(text.begin(), text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

BigInt parse_integer(std::string_view digits, bool negative) {
  BigInt value(std::string(digits), 10);
  return negative ? BigInt(-value) : value;
}

}  // namespace

BigRat parse_rational(std::string_view text) {
  std::string_view body = trimmed(text);
  if (body.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed fraction literal");
    BigInt denominator = parse_integer(den, false);
    if (denominator == 0) throw std::invalid_argument("fraction denominator is zero");
    BigRat value(parse_integer(num, negative), denominator);
    value.canonicalize();
    return value;
  }

  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac))
      throw std::invalid_argument("malformed decimal literal");
    std::string digits = std::string(whole) + std::string(frac);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigRat value(parse_integer(digits, negative), scale);
    value.canonicalize();
    return value;
  }

  if (!all_digits(body)) throw std::invalid_argument("malformed integer literal");
  return BigRat(parse_integer(body, negative));
}

std::vector<BigRat> parse_vector_literal(std::string_view text) {
  std::vector<BigRat> entries;
  std::size_t start = 0;
  const std::string body(text);
  while (true) {
    std::size_t comma = body.find(',', start);
    std::string_view token =
        std::string_view(body).substr(start, comma == std::string::npos ? std::string::npos
                                                                        : comma - start);
    entries.push_back(parse_rational(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return entries;
}

LoadedSystem system_from_json(const std::string& text, bool strict) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("min_cut_sets"))
    throw std::invalid_argument("system document needs \"n\" and \"min_cut_sets\"");
  if (!doc["n"].is_number_integer())
    throw std::invalid_argument("\"n\" must be an integer");
  const int n = doc["n"].get<int>();
  if (n < 1) throw std::invalid_argument("\"n\" must be positive");
  if (!doc["min_cut_sets"].is_array())
    throw std::invalid_argument("\"min_cut_sets\" must be an array of arrays");

  std::vector<Subset> sets;
  for (const auto& entry : doc["min_cut_sets"]) {
    if (!entry.is_array()) throw std::invalid_argument("each cut set must be an array");
    std::vector<int> members;
    for (const auto& e : entry) {
      if (!e.is_number_integer()) throw std::invalid_argument("cut set members must be integers");
      members.push_back(e.get<int>());
    }
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
      throw std::invalid_argument("cut set has repeated members");
    sets.emplace_back(n, std::move(members));
  }
  SubsetFamily family(n, std::move(sets));

  bool minimized = false;
  AntichainFamily cuts = [&] {
    try {
      return AntichainFamily(family);
    } catch (const std::invalid_argument&) {
      if (strict)
        throw std::invalid_argument("family is not an antichain of non-empty sets (strict mode)");
      minimized = true;
      return extract_minimal(family);
    }
  }();
  return LoadedSystem{System(std::move(cuts)), minimized};
}

namespace {

void append_member_list(std::string& out, const Subset& s) {
  out += '[';
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.members()[i]);
  }
  out += ']';
}

void append_system_object(std::string& out, const System& system) {
  out += "{\"n\":";
  out += std::to_string(system.n());
  out += ",\"min_cut_sets\":[";
  const auto& sets = system.minimal_cuts().sets().sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ',';
    append_member_list(out, sets[i]);
  }
  out += "]}";
}

void append_count_array(std::string& out, const CountVector& counts) {
  out += '[';
  for (std::size_t i = 0; i < counts.counts().size(); ++i) {
    if (i) out += ',';
    out += counts.counts()[i].get_str();
  }
  out += ']';
}

}  // namespace

std::string system_to_json(const System& system) {
  std::string out;
  append_system_object(out, system);
  return out;
}

std::string signature_to_json(const CountVector& counts) {
  std::string out = "{\"n\":";
  out += std::to_string(counts.n());
  out += ",\"counts\":";
  append_count_array(out, counts);
  out += ",\"signature\":[";
  const SignatureVector s = SignatureVector::from_counts(counts);
  for (std::size_t i = 0; i < s.entries().size(); ++i) {
    if (i) out += ',';
    out += '"';
    out += fraction_string(s.entries()[i]);
    out += '"';
  }
  out += "]}";
  return out;
}

std::string verdict_to_json(const RealizabilityVerdict& verdict) {
  std::string out = "{\"realizable\":";
  out += verdict.realizable ? "true" : "false";
  out += ",\"witness\":";
  if (verdict.witness) {
    append_system_object(out, System(*verdict.witness));
  } else {
    out += "null";
  }
  out += ",\"violation\":";
  if (verdict.violation) {
    const Violation& v = *verdict.violation;
    out += "{\"stage\":\"";
    out += to_string(v.stage);
    out += "\",\"level\":";
    if (v.stage == RejectionStage::not_probability_vector) {
      out += "null";
    } else {
      out += std::to_string(v.level);
    }
    if (v.stage == RejectionStage::shadow_violation) {
      out += ",\"shadow\":";
      out += v.shadow.get_str();
      out += ",\"bound\":";
      out += v.bound.get_str();
    }
    out += '}';
  } else {
    out += "null";
  }
  out += '}';
  return out;
}

std::string verify_to_json(const CountVector& expected, const CountVector& actual) {
  std::string out = "{\"match\":";
  out += expected == actual ? "true" : "false";
  out += ",\"expected\":";
  append_count_array(out, expected);
  out += ",\"actual\":";
  append_count_array(out, actual);
  out += '}';
  return out;
}

std::string achievable_record_to_json(const CountVector& counts, const System& witness) {
  std::string out = "{\"counts\":";
  append_count_array(out, counts);
  out += ",\"witness\":";
  append_system_object(out, witness);
  out += '}';
  return out;
}

}  // namespace sigkit
