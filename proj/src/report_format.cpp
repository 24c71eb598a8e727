#include "stacksort/report_format.hpp"

#include <limits>

#include "stacksort/text.hpp"

namespace stacksort {

Record big_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return Record(v.convert_to<std::uint64_t>());
  }
  return Record(v.str());
}

Record to_record(const ImageReport& r, bool compact, bool timing) {
  Record j;
  j["n"] = r.n;
  j["t"] = r.t;
  j["count"] = big_to_json(r.count);
  j["shards"] = r.shards;
  if (timing) j["wall_time"] = r.wall_time.count();
  if (r.elements) {
    Record elems = Record::array();
    for (const auto& p : *r.elements) elems.push_back(format_permutation(p, compact));
    j["elements"] = std::move(elems);
  }
  return j;
}

Record to_record(const VerificationReport& r) {
  Record j;
  j["claim"] = to_string(r.claim);
  Record params = Record::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = std::move(params);
  j["expected"] = big_to_json(r.expected);
  j["observed"] = big_to_json(r.observed);
  j["mismatches"] = r.mismatches;
  j["pass"] = r.pass;
  if (!r.series.empty()) {
    Record series = Record::array();
    for (const auto& [n, c] : r.series) series.push_back({n, big_to_json(c)});
    j["series"] = std::move(series);
  }
  j["detail"] = r.detail;
  return j;
}

Record to_record(const ExploreRow& r, std::size_t m) {
  Record j;
  j["m"] = m;
  j["n"] = r.n;
  j["count"] = big_to_json(r.count);
  j["expected"] = r.expected ? big_to_json(*r.expected) : Record(nullptr);
  j["label"] = r.label;
  return j;
}

void write_jsonl(std::ostream& out, const std::vector<Record>& rows) {
  for (const auto& r : rows) out << r.dump() << '\n';
}

namespace {

std::string scalar_text(const Record& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string cell_text(const Record& v) {
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ';';
      if (e.is_array()) {
        std::string inner;
        for (const auto& x : e) inner += (inner.empty() ? "" : ":") + scalar_text(x);
        s += inner;
      } else {
        s += scalar_text(e);
      }
    }
    return s;
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, x] : v.items()) s += (s.empty() ? "" : ";") + k + "=" + scalar_text(x);
    return s;
  }
  return scalar_text(v);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<Record>& rows) {
  if (rows.empty()) return;
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
  out << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out << (i ? "," : "");
      if (r.contains(keys[i])) out << csv_escape(cell_text(r.at(keys[i])));
    }
    out << '\n';
  }
}

}  // namespace stacksort
