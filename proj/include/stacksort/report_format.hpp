#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stacksort/lab.hpp"
#include "stacksort/verify.hpp"

namespace stacksort {

using Record = nlohmann::ordered_json;

// JSON number when it fits in 64 bits, decimal string otherwise.
Record big_to_json(const BigInt& v);

// wall_time is included only when `timing` is set so output is reproducible by default.
Record to_record(const ImageReport& r, bool compact, bool timing);
Record to_record(const VerificationReport& r);
Record to_record(const ExploreRow& r, std::size_t m);

// One compact JSON object per line.
void write_jsonl(std::ostream& out, const std::vector<Record>& rows);

/// Header from the first row's keys, then one line per row. Arrays are
/// joined with ';', nested objects flattened to k=v pairs; fields holding
/// commas or quotes are quoted.
void write_csv(std::ostream& out, const std::vector<Record>& rows);

}  // namespace stacksort
